"""Top-level decision procedures and the divisor report.

Each named condition gets a verdict in {true, false, undecided}; every
false verdict carries a witness and every true verdict a certificate
reference.  Proven equivalences between conditions are re-verified on
every run and recorded in the report's consistency list; a violated
equivalence raises ConsistencyError (it falsifies the implementation,
not the mathematics).
"""

from __future__ import annotations

import json

from .errors import InputError, ConsistencyError
from .poly import Poly, poly_str, parse
from .groebner import radical_test, local_dim
from .germs import DivisorGerm, jacobian_ideal, is_free, euler_field
from .fractional import FractionalIdeal
from .residues import (MeroFraction, residue_module, mu_residues,
                       gorenstein_singular_locus, direct_sum_check,
                       validate_factorization)
from .normalization import (normalization_from_branches,
                            normalization_from_smooth_factors,
                            is_weakly_holomorphic, _curve_setup)

TRUE, FALSE, UNDECIDED = "true", "false", "undecided"


def _tri(b):
    return TRUE if b else FALSE


class DivisorReport:
    """Per-condition verdicts with witnesses, verified equivalences, and
    reproducibility data."""

    def __init__(self, data):
        self.data = data

    def __getitem__(self, key):
        return self.data[key]

    @property
    def verdicts(self):
        return self.data["verdicts"]

    @property
    def consistency(self):
        return self.data["consistency"]

    def to_json(self, indent=None):
        return json.dumps(self.data, indent=indent, sort_keys=True)

    @staticmethod
    def from_json(text):
        return DivisorReport(json.loads(text))

    def __eq__(self, other):
        return isinstance(other, DivisorReport) and self.data == other.data

    def to_text(self):
        lines = [f"divisor: {self.data['input']['poly']}  "
                 f"(vars {', '.join(self.data['input']['vars'])})"]
        for key in ("free", "euler_homogeneous", "jacobian_radical",
                    "jacobian_eq_conductor", "residues_weakly_holomorphic",
                    "normal_crossing_at_origin", "gorenstein_singular_locus"):
            lines.append(f"  {key:32s} {self.verdicts[key]}")
        ex = self.data["extras"]
        lines.append(f"  {'mu_residues':32s} ({ex['mu_residues']}, "
                     f"contains_unit={ex['contains_unit']})")
        if ex.get("direct_sum") is not None:
            lines.append(f"  {'direct_sum':32s} {ex['direct_sum']}")
        if ex.get("free_equivalences") is not None:
            t = ex["free_equivalences"]
            lines.append(f"  {'free equivalences (B, D, G)':32s} "
                         f"({t['B']}, {t['D']}, {t['G']})")
        lines.append(f"  {'suspension_classification':32s} {ex['suspension_classification']}")
        for w, txt in sorted(self.data["witnesses"].items()):
            lines.append(f"  witness[{w}]: {txt}")
        lines.append("  verified: " + ", ".join(self.consistency))
        prov = self.data["provenance"]
        lines.append(f"  provenance: seed={prov['seed']} "
                     f"truncation={prov.get('truncation')} "
                     f"timings_ms={prov.get('timings_ms')}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# individual conditions


def check_condition_C(D, nd, R=None, seed=0, max_integral_degree=4):
    """Residues weakly holomorphic (R_D = O~).  Decidable through
    normalization data or, failing that, through explicit integral equations
    for the residue generators.  Returns (verdict, witness_text)."""
    R = R if R is not None else residue_module(D, crosscheck=False, seed=seed)
    if nd is not None:
        if nd.source == "branches":
            for p in R.num:
                frac = MeroFraction(D, p, R.den, check=False)
                if not is_weakly_holomorphic(frac, nd):
                    return FALSE, f"residue {frac.str_of(D)} has a pole on a branch"
            return TRUE, "all residue generators weakly holomorphic on every branch"
        verdict = R.equals(nd.weak_ring)
        if verdict:
            return TRUE, "residue module equals the direct sum of component rings"
        for p in R.num:
            if not nd.weak_ring.contains_fraction(p, R.den):
                return FALSE, (f"residue ({poly_str(p, D.names)}) / "
                               f"({poly_str(R.den, D.names)}) is not weakly holomorphic")
        return FALSE, "weak ring strictly larger than the residue module"
    # integrality route: every generator satisfying a monic equation over O_D
    # lies in the normalization, and O~ is always inside R_D
    for p in R.num:
        deg = _integrality_degree(D, p, R.den, max_integral_degree)
        if deg is None:
            return UNDECIDED, "no normalization data and integrality search exhausted"
    return TRUE, "every residue generator satisfies a monic equation over O_D"


def _integrality_degree(D, p, q, max_degree):
    """Least d with p^d in <q p^(d-1), ..., q^d> + <h> locally (a monic
    integral equation for p/q over O_D), or None within the search bound."""
    for d in range(1, max_degree + 1):
        gens = [(q ** i) * (p ** (d - i)) for i in range(1, d + 1)]
        if D.member_mod_h(p ** d, gens):
            return d
    return None


def check_condition_G(D, nd, c_verdict=None, R=None, seed=0):
    """Jacobian ideal equals the conductor ideal.  Needs a conductor: from
    normalization data, or derived as dual(R_D) when condition (C) is
    certified true."""
    J = jacobian_ideal(D)
    if nd is not None:
        cond = nd.conductor_gens
    elif c_verdict == TRUE:
        R = R if R is not None else residue_module(D, crosscheck=False, seed=seed)
        cond = R.dual(seed=seed).as_ideal_gens()
    else:
        return UNDECIDED, "no conductor available"
    if D.ideal_equal_mod_h(J, cond):
        return TRUE, "J_D = C_D as ideals mod h"
    for g in cond:
        if not D.member_mod_h(g, J):
            return FALSE, (f"conductor element {poly_str(g, D.names)} "
                           f"is not in the Jacobian ideal")
    return FALSE, "Jacobian ideal strictly contains the conductor"


def check_condition_D(D, seed=0):
    """Radicality of the Jacobian ideal (decided on the pullback ideal
    <h, dh> interpreted at the origin)."""
    if D.is_smooth:
        return TRUE, "smooth germ: unit Jacobian ideal", None
    rv = radical_test(D.jacobian_pullback, D.n, seed=seed)
    if rv.status == "radical":
        return TRUE, f"radical ({rv.method})", rv
    if rv.status == "not_radical":
        g, k = rv.witness
        return FALSE, (f"witness {poly_str(g, D.names)} outside J_D with "
                       f"power {k} inside ({rv.method})"), rv
    return UNDECIDED, rv.method, rv


def check_normal_crossing_at_origin(D, factors):
    """The coordinate-system criterion on a validated factorization: at most
    n factors through the origin, each smooth there, with Jacobian of full
    rank.  Returns (bool, reason)."""
    validate_factorization(D, factors, require_coprime=False)
    vanishing = [f for f in factors if f.constant_term() == 0]
    m = len(vanishing)
    if m > D.n:
        return False, f"{m} components through the origin exceed the dimension {D.n}"
    rows = []
    for f in vanishing:
        grad = [f.diff(i).constant_term() for i in range(D.n)]
        if not any(grad):
            return False, (f"factor {poly_str(f, D.names)} is not smooth "
                           f"at the origin")
        rows.append(grad)
    if _rank(rows) != m:
        return False, "component normals are linearly dependent at the origin"
    return True, "factors form part of a coordinate system"


def _rank(rows):
    from .groebner import _row_echelon
    return len(_row_echelon([list(map(lambda c: c * 1, r)) for r in rows]))


def _curve_nc_at_origin(D):
    """Normal crossing for the curve factor: smooth, or an ordinary double
    point (nondegenerate Hessian)."""
    setup = _curve_setup(D)
    if setup is None:
        return None
    _, h2 = setup
    if any(h2.diff(i).constant_term() != 0 for i in range(2)):
        return True
    hxx = h2.diff(0).diff(0).constant_term()
    hxy = h2.diff(0).diff(1).constant_term()
    hyy = h2.diff(1).diff(1).constant_term()
    return hxx * hyy - hxy * hxy != 0


def check_condition_B(D, factors=None):
    """Normal crossing in codimension one, decided on the classes where the
    codimension-one behaviour reduces to finitely many checks: smooth germs,
    curve germs and suspensions (the origin of the curve factor), and
    factored smooth arrangements (pairwise transversality plus no triple
    contact in codimension one).  Returns (verdict, reason)."""
    if D.is_smooth:
        return TRUE, "smooth germ"
    curve = _curve_nc_at_origin(D)
    if curve is not None:
        return _tri(curve), "curve factor at the origin"
    if factors:
        try:
            validate_factorization(D, factors)
        except InputError:
            return UNDECIDED, "factorization not validated"
        smooth = all(f.constant_term() == 0
                     and any(f.diff(i).constant_term() != 0 for i in range(D.n))
                     for f in factors)
        if not smooth:
            return UNDECIDED, "components are not all smooth at the origin"
        ok = _arrangement_nc_in_codim1(D, factors)
        return _tri(ok), "smooth arrangement checks"
    return UNDECIDED, "no decidable class applies"


def _arrangement_nc_in_codim1(D, factors):
    n = D.n
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            fi, fj = factors[i], factors[j]
            minors = []
            for a in range(n):
                for b in range(a + 1, n):
                    minors.append(fi.diff(a) * fj.diff(b) - fi.diff(b) * fj.diff(a))
            if local_dim([fi, fj] + minors, n) > n - 3:
                return False
            for k in range(j + 1, len(factors)):
                if local_dim([fi, fj, factors[k]], n) > n - 3:
                    return False
    return True


def crosscheck_free_equivalences(D, factors=None, nd=None, seed=0, _pre=None):
    """Evaluate (B), (D), (G) on a free divisor and assert that all decided
    verdicts agree (they are equivalent for free divisors).  Disagreement
    aborts with a counterexample dump."""
    free, _ = is_free(D) if _pre is None else (_pre["free"], None)
    if not free:
        raise InputError("crosscheck_free_equivalences requires a free divisor")
    if _pre is not None:
        b, d, g = _pre["B"], _pre["D"], _pre["G"]
    else:
        b, _ = check_condition_B(D, factors)
        d, _, _ = check_condition_D(D, seed=seed)
        g, _ = check_condition_G(D, nd, seed=seed)
    decided = [v for v in (b, d, g) if v != UNDECIDED]
    if len(set(decided)) > 1:
        raise ConsistencyError(
            f"equivalent conditions disagree on {poly_str(D.h, D.names)}: "
            f"B={b} D={d} G={g}")
    return {"B": b, "D": d, "G": g}


_SHEAR_SCHEDULE = [(i, j, c) for c in (1, -1) for i in range(4) for j in range(4)
                   if i != j]


def classify_gorenstein_suspension(D, gorenstein=None, seed=0):
    """For germs with Gorenstein singular locus of codimension one in D:
    verify the product structure (a plane-curve factor after a linear change
    from a fixed schedule) and Euler homogeneity of the curve factor.
    Returns (verdict, euler_witness_or_diagnostic)."""
    gor = gorenstein if gorenstein is not None else gorenstein_singular_locus(D, seed=seed)
    if gor != "gorenstein":
        return "not_applicable", f"singular locus verdict: {gor}"
    if local_dim(D.jacobian_pullback, D.n) != D.n - 2:
        return "not_applicable", "singular locus is not of codimension 1 in D"

    candidates = [D]
    for (i, j, c) in _SHEAR_SCHEDULE:
        if i >= D.n or j >= D.n:
            continue
        sub = {i: Poly.variable(D.n, i) + Poly.variable(D.n, j).scale(c)}
        candidates.append(DivisorGerm(D.names, D.h.subs(sub)))
    for cand in candidates:
        if len(cand.active_vars) <= 2:
            ef = euler_field(cand)
            if ef is None:
                return "not_applicable", (
                    "curve factor found but no Euler field; this should not "
                    "happen for a Gorenstein singular locus")
            return "suspension_of_quasihomogeneous_plane_curve", ef
    return "not_applicable", "no plane-curve factor found within the schedule"


# ---------------------------------------------------------------------------
# the aggregator


def analyze(D, factors=None, branches=None, seed=0, precision=None,
            want_timings=False):
    """Run every decision procedure on the germ, verify the proven
    equivalences, and assemble the report."""
    import time
    t_start = time.time()
    witnesses = {}
    consistency = []
    extras = {}

    free, saito = is_free(D)
    if D.n == 2:
        if not free:
            raise ConsistencyError("a plane-curve germ was reported non-free")
        consistency.append("plane_curves_free")
    if free and saito is not None:
        witnesses["free"] = (f"Saito determinant = "
                             f"({poly_str(saito.det, D.names)}), unit value "
                             f"{saito.unit_value}")
    ef = euler_field(D)
    euler = ef is not None
    if euler:
        chi = ef.normalized()
        if chi is not None:
            witnesses["euler"] = " + ".join(
                f"({poly_str(c, D.names)})*d/d{D.names[i]}"
                for i, c in enumerate(chi.coeffs) if not c.is_zero)
        else:
            witnesses["euler"] = "certificate with non-constant unit"

    # normalization data: branches (curves/suspensions) and/or smooth factors
    nd = None
    nd_factors = None
    if _curve_setup(D) is not None:
        nd = normalization_from_branches(D, branches=branches,
                                         precision=precision, seed=seed)
    if factors:
        try:
            nd_factors = normalization_from_smooth_factors(D, factors, seed=seed)
        except InputError:
            nd_factors = None
    if nd is not None and nd_factors is not None:
        if not nd.weak_ring.equals(nd_factors.weak_ring):
            raise ConsistencyError("branch and smooth-factor normalizations disagree")
        consistency.append("normalization_routes_agree")
    if nd is None:
        nd = nd_factors

    R = residue_module(D, crosscheck=free, seed=seed)
    mu, has_unit = mu_residues(D, seed=seed)
    extras["mu_residues"] = mu
    extras["contains_unit"] = has_unit
    gor = gorenstein_singular_locus(D, seed=seed)

    c_verdict, c_why = check_condition_C(D, nd, R=R, seed=seed)
    witnesses["condition_C"] = c_why
    g_verdict, g_why = check_condition_G(D, nd, c_verdict=c_verdict, R=R, seed=seed)
    witnesses["condition_G"] = g_why
    d_verdict, d_why, rv = check_condition_D(D, seed=seed)
    witnesses["condition_D"] = d_why

    if factors:
        nc, nc_why = check_normal_crossing_at_origin(D, factors)
        f_verdict = _tri(nc)
    elif D.is_smooth:
        f_verdict, nc_why = TRUE, "smooth germ"
    else:
        curve_nc = _curve_nc_at_origin(D)
        if curve_nc is None:
            f_verdict, nc_why = UNDECIDED, "no factorization supplied"
        else:
            f_verdict, nc_why = _tri(curve_nc), "curve criterion at the origin"
    witnesses["normal_crossing"] = nc_why

    b_verdict, b_why = check_condition_B(D, factors)

    ds_verdict = None
    if factors:
        ds_ok, _idem = direct_sum_check(D, factors, seed=seed)
        ds_verdict = _tri(ds_ok)
        extras["direct_sum"] = ds_verdict

    feq = None
    if free:
        feq = crosscheck_free_equivalences(D, factors, nd, seed=seed,
                                   _pre={"free": True, "B": b_verdict,
                                         "D": d_verdict, "G": g_verdict})
        extras["free_equivalences"] = feq
        if len({v for v in feq.values() if v != UNDECIDED}) == 1 \
                and any(v != UNDECIDED for v in feq.values()):
            consistency.append("free_equivalences_agree")

    susp, susp_data = classify_gorenstein_suspension(D, gorenstein=gor, seed=seed)
    extras["suspension_classification"] = susp
    if susp == "suspension_of_quasihomogeneous_plane_curve":
        chi = susp_data.normalized()
        if chi is not None:
            witnesses["suspension_euler"] = " + ".join(
                f"({poly_str(c, D.names)})*d/d{D.names[i]}"
                for i, c in enumerate(chi.coeffs) if not c.is_zero)

    # --- proven equivalences, re-verified on every run --------------------
    J = FractionalIdeal(D, jacobian_ideal(D), 1, seed=seed)
    if free:
        if not R.dual(seed=seed).equals(J):
            raise ConsistencyError("free divisor with dual(R_D) != J_D")
        consistency.append("jacobian_is_residue_dual")
        if not J.dual(seed=seed).dual(seed=seed).equals(J):
            raise ConsistencyError("double dual of J_D differs from J_D on a free divisor")
        consistency.append("double_dual_involution")
        if c_verdict != UNDECIDED and g_verdict != UNDECIDED:
            if c_verdict != g_verdict:
                raise ConsistencyError("(C) and (G) disagree on a free divisor")
            consistency.append("weak_holomorphy_iff_conductor_equality")
        if has_unit != euler:
            raise ConsistencyError(
                "1 minimally generates R_D iff the germ is Euler homogeneous; "
                "verdicts disagree")
        consistency.append("unit_generator_iff_euler")
    if (mu == 1) != D.is_smooth:
        raise ConsistencyError("R_D cyclic iff smooth failed")
    consistency.append("cyclic_residues_iff_smooth")
    if b_verdict == TRUE and c_verdict == FALSE:
        raise ConsistencyError("(B) true with (C) false violates the implication")
    if b_verdict == TRUE and c_verdict == TRUE:
        consistency.append("normal_crossing_implies_weak_residues")
    if nd is not None:
        _verify_chain(D, J, R, nd, seed=seed)
        consistency.append("fractional_ideal_chain")
    if ds_verdict is not None and nd_factors is not None:
        transversal = _arrangement_nc_in_codim1(D, factors)
        coherent = (ds_verdict == TRUE) == (c_verdict == TRUE and transversal)
        if not coherent:
            raise ConsistencyError("direct-sum verdict incoherent with "
                                   "(C) and transversality")
        consistency.append("direct_sum_coherence")

    verdicts = {
        "free": _tri(free),
        "euler_homogeneous": _tri(euler),
        "jacobian_radical": d_verdict,
        "jacobian_eq_conductor": g_verdict,
        "residues_weakly_holomorphic": c_verdict,
        "normal_crossing_at_origin": f_verdict,
        "gorenstein_singular_locus": gor,
    }
    elapsed_ms = int((time.time() - t_start) * 1000)
    report = DivisorReport({
        "schema": 1,
        "input": {
            "vars": list(D.names),
            "poly": poly_str(D.h, D.names),
            "factors": [poly_str(f, D.names) for f in factors] if factors else None,
            "branches": "supplied" if branches else
                        (nd.source if nd is not None else None),
        },
        "config": {"seed": seed, "precision": precision},
        "verdicts": verdicts,
        "witnesses": witnesses,
        "consistency": consistency,
        "extras": extras,
        "provenance": {
            "seed": seed,
            "truncation": (nd.bounds.get("truncation")
                           if nd is not None else None),
            "radical_method": rv.method if rv is not None else None,
            "timings_ms": elapsed_ms if want_timings else None,
        },
    })
    return report


def _verify_chain(D, J, R, nd, seed=0):
    """J_D in dual(R_D) in C_D in O_D in O~ in R_D, every inclusion checked."""
    Rdual = R.dual(seed=seed)
    C = FractionalIdeal(D, nd.conductor_gens, 1, seed=seed)
    O = FractionalIdeal.ring(D)
    chain = [("J_D", J), ("dual(R_D)", Rdual), ("C_D", C), ("O_D", O),
             ("weak ring", nd.weak_ring), ("R_D", R)]
    for (name1, small), (name2, big) in zip(chain, chain[1:]):
        if not big.includes(small):
            raise ConsistencyError(f"chain inclusion {name1} in {name2} failed")


def analyze_text(vars_, poly_text, factors_text=None, **kw):
    """Convenience wrapper taking textual input (used by the CLI and tests)."""
    names = list(vars_)
    D = DivisorGerm(names, parse(poly_text, names))
    factors = None
    if factors_text:
        factors = [parse(t.strip(), names) for t in factors_text.split(";") if t.strip()]
    return analyze(D, factors=factors, **kw)
