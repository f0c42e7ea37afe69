"""Normalization data for plane-curve germs and their suspensions.

Branches are truncated power-series parametrizations t -> (x(t), y(t)) of
the curve factor; passive variables are carried along unchanged.  From a
certified branch system the module builds the ring of weakly holomorphic
functions as a fractional ideal

    O~ = { p : val_i(p) >= val_i(q) on every branch } / q

for a nonzerodivisor q whose branchwise valuations dominate the conductor
exponents (bounded by 2*delta = Milnor number + branches - 1).  The
numerator is found by truncated-series linear algebra.  The conductor is
the fractional-ideal dual of O~.

A second normalization source covers divisors given by smooth pairwise
coprime factors: there the weakly holomorphic ring is generated by the
componentwise idempotents.

Rational Newton-Puiseux expansion is provided for plane curves whose
expansions stay inside Q; anything needing an algebraic coefficient
extension is reported as unsupported and branches must be supplied.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd as int_gcd

from .errors import InputError, EngineError
from .poly import Poly, poly_str
from .groebner import local_colength, kernel_basis
from .fractional import FractionalIdeal, nzd_witness
from .residues import IdempotentData, validate_factorization

MAX_EXPANSION_DEPTH = 64


class Unsupported(Exception):
    """Internal signal: the expansion left the rationals."""


# ---------------------------------------------------------------------------
# truncated jets


class Jet:
    """Truncated power series in t with Poly coefficients (the coefficients
    carry the passive suspension variables).  Exponents below `trunc` are
    exact."""

    __slots__ = ("coeffs", "trunc", "n")

    def __init__(self, n, coeffs, trunc):
        self.n = n
        self.coeffs = {e: c for e, c in coeffs.items() if e < trunc and not c.is_zero}
        self.trunc = trunc

    @staticmethod
    def constant(n, p, trunc):
        return Jet(n, {0: p}, trunc)

    @property
    def is_zero_jet(self):
        return not self.coeffs

    def valuation(self):
        """Least exponent with nonzero coefficient; None when the whole stored
        jet vanishes (true valuation >= trunc)."""
        return min(self.coeffs) if self.coeffs else None

    def lead_coeff(self):
        return self.coeffs[min(self.coeffs)]

    def add(self, other):
        trunc = min(self.trunc, other.trunc)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e)
            out[e] = c if s is None else s + c
        return Jet(self.n, out, trunc)

    def mul(self, other):
        va = self.valuation()
        vb = other.valuation()
        fa = self.trunc if va is None else va
        fb = other.trunc if vb is None else vb
        trunc = min(self.trunc + fb, other.trunc + fa)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e >= trunc:
                    continue
                s = out.get(e)
                p = c1 * c2
                out[e] = p if s is None else s + p
        return Jet(self.n, out, trunc)

    def scale(self, c):
        return Jet(self.n, {e: v.scale(c) for e, v in self.coeffs.items()}, self.trunc)


# ---------------------------------------------------------------------------
# branches


class BranchParam:
    """One branch of the curve factor: a truncated series per active variable
    (exponent -> rational coefficient), exact below `trunc`."""

    __slots__ = ("series", "trunc")

    def __init__(self, series, trunc):
        self.series = {i: {e: Fraction(c) for e, c in s.items() if c}
                       for i, s in series.items()}
        self.trunc = trunc

    def exponents(self):
        out = []
        for s in self.series.values():
            out.extend(s.keys())
        return out

    def is_primitive(self):
        g = 0
        for e in self.exponents():
            g = int_gcd(g, e)
        return g == 1

    def multiplicity(self):
        vals = [min(s) for s in self.series.values() if s]
        if not vals:
            raise InputError("branch parametrization is constant")
        return min(vals)

    def var_jet(self, n, i):
        return Jet(n, {e: Poly.const(n, c) for e, c in self.series.get(i, {}).items()},
                   self.trunc)

    def sign_flipped(self):
        return BranchParam({i: {e: (-c if e % 2 else c) for e, c in s.items()}
                            for i, s in self.series.items()}, self.trunc)

    def canonical(self):
        """Normalize the t -> -t reparametrization ambiguity (prefer a
        positive leading coefficient)."""
        other = self.sign_flipped()
        def key(b):
            items = []
            for i in sorted(b.series):
                for e in sorted(b.series[i]):
                    items.append((i, e, b.series[i][e]))
            return items
        return self if key(self) >= key(other) else other

    def same_branch(self, other):
        a, b = self.canonical(), other.canonical()
        return a.series == b.series

    def str_of(self, D):
        parts = []
        for i in sorted(self.series):
            terms = " + ".join(f"{c}*t^{e}" if e != 1 else f"{c}*t"
                               for e, c in sorted(self.series[i].items()))
            parts.append(f"{D.names[i]} = {terms or '0'}")
        return "; ".join(parts)


def pullback(p, branch, D, cache=None, trunc=None):
    """Jet of p along the branch; passive variables stay as polynomial
    coefficients.  `trunc` caps the jet precision (never above the branch
    truncation); a shared `cache` avoids recomputing series powers."""
    n = D.n
    trunc = branch.trunc if trunc is None else min(trunc, branch.trunc)
    if cache is None:
        cache = {}

    def var_power(i, k):
        key = (i, k, trunc)
        if key not in cache:
            if k == 1:
                base = branch.var_jet(n, i)
                cache[key] = Jet(n, base.coeffs, trunc)
            else:
                half = var_power(i, k // 2)
                sq = half.mul(half)
                cache[key] = sq if k % 2 == 0 else sq.mul(var_power(i, 1))
        return cache[key]

    active = set(branch.series.keys())
    out = Jet(n, {}, trunc)
    for e, c in p.terms.items():
        passive_exp = tuple(k if i not in active else 0 for i, k in enumerate(e))
        term = Jet.constant(n, Poly.monomial(n, passive_exp, c), trunc)
        for i in active:
            if e[i]:
                term = term.mul(var_power(i, e[i]))
        out = out.add(term)
    return out


# ---------------------------------------------------------------------------
# rational Newton-Puiseux


def _support(p):
    return [(e[0], e[1]) for e in p.terms]


def _var_divides(p, i):
    return all(e[i] >= 1 for e in p.terms)


def _divide_var(p, i):
    out = {}
    for e, c in p.terms.items():
        d = list(e)
        d[i] -= 1
        out[tuple(d)] = c
    return Poly._raw(p.n, out)


def _transpose2(p):
    return Poly._raw(2, {(e[1], e[0]): c for e, c in p.terms.items()})


def _newton_edges(p):
    """Edges of the lower-left Newton boundary of a 2-variable polynomial
    (x nmid p, y nmid p): list of (q, m, points) with slope m/q in lowest
    terms, meaning y ~ c x^(m/q) along the edge."""
    pts = set(_support(p))
    b = min(j for i, j in pts if i == 0)
    a = min(i for i, j in pts if j == 0)
    edges = []
    cur = (0, b)
    while cur[1] > 0:
        best = None
        for w in pts:
            if w[0] <= cur[0] or w[1] >= cur[1]:
                continue
            slope = Fraction(w[0] - cur[0], cur[1] - w[1])
            if best is None or slope < best[0] or (slope == best[0] and w[0] > best[1][0]):
                best = (slope, w)
        if best is None:
            raise EngineError("newton boundary did not reach the x-axis")
        slope, nxt = best
        m, q = slope.numerator, slope.denominator
        on_edge = sorted(w for w in pts
                         if cur[0] <= w[0] <= nxt[0] and nxt[1] <= w[1] <= cur[1]
                         and (w[0] - cur[0]) * (cur[1] - nxt[1]) ==
                             (cur[1] - w[1]) * (nxt[0] - cur[0]))
        edges.append((q, m, on_edge))
        cur = nxt
    return edges


def _edge_char(p, q, m, pts):
    """psi(w): the edge polynomial in w = z^q where y = z x^(m/q)."""
    jmin = min(j for _, j in pts)
    psi = {}
    for i, j in pts:
        k = (j - jmin) // q
        if k * q != j - jmin:
            raise EngineError("edge point off the slope lattice")
        psi[k] = psi.get(k, Fraction(0)) + p.terms[(i, j)]
    return {k: c for k, c in psi.items() if c}, jmin


def _dense(poly_dict):
    d = max(poly_dict)
    out = [Fraction(0)] * (d + 1)
    for k, c in poly_dict.items():
        out[k] = c
    return out


def _rational_roots(poly_dict):
    """All (root, multiplicity) pairs of rational roots; second return value
    is the degree left undecided (0 means the polynomial split rationally)."""
    coeffs = _dense(poly_dict)
    den_lcm = 1
    for c in coeffs:
        den_lcm = den_lcm * c.denominator // int_gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in coeffs]
    while ints and ints[0] == 0:
        raise EngineError("edge polynomial with zero constant term")

    def divisors(k):
        k = abs(k)
        out = set()
        d = 1
        while d * d <= k:
            if k % d == 0:
                out.add(d)
                out.add(k // d)
            d += 1
        return out

    def eval_at(cs, r):
        acc = Fraction(0)
        for c in reversed(cs):
            acc = acc * r + c
        return acc

    def deflate(cs, r):
        # cs / (z - r), exact
        out = [Fraction(0)] * (len(cs) - 1)
        carry = cs[-1]
        for k in range(len(cs) - 2, -1, -1):
            out[k] = carry
            carry = cs[k] + r * carry
        assert carry == 0
        return out

    roots = []
    cur = [Fraction(c) for c in ints]
    cands = sorted({Fraction(s * pn, pd) for pn in divisors(ints[0])
                    for pd in divisors(ints[-1]) for s in (1, -1)})
    for r in cands:
        mult = 0
        while len(cur) > 1 and eval_at(cur, r) == 0:
            cur = deflate(cur, r)
            mult += 1
        if mult:
            roots.append((r, mult))
    return roots, len(cur) - 1


def _rational_qth_root(w, q):
    """Rational c with c^q = w, or None.  For even q a positive root is
    returned (the sign ambiguity is the t -> -t reparametrization)."""
    if q == 1:
        return w
    if w == 0:
        return Fraction(0)
    if q % 2 == 0 and w < 0:
        return None

    def iroot(k, e):
        if k == 0:
            return 0
        lo, hi = 0, max(2, int(abs(k)) )
        while lo < hi:
            mid = (lo + hi) // 2
            if mid ** e < abs(k):
                lo = mid + 1
            else:
                hi = mid
        return lo if lo ** e == abs(k) else None

    np_ = iroot(abs(w.numerator), q)
    dp = iroot(w.denominator, q)
    if np_ is None or dp is None:
        return None
    c = Fraction(np_, dp)
    if w < 0:
        c = -c
    return c


def _series_mul(a, b, prec):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            if e > prec:
                continue
            out[e] = out.get(e, Fraction(0)) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _eval_poly_at_series(p, phi, prec):
    """p(x, phi(x)) truncated at x^prec; p is a 2-variable Poly, phi a series
    dict in x."""
    powers = {0: {0: Fraction(1)}}

    def phi_pow(k):
        if k not in powers:
            powers[k] = _series_mul(phi_pow(k - 1), phi, prec)
        return powers[k]

    out = {}
    for (i, j), c in p.terms.items():
        if i > prec:
            continue
        for e, v in phi_pow(j).items():
            ee = e + i
            if ee > prec:
                continue
            out[ee] = out.get(ee, Fraction(0)) + c * v
    return {e: c for e, c in out.items() if c}


def _newton_lift(g, prec):
    """The unique series phi with phi(0) = 0 and g(x, phi(x)) = 0 mod
    x^(prec+1), for g with dg/dy invertible at the origin."""
    gy0 = g.terms.get((0, 1))
    if gy0 is None or gy0 == 0:
        raise EngineError("newton lift requires a simple root")
    phi = {}
    while True:
        r = _eval_poly_at_series(g, phi, prec)
        r = {e: c for e, c in r.items() if c}
        if not r:
            return phi
        k = min(r)
        if k > prec:
            return phi
        if k == 0:
            raise EngineError("newton lift lost the root")
        phi[k] = phi.get(k, Fraction(0)) - r[k] / gy0
        phi = {e: c for e, c in phi.items() if c}


def _substitute_edge(h2, q, m, c):
    """g(x, y') = h2(x^q, x^m (c + y')) / x^E with the full power of x
    removed."""
    x_q = Poly._raw(2, {(q, 0): Fraction(1)})
    shift = Poly._raw(2, {(m, 0): Fraction(c), (m, 1): Fraction(1)})
    g = h2.subs({0: x_q, 1: shift})
    e_min = min(e[0] for e in g.terms)
    g = Poly._raw(2, {(e[0] - e_min, e[1]): v for e, v in g.terms.items()})
    return g


def _expand(h2, prec, depth, edge_filter=None):
    """Branches (Q, yser) of h2 with positive valuation in both variables:
    x = t^Q, y = yser(t).  Raises Unsupported when a root leaves Q."""
    if depth > MAX_EXPANSION_DEPTH:
        raise EngineError("puiseux expansion exceeded the depth bound")
    out = []
    if _var_divides(h2, 1):
        h2 = _divide_var(h2, 1)
        out.append((1, {}))  # the branch y = 0
    if h2.is_constant() or not h2.terms or h2.constant_term() != 0:
        return out
    if _var_divides(h2, 0):
        raise EngineError("unexpected x factor inside the expansion")
    for q, m, pts in _newton_edges(h2):
        if edge_filter is not None and (q, m) != edge_filter:
            continue
        psi, _ = _edge_char(h2, q, m, pts)
        roots, undecided = _rational_roots(psi)
        if undecided:
            raise Unsupported
        for w0, mult in roots:
            c = _rational_qth_root(w0, q)
            if c is None:
                raise Unsupported
            g = _substitute_edge(h2, q, m, c)
            if mult == 1 and g.terms.get((0, 1)):
                phi = _newton_lift(g, prec)
                yser = {m: Fraction(c)}
                for e, v in phi.items():
                    if m + e <= prec:
                        yser[m + e] = yser.get(m + e, Fraction(0)) + v
                out.append((q, {e: v for e, v in yser.items() if v}))
            else:
                for q2, phi in _expand(g, prec, depth + 1):
                    Q = q * q2
                    yser = {m * q2: Fraction(c)}
                    for e, v in phi.items():
                        ee = m * q2 + e
                        if ee <= prec:
                            yser[ee] = yser.get(ee, Fraction(0)) + v
                    out.append((Q, {e: v for e, v in yser.items() if v}))
    return out


def _curve_setup(D):
    """(curve variable indices, 2-variable model of h).  Suspensions are
    detected through variables absent from h."""
    active = D.active_vars
    if len(active) > 2:
        return None
    if len(active) == 2:
        cvars = list(active)
    else:
        passive = D.passive_vars
        if not passive:
            return None
        cvars = [active[0], passive[0]]
    mapping = {cvars[0]: 0, cvars[1]: 1}
    h2 = Poly._raw(2, {(e[cvars[0]], e[cvars[1]]): c for e, c in D.h.terms.items()})
    return cvars, h2


def _lift2(p2, cvars, n):
    out = {}
    for (i, j), c in p2.terms.items():
        e = [0] * n
        e[cvars[0]] = i
        e[cvars[1]] = j
        out[tuple(e)] = c
    return Poly._raw(n, out)


def puiseux_rational(D, precision=48):
    """Branch parametrizations of a plane-curve germ (or of the curve factor
    of a suspension) when all Newton-Puiseux root extractions stay rational;
    None otherwise ('unsupported': the caller must supply branches)."""
    setup = _curve_setup(D)
    if setup is None:
        raise InputError("not a plane-curve germ or suspension of one")
    cvars, h2 = setup
    branches = []
    try:
        if _var_divides(h2, 0):
            h2 = _divide_var(h2, 0)
            branches.append(BranchParam({cvars[0]: {}, cvars[1]: {1: 1}}, precision))
        if _var_divides(h2, 1):
            h2 = _divide_var(h2, 1)
            branches.append(BranchParam({cvars[0]: {1: 1}, cvars[1]: {}}, precision))
        if not h2.is_constant():
            for q, m, pts in _newton_edges(h2):
                # each top-level edge in whichever orientation stays rational
                try:
                    subs = _expand(h2, precision, 0, edge_filter=(q, m))
                    transposed = False
                except Unsupported:
                    subs = _expand(_transpose2(h2), precision, 0, edge_filter=(m, q))
                    transposed = True
                for Q, yser in subs:
                    if transposed:
                        branches.append(BranchParam(
                            {cvars[0]: yser, cvars[1]: {Q: 1}}, precision))
                    else:
                        branches.append(BranchParam(
                            {cvars[0]: {Q: 1}, cvars[1]: yser}, precision))
    except Unsupported:
        return None
    canon = []
    for b in branches:
        b = b.canonical()
        if not any(b.same_branch(c) for c in canon):
            canon.append(b)
    return canon


# ---------------------------------------------------------------------------
# normalization data


class NormalizationData:
    """Certified normalization of a curve germ / suspension / smooth-factored
    divisor: the branches (possibly empty for the smooth-factor source), the
    weakly holomorphic ring O~ as a fractional ideal, and the conductor."""

    __slots__ = ("germ", "branches", "weak_ring", "conductor_gens", "source",
                 "bounds")

    def __init__(self, germ, branches, weak_ring, conductor_gens, source, bounds):
        self.germ = germ
        self.branches = list(branches)
        self.weak_ring = weak_ring
        self.conductor_gens = list(conductor_gens)
        self.source = source
        self.bounds = dict(bounds)


def _certify_branch(D, branch, h2, cvars):
    sub = pullback(D.h, branch, D)
    if not sub.is_zero_jet:
        raise InputError(
            f"branch substitution does not annihilate h "
            f"(first surviving order t^{sub.valuation()})")
    if not branch.is_primitive():
        raise InputError("branch parametrization is not primitive")


def _branch_valuation(jet, what):
    v = jet.valuation()
    if v is None:
        raise InputError(
            f"truncation insufficient to certify the valuation of {what}")
    return v


def conductor_bound(D):
    """Upper bound for the conductor exponents: 2*delta = Milnor number of
    the curve factor + number of branches - 1; the branch count is bounded by
    the multiplicity."""
    setup = _curve_setup(D)
    if setup is None:
        raise InputError("not a curve germ or suspension")
    cvars, h2 = setup
    mu = local_colength([h2.diff(0), h2.diff(1)], 2)
    if mu is None:
        raise EngineError("curve factor has non-isolated singularity")
    mult = min(sum(e) for e in h2.terms)
    return mu + mult - 1, mu


def normalization_from_branches(D, branches=None, precision=None, seed=0):
    """Assemble NormalizationData for a plane-curve germ or suspension.
    User-supplied branches always win over the internal expansion; both paths
    run the same certification."""
    setup = _curve_setup(D)
    if setup is None:
        raise InputError("germ outside the supported class "
                         "(plane curve or suspension of one)")
    cvars, h2 = setup
    cb, mu = conductor_bound(D)
    user_supplied = branches is not None

    def required_precision(br_list):
        vals = []
        for ell2, ell_full in _line_schedule(D, cvars):
            try:
                v = [_branch_valuation(pullback(ell_full, b, D), "a linear form")
                     for b in br_list]
            except InputError:
                continue
            if nzd_witness(D, ell_full) is None:
                vals = v
                break
        if not vals:
            raise InputError("no nonzerodivisor linear form found on the branches")
        B = -(-cb // min(vals))
        K = B * max(vals)
        return 2 * K + cb + 8

    if branches is None:
        prec0 = precision or (2 * cb + 16)
        branches = puiseux_rational(D, precision=prec0)
        if branches is None:
            raise InputError(
                "rational puiseux expansion unsupported for this germ; "
                "supply branches explicitly")
        need = required_precision(branches)
        if prec0 < need:
            branches = puiseux_rational(D, precision=need)
    else:
        need = required_precision(branches)
        short = [b for b in branches if b.trunc < need]
        if short:
            raise InputError(
                f"supplied branch truncation is below the certification bound "
                f"{need}; raise the truncation")

    for b in branches:
        _certify_branch(D, b, h2, cvars)
    for i in range(len(branches)):
        for j in range(i + 1, len(branches)):
            if branches[i].same_branch(branches[j]):
                raise InputError("branches are not pairwise distinct")
    total_mult = sum(b.multiplicity() for b in branches)
    curve_mult = min(sum(e) for e in h2.terms)
    if total_mult != curve_mult:
        raise InputError(
            f"branch system is incomplete: multiplicities sum to {total_mult} "
            f"but the curve has multiplicity {curve_mult}")

    # choose the denominator q = ell^B with val(q) >= conductor bound
    ell_full = None
    ell_vals = None
    for e2, ef in _line_schedule(D, cvars):
        if nzd_witness(D, ef) is not None:
            continue
        try:
            vals = [_branch_valuation(pullback(ef, b, D), "a linear form")
                    for b in branches]
        except InputError:
            continue
        ell_full, ell_vals = ef, vals
        break
    if ell_full is None:
        raise InputError("no nonzerodivisor linear form found on the branches")
    B = -(-cb // min(ell_vals))
    qden = ell_full ** B
    vq = [B * v for v in ell_vals]
    K = max(vq)

    # numerator: curve-variable polynomials of degree < K whose branchwise
    # valuations dominate vq, plus the full degree-K slab
    monos = []
    for d in range(K):
        for i in range(d + 1):
            e = [0] * D.n
            e[cvars[0]] = d - i
            e[cvars[1]] = i
            monos.append(Poly.monomial(D.n, tuple(e)))
    rows = []
    for b, v in zip(branches, vq):
        cache = {}
        jets = [pullback(mn, b, D, cache=cache, trunc=v) for mn in monos]
        for t_exp in range(v):
            row = []
            for j in jets:
                coeff = j.coeffs.get(t_exp)
                row.append(Fraction(0) if coeff is None else coeff.constant_term())
            rows.append(row)
    num_gens = []
    for veck in kernel_basis(rows, len(monos)):
        p = Poly.zero(D.n)
        for c, mn in zip(veck, monos):
            if c:
                p = p + mn.scale(c)
        num_gens.append(p)
    for i in range(K + 1):
        e = [0] * D.n
        e[cvars[0]] = K - i
        e[cvars[1]] = i
        num_gens.append(Poly.monomial(D.n, tuple(e)))

    weak = FractionalIdeal(D, num_gens, qden, seed=seed)
    _certify_weak_ring(D, weak)
    cond = _conductor_from_weak(D, weak, seed=seed)
    return NormalizationData(
        D, branches, weak, cond, "branches",
        {"conductor_bound": cb, "milnor_curve": mu, "truncation": branches[0].trunc,
         "denominator": poly_str(qden, D.names)})


def _line_schedule(D, cvars):
    """Candidate linear forms in the curve variables, deterministic order."""
    u = Poly.variable(D.n, cvars[0])
    v = Poly.variable(D.n, cvars[1])
    yield None, u
    yield None, v
    for a, b in ((1, 1), (1, -1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)):
        yield None, u.scale(a) + v.scale(b)


def _certify_weak_ring(D, weak):
    one = Poly.const(D.n, 1)
    if not weak.contains_fraction(one, one):
        raise EngineError("weakly holomorphic module does not contain 1")
    for i, p in enumerate(weak.num):
        for q in weak.num[i:]:
            if not weak.contains_fraction(p * q, weak.den * weak.den):
                raise EngineError("weakly holomorphic module is not a ring")


def _conductor_from_weak(D, weak, seed=0):
    dual = weak.dual(seed=seed)
    gens = dual.as_ideal_gens()
    cfrac = FractionalIdeal(D, gens, 1, seed=seed)
    if not cfrac.includes(cfrac.product(weak)):
        raise EngineError("conductor is not an ideal of the weak ring")
    return gens


def normalization_from_smooth_factors(D, factors, seed=0):
    """O~ for a divisor presented by pairwise coprime smooth factors: the
    direct sum of the component rings, generated by the idempotents."""
    validate_factorization(D, factors)
    for f in factors:
        if f.constant_term() != 0:
            raise InputError("factor does not vanish at the origin")
        if all(f.diff(i).constant_term() == 0 for i in range(D.n)):
            raise InputError(
                f"factor {poly_str(f, D.names)} is not smooth at the origin")
    idem = IdempotentData(D, factors)
    weak = idem.module(seed=seed)
    cond = _conductor_from_weak(D, weak, seed=seed)
    return NormalizationData(D, [], weak, cond, "smooth_factors", {})


def is_weakly_holomorphic(frac, nd):
    """Branchwise valuation test: on every branch the numerator pullback must
    vanish at least to the order of the denominator pullback (whose leading
    coefficient must be a unit when passive variables are present)."""
    D = nd.germ
    if nd.source != "branches":
        return nd.weak_ring.contains_fraction(frac.num, frac.den)
    for b in nd.branches:
        jd = pullback(frac.den, b, D)
        vd = jd.valuation()
        if vd is None:
            raise InputError(
                "truncation insufficient to decide: denominator pullback "
                "vanishes to the stored order")
        if jd.lead_coeff().constant_term() == 0:
            raise EngineError(
                "denominator pullback degenerates along the passive directions")
        jn = pullback(frac.num, b, D)
        vn = jn.valuation()
        if vn is not None and vn < vd:
            return False
    return True


def conductor(nd):
    """The conductor as an ideal of O_D (already certified as a common ideal
    of O_D and the weakly holomorphic ring)."""
    return list(nd.conductor_gens)


# ---------------------------------------------------------------------------
# branch files


def branches_from_json(text, D, default_trunc=48):
    """Branch list from the JSON format
    [{"param": {"x": [[3, "1"]], "y": [[2, "1"]]}, "truncation": 16}, ...]."""
    data = json.loads(text)
    if not isinstance(data, list):
        raise InputError("branch file must contain a list")
    name_to_idx = {nm: i for i, nm in enumerate(D.names)}
    out = []
    for entry in data:
        param = entry.get("param")
        if not isinstance(param, dict):
            raise InputError("branch entry without a param table")
        trunc = int(entry.get("truncation", default_trunc))
        series = {}
        for nm, pairs in param.items():
            if nm not in name_to_idx:
                raise InputError(f"unknown variable {nm!r} in branch file")
            series[name_to_idx[nm]] = {int(e): Fraction(c) for e, c in pairs}
        out.append(BranchParam(series, trunc))
    return out
