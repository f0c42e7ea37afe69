"""Groebner and standard bases for ideals and submodules of free modules.

Global orders use classical Buchberger division; local orders use Mora's
weak normal form with ecart selection, so results are valid in the
localization of Q[x] at the origin.  Pair selection is the normal
strategy (minimal lcm degree) with a sugar tie-break, which makes every
basis deterministic.

Homogeneous ideal input under a local order is dispatched to Buchberger:
leading terms of homogeneous polynomials agree between degrevlex and its
local twin, so the computed basis is a standard basis as well.

Syzygies are computed by the component-elimination embedding: a Groebner
basis of {(v_i, e_i)} under an order that makes the original components
dominate; basis vectors with vanishing original part generate the syzygy
module.  Since localization is flat, polynomial syzygies generate the
local syzygy module too, which is what the Nakayama-style minimal
generator count below relies on.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from heapq import heappush, heappop

from .errors import EngineError
from .poly import (Poly, Order, exp_mul, exp_div, exp_lcm, exp_deg, exact_div,
                   poly_gcd)

ONE = Fraction(1)


class Vec:
    """Element of a free module R^r, stored as a tuple of Poly."""

    __slots__ = ("polys", "_hash")

    def __init__(self, polys):
        self.polys = tuple(polys)
        self._hash = None

    @property
    def r(self):
        return len(self.polys)

    @property
    def n(self):
        return self.polys[0].n

    @property
    def is_zero(self):
        return all(p.is_zero for p in self.polys)

    def __eq__(self, other):
        return isinstance(other, Vec) and self.polys == other.polys

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.polys)
        return self._hash

    def __add__(self, other):
        return Vec([a + b for a, b in zip(self.polys, other.polys)])

    def __sub__(self, other):
        return Vec([a - b for a, b in zip(self.polys, other.polys)])

    def scale(self, c):
        return Vec([p.scale(c) for p in self.polys])

    def mul_term(self, c, e):
        return Vec([p.mul_term(c, e) for p in self.polys])

    def submul_term(self, c, e, other):
        return Vec([a.submul_term(c, e, b) for a, b in zip(self.polys, other.polys)])

    def mul_poly(self, q):
        return Vec([p * q for p in self.polys])

    def total_degree(self):
        return max(p.total_degree() for p in self.polys)

    def at_origin(self):
        return [p.constant_term() for p in self.polys]


def as_vec(x):
    return x if isinstance(x, Vec) else Vec([x])


class ModOrder:
    """Order on module monomials (component, exponent).  Rules:

      TOP  -- term over position (ring order first, lower component wins ties)
      POT  -- position over term (lower component dominates)
      ELIM -- every monomial in a component < elim dominates the rest;
              used for syzygy computations
    """

    __slots__ = ("ring", "rule", "elim")

    def __init__(self, ring, rule="TOP", elim=0):
        self.ring = ring
        self.rule = rule
        self.elim = elim

    @property
    def is_global(self):
        return self.ring.is_global

    def key(self, cm):
        c, e = cm
        rk = self.ring.key(e)
        if self.rule == "TOP":
            return (rk, -c)
        if self.rule == "POT":
            return (-c, rk)
        return (1 if c < self.elim else 0, rk, -c)

    def lead(self, v):
        """Leading module monomial (comp, exp) of v, or None."""
        best = None
        best_key = None
        for c, p in enumerate(v.polys):
            for e in p.terms:
                k = self.key((c, e))
                if best_key is None or k > best_key:
                    best_key = k
                    best = (c, e)
        return best

    def lead_coeff(self, v, lead):
        c, e = lead
        return v.polys[c].terms[e]


def vec_ecart(v, lead):
    return v.total_degree() - exp_deg(lead[1])


# ---------------------------------------------------------------------------
# division


class _Reducer:
    __slots__ = ("vec", "lead", "coeff", "cert")

    def __init__(self, vec, mo, cert=None):
        self.vec = vec
        self.lead = mo.lead(vec)
        self.coeff = mo.lead_coeff(vec, self.lead)
        self.cert = cert


def divide_vec(f, reducers, mo, full=True):
    """Global division: f = sum quots[i]*reducers[i] + rem.  With full=True
    no term of rem is divisible by any reducer lead; otherwise only the lead
    of rem is guaranteed irreducible."""
    quots = [Poly.zero(f.n) for _ in reducers]
    rem = Vec([Poly.zero(f.n) for _ in f.polys])
    p = f
    while not p.is_zero:
        lp = mo.lead(p)
        cp = mo.lead_coeff(p, lp)
        hit = None
        for i, red in enumerate(reducers):
            if red.lead[0] == lp[0]:
                d = exp_div(lp[1], red.lead[1])
                if d is not None:
                    hit = (i, d)
                    break
        if hit is None:
            if not full:
                return quots, p
            t = Poly.monomial(f.n, lp[1], cp)
            rem_polys = list(rem.polys)
            rem_polys[lp[0]] = rem_polys[lp[0]] + t
            rem = Vec(rem_polys)
            p_polys = list(p.polys)
            p_polys[lp[0]] = p_polys[lp[0]] - t
            p = Vec(p_polys)
        else:
            i, d = hit
            c = cp / reducers[i].coeff
            quots[i] = quots[i] + Poly.monomial(f.n, d, c)
            p = p.submul_term(c, d, reducers[i].vec)
    return quots, rem


def mora_nf(f, reducers, mo, want_cert=True):
    """Mora weak normal form for local (or any) orders.

    Returns (rem, unit, quots) with  unit*f = sum quots[i]*gens[i] + rem
    exactly, unit a polynomial with unit(0) != 0, and the lead of rem not
    divisible by any lead of the input reducers.  With want_cert=False the
    certificate bookkeeping is skipped and (rem, None, None) is returned."""
    n = f.n
    s = len(reducers)
    zero_q = [Poly.zero(n)] * s
    if f.is_zero:
        if not want_cert:
            return f, None, None
        return f, Poly.const(n, 1), list(zero_q)

    # pool entries: (reducer, lead, coeff, ecart, cert) where cert=(u, quots)
    # expresses the entry as u*f - sum quots[i]*gens[i]; input gens have
    # u=0 and quots = -e_i.
    pool = []
    for i, red in enumerate(reducers):
        cert = None
        if want_cert:
            q = list(zero_q)
            q[i] = Poly.const(n, -1)
            cert = (Poly.zero(n), q)
        pool.append((red.vec, red.lead, red.coeff,
                     vec_ecart(red.vec, red.lead), cert))

    h = f
    uh = Poly.const(n, 1) if want_cert else None
    qh = list(zero_q) if want_cert else None
    while not h.is_zero:
        lh = mo.lead(h)
        ch = mo.lead_coeff(h, lh)
        best = None
        for idx, entry in enumerate(pool):
            if entry[1][0] == lh[0]:
                d = exp_div(lh[1], entry[1][1])
                if d is not None and (best is None or entry[3] < best[0]):
                    best = (entry[3], idx, d)
        if best is None:
            break
        eh = h.total_degree() - exp_deg(lh[1])
        ec_t, idx, d = best
        if ec_t > eh:
            pool.append((h, lh, ch, eh,
                         (uh, list(qh)) if want_cert else None))
        tvec, _, tc, _, cert = pool[idx]
        c = ch / tc
        h = h.submul_term(c, d, tvec)
        if want_cert:
            mono = Poly.monomial(n, d, c)
            ut, qt = cert
            uh = uh - mono * ut
            qh = [a - mono * b for a, b in zip(qh, qt)]
    if not want_cert:
        return h, None, None
    if uh.constant_term() == 0:
        raise EngineError("Mora normal form lost its unit; order misuse?")
    return h, uh, qh


def normal_form(f, basis, mo, full=None):
    """Remainder of f modulo a standard basis.  Zero iff f lies in the ideal
    (local orders: in its extension to the local ring at the origin)."""
    f = as_vec(f)
    reducers = [_Reducer(as_vec(g), mo) for g in basis if not as_vec(g).is_zero]
    if not reducers:
        return f
    if mo.is_global:
        _, rem = divide_vec(f, reducers, mo, full=True if full is None else full)
        return rem
    rem, _, _ = mora_nf(f, reducers, mo, want_cert=False)
    return rem


def division_certificate(f, basis, mo):
    """(quots, unit, rem) with unit*f = sum quots*basis + rem, unit(0) != 0
    (unit = 1 for global orders)."""
    f = as_vec(f)
    reducers = [_Reducer(as_vec(g), mo) for g in basis]
    if mo.is_global:
        quots, rem = divide_vec(f, reducers, mo)
        return quots, Poly.const(f.n, 1), rem
    rem, unit, quots = mora_nf(f, reducers, mo)
    return quots, unit, rem


# ---------------------------------------------------------------------------
# basis computation


def _s_pair_data(gi, gj, mo):
    (c, ei), (c2, ej) = gi.lead, gj.lead
    if c != c2:
        return None
    l = exp_lcm(ei, ej)
    return l


def _s_vec(gi, gj, l, mo):
    di = exp_div(l, gi.lead[1])
    dj = exp_div(l, gj.lead[1])
    return gi.vec.mul_term(ONE / gi.coeff, di), gj.vec.mul_term(ONE / gj.coeff, dj)


class _Elem:
    __slots__ = ("vec", "lead", "coeff", "sugar", "trow")

    def __init__(self, vec, mo, sugar, trow):
        self.vec = vec
        self.lead = mo.lead(vec)
        self.coeff = mo.lead_coeff(vec, self.lead)
        self.sugar = sugar
        self.trow = trow


def _compute_basis(gens, mo, transform):
    """Shared Buchberger/Mora loop.  Returns list of (vec, trow)."""
    n = None
    G = []
    for i, g in enumerate(gens):
        v = as_vec(g)
        n = v.n
        trow = None
        if transform:
            trow = [Poly.zero(v.n) for _ in gens]
            trow[i] = Poly.const(v.n, 1)
        if not v.is_zero:
            G.append(_Elem(v, mo, v.total_degree(), trow))
    if not G:
        return []

    use_mora = not mo.is_global

    def reduce_elem(vec, trow_parts):
        """Reduce vec against current G; returns (rem, trow) or None if zero."""
        reducers = [_Reducer(e.vec, mo) for e in G]
        if use_mora:
            rem, unit, quots = mora_nf(vec, reducers, mo, want_cert=transform)
        else:
            quots, rem = divide_vec(vec, reducers, mo)
            unit = Poly.const(n, 1)
        if rem.is_zero:
            return None
        trow = None
        if transform:
            trow = [unit * t for t in trow_parts]
            for q, e in zip(quots, G):
                if not q.is_zero:
                    trow = [a - q * b for a, b in zip(trow, e.trow)]
        return rem, trow

    pairs = []
    counter = 0

    def push_pair(i, j):
        nonlocal counter
        l = _s_pair_data(G[i], G[j], mo)
        if l is None:
            return
        if G[i].vec.r == 1:
            # product criterion (ideals only)
            if exp_mul(G[i].lead[1], G[j].lead[1]) == l:
                return
        sugar = max(G[i].sugar + exp_deg(l) - exp_deg(G[i].lead[1]),
                    G[j].sugar + exp_deg(l) - exp_deg(G[j].lead[1]))
        counter += 1
        heappush(pairs, (exp_deg(l), sugar, i, j, counter, l))

    for i in range(len(G)):
        for j in range(i):
            push_pair(j, i)

    while pairs:
        _, sugar, i, j, _, l = heappop(pairs)
        a, b = _s_vec(G[i], G[j], l, mo)
        svec = a - b
        if svec.is_zero:
            continue
        trow_parts = None
        if transform:
            di = exp_div(l, G[i].lead[1])
            dj = exp_div(l, G[j].lead[1])
            trow_parts = [p.mul_term(ONE / G[i].coeff, di) for p in G[i].trow]
            trow_parts = [q1 - q2.mul_term(ONE / G[j].coeff, dj)
                          for q1, q2 in zip(trow_parts, G[j].trow)]
        red = reduce_elem(svec, trow_parts)
        if red is None:
            continue
        rem, trow = red
        G.append(_Elem(rem, mo, sugar, trow))
        for k in range(len(G) - 1):
            push_pair(k, len(G) - 1)
    return G


def _minimalize(G, mo):
    """Drop elements whose lead is divisible by another element's lead."""
    keep = []
    for i, e in enumerate(G):
        li = e.lead
        redundant = False
        for j, f in enumerate(G):
            if i == j:
                continue
            lj = f.lead
            if lj[0] == li[0] and exp_div(li[1], lj[1]) is not None:
                if exp_div(lj[1], li[1]) is not None and j > i:
                    continue  # equal leads: keep the earlier one
                redundant = True
                break
        if not redundant:
            keep.append(e)
    return keep


def standard_basis(gens, mo, transform=False):
    """Standard basis of the submodule (or ideal, rank 1) generated by gens.

    Global orders: the unique reduced Groebner basis, monic, sorted by
    decreasing lead.  Local orders: a minimal monic standard basis (no tail
    reduction, which need not terminate over local rings).

    With transform=True also returns rows T with basis[j] = sum T[j][i]*gens[i].
    """
    vecs = [as_vec(g) for g in gens]
    vecs_nz = [v for v in vecs if not v.is_zero]
    if not vecs_nz:
        return ([], []) if transform else []
    n = vecs_nz[0].n

    local = not mo.is_global
    work_mo = mo
    if local and all(all(_is_homogeneous(p) for p in v.polys) for v in vecs_nz):
        # leading terms agree with the global twin on homogeneous input
        work_mo = ModOrder(Order("degrevlex", n, perm=mo.ring.perm), mo.rule, mo.elim)

    G = _compute_basis(gens, work_mo, transform)
    G = _minimalize(G, mo)

    if not local:
        # tail-reduce for the canonical reduced basis
        changed = True
        while changed:
            changed = False
            for i in range(len(G)):
                others = [_Reducer(e.vec, mo) for k, e in enumerate(G) if k != i]
                if not others:
                    continue
                quots, rem = divide_vec(G[i].vec, others, mo)
                if rem != G[i].vec:
                    changed = True
                    trow = G[i].trow
                    if transform:
                        for q, e in zip(quots, [e for k, e in enumerate(G) if k != i]):
                            if not q.is_zero:
                                trow = [a - q * b for a, b in zip(trow, e.trow)]
                    if rem.is_zero:
                        G.pop(i)
                        break
                    G[i] = _Elem(rem, mo, G[i].sugar, trow)

    out = []
    for e in G:
        c = e.coeff
        vec = e.vec.scale(ONE / c)
        trow = [t.scale(ONE / c) for t in e.trow] if transform else None
        out.append((vec, mo.key(e.lead), trow))
    out.sort(key=lambda t: t[1], reverse=True)
    basis = [v for v, _, _ in out]
    if transform:
        return basis, [t for _, _, t in out]
    return basis


def _is_homogeneous(p):
    if p.is_zero:
        return True
    degs = {exp_deg(e) for e in p.terms}
    return len(degs) == 1


# ---------------------------------------------------------------------------
# ideal-level API


def _ideal_mo(order):
    return ModOrder(order, "TOP")


_STD_CACHE_SIZE = 512


@lru_cache(maxsize=_STD_CACHE_SIZE)
def _std_cached(gens, order):
    return tuple(v.polys[0] for v in
                 standard_basis([Vec([g]) for g in gens], _ideal_mo(order)))


def std_ideal(gens, order):
    """Cached standard basis of an ideal, as a tuple of Poly."""
    key = tuple(g for g in gens if not g.is_zero)
    if not key:
        return ()
    return _std_cached(key, order)


def reduce_poly(f, basis, order):
    v = normal_form(Vec([f]), [Vec([g]) for g in basis], _ideal_mo(order))
    return v.polys[0]


def ideal_contains(f, gens, order):
    basis = std_ideal(gens, order)
    if not basis:
        return f.is_zero
    return reduce_poly(f, basis, order).is_zero


def ideal_equal(gens1, gens2, order):
    return (all(ideal_contains(g, gens1, order) for g in gens2)
            and all(ideal_contains(g, gens2, order) for g in gens1))


def is_unit_ideal(gens, order):
    if not any(gens):
        return False
    one = Poly.const(gens[0].n, 1)
    return ideal_contains(one, gens, order)


class Ideal:
    """An ideal of Q[x] carried with its monomial order.  Interpreted in the
    localization at the origin whenever the order is local."""

    __slots__ = ("gens", "order")

    def __init__(self, gens, order):
        self.gens = tuple(g for g in gens if not g.is_zero)
        self.order = order

    @property
    def n(self):
        return self.order.n

    def std(self):
        return std_ideal(self.gens, self.order)

    def normal_form(self, f):
        return reduce_poly(f, self.std(), self.order)

    def contains(self, f):
        return ideal_contains(f, self.gens, self.order)

    def equals(self, other):
        return ideal_equal(self.gens, other.gens, self.order)

    def is_unit(self):
        return is_unit_ideal(self.gens, self.order)

    def __repr__(self):
        return f"Ideal({len(self.gens)} gens, {self.order.kind})"


# ---------------------------------------------------------------------------
# syzygies and derived operations


def syzygies(vecs):
    """Generators of {a in R^s : sum a_i * vecs_i = 0} for the given vectors
    (exact polynomial syzygies; they also generate all local syzygies)."""
    vecs = [as_vec(v) for v in vecs]
    s = len(vecs)
    if not vecs:
        return []
    r = vecs[0].r
    n = vecs[0].n
    zero = Poly.zero(n)
    embedded = []
    for i, v in enumerate(vecs):
        tail = [zero] * s
        tail[i] = Poly.const(n, 1)
        embedded.append(Vec(list(v.polys) + tail))
    mo = ModOrder(Order("degrevlex", n), "ELIM", elim=r)
    basis = standard_basis(embedded, mo)
    out = []
    for b in basis:
        if all(p.is_zero for p in b.polys[:r]):
            out.append(Vec(b.polys[r:]))
    return out


def module_quotient(target, module_gens):
    """{g in R : g * target lies in the module generated by module_gens},
    as a list of ideal generators."""
    sy = syzygies([target] + list(module_gens))
    gens = [s.polys[0] for s in sy if not s.polys[0].is_zero]
    return gens


def ideal_quotient(I, J, order):
    """(I : J) over the polynomial ring; valid in the localization as well."""
    I = [g for g in I if not g.is_zero]
    J = [g for g in J if not g.is_zero]
    if not J:
        raise ValueError("quotient by the zero ideal")
    if not I:
        return []
    n = J[0].n
    s = len(J)
    zero = Poly.zero(n)
    rows = [Vec(J)]
    for f in I:
        for k in range(s):
            comps = [zero] * s
            comps[k] = f
            rows.append(Vec(comps))
    sy = syzygies(rows)
    gens = [s_.polys[0] for s_ in sy if not s_.polys[0].is_zero]
    gens = list(std_ideal(tuple(gens), order)) if gens else []
    return gens


def saturation(I, f, order):
    """(I : f^infinity), iterating quotients until stable."""
    cur = list(I)
    while True:
        nxt = ideal_quotient(cur, [f], order)
        if ideal_equal(cur, nxt, Order("degrevlex", f.n)):
            return nxt
        cur = nxt


def _extend(p, extra):
    return Poly._raw(p.n + extra, {e + (0,) * extra: c for e, c in p.terms.items()})


def _restrict(p, n):
    return Poly._raw(n, {e[:n]: c for e, c in p.terms.items()})


def intersect_ideals(I, J, n):
    """I * t + J * (1 - t) eliminated in t; the classic intersection trick."""
    t = Poly.variable(n + 1, n)
    one = Poly.const(n + 1, 1)
    gens = [_extend(f, 1) * t for f in I] + [_extend(g, 1) * (one - t) for g in J]
    elim = eliminate(gens, [n], n + 1)
    return [_restrict(p, n) for p in elim]


def eliminate(gens, drop, n):
    """Intersection with the subring omitting the dropped variables."""
    drop = sorted(set(drop))
    keep = [i for i in range(n) if i not in drop]
    perm = tuple(drop) + tuple(keep)
    order = Order("block", n, blocks=(len(drop), len(keep)), perm=perm)
    basis = std_ideal(tuple(gens), order)
    out = [p for p in basis if not (p.vars_used() & set(drop))]
    return out


def min_generators_local(vecs, extra=()):
    """Minimal number of generators at the origin of the module generated by
    vecs, modulo the submodule generated by extra (Nakayama: the count is the
    dimension of M/mM, read off from syzygy constants).  Returns
    (count, indices of a minimal generating subset of vecs)."""
    vecs = [as_vec(v) for v in vecs]
    extra = [as_vec(v) for v in extra]
    s = len(vecs)
    sy = syzygies(vecs + extra)
    rows = [sy_i.at_origin()[:s] for sy_i in sy]
    echelon = _row_echelon(rows)
    mu = s - len(echelon)
    selected = []
    span = [row[:] for row in echelon]
    for j in range(s):
        ej = [Fraction(0)] * s
        ej[j] = ONE
        if not _in_row_span(ej, span):
            selected.append(j)
            span = _row_echelon(span + [ej])
        if len(selected) == mu:
            break
    return mu, selected


def local_colength(gens, n):
    """Dimension over Q of the local ring at the origin modulo the ideal,
    or None when infinite.  Counts standard monomials under the local
    standard-basis staircase."""
    order = Order("ds", n)
    basis = std_ideal(tuple(gens), order)
    if not basis:
        return None
    leads = [order.leading_exp(p) for p in basis]
    box = []
    for i in range(n):
        pure = [e[i] for e in leads if all(e[j] == 0 for j in range(n) if j != i)]
        if not pure:
            return None
        box.append(min(pure))
    count = 0
    stack = [()]
    for i in range(n):
        stack = [e + (k,) for e in stack for k in range(box[i])]
    for e in stack:
        if not any(exp_div(e, le) is not None for le in leads):
            count += 1
    return count


def local_dim(gens, n):
    """Dimension at the origin of the vanishing locus: the maximal number of
    variables meeting no leading monomial of a local standard basis.
    Returns -1 for the (locally) unit ideal."""
    order = Order("ds", n)
    basis = std_ideal(tuple(gens), order)
    if not basis:
        return n
    leads = [order.leading_exp(p) for p in basis]
    if any(exp_deg(e) == 0 for e in leads):
        return -1
    best = -1
    for mask in range(1 << n):
        subset = {i for i in range(n) if mask >> i & 1}
        if len(subset) <= best:
            continue
        if not any(all(i in subset for i, k in enumerate(e) if k) for e in leads):
            best = len(subset)
    return best


# ---------------------------------------------------------------------------
# exact linear algebra over Q


def _row_echelon(rows):
    """Reduced row echelon basis of the row space (zero rows dropped)."""
    basis = []
    for row in rows:
        row = list(row)
        for b in basis:
            piv = next(i for i, x in enumerate(b) if x)
            if row[piv]:
                c = row[piv] / b[piv]
                row = [x - c * y for x, y in zip(row, b)]
        if any(row):
            basis.append(row)
    basis.sort(key=lambda b: next(i for i, x in enumerate(b) if x))
    return basis


def _in_row_span(vec, basis):
    row = list(vec)
    for b in basis:
        piv = next(i for i, x in enumerate(b) if x)
        if row[piv]:
            c = row[piv] / b[piv]
            row = [x - c * y for x, y in zip(row, b)]
    return not any(row)


def kernel_basis(rows, ncols):
    """Basis of {x : A x = 0} for the matrix with the given rows."""
    echelon = _row_echelon(rows)
    pivots = [next(i for i, x in enumerate(b) if x) for b in echelon]
    free = [j for j in range(ncols) if j not in pivots]
    out = []
    for j in free:
        x = [Fraction(0)] * ncols
        x[j] = ONE
        for b, piv in zip(reversed(echelon), reversed(pivots)):
            # back-substitute: b . x = 0
            acc = sum((b[k] * x[k] for k in range(piv + 1, ncols)), Fraction(0))
            x[piv] = -acc / b[piv]
        out.append(x)
    return out


# ---------------------------------------------------------------------------
# radical test


class RadicalVerdict:
    """Outcome of the radical test with its certificates.

    status    -- "radical" | "not_radical" | "undecided"
    witness   -- for not_radical: (g, k) with g outside the ideal locally
                 but g^k inside; None otherwise
    method    -- which certification path decided
    seed      -- PRNG seed used by the heuristic path (reproducibility)
    """

    __slots__ = ("status", "witness", "method", "seed")

    def __init__(self, status, witness=None, method="", seed=None):
        self.status = status
        self.witness = witness
        self.method = method
        self.seed = seed

    def __repr__(self):
        return f"RadicalVerdict({self.status}, method={self.method!r})"


def _is_zero_dimensional(basis, order, n):
    if not basis:
        return False
    leads = [order.leading_exp(p) for p in basis]
    for i in range(n):
        if not any(all(e[j] == 0 for j in range(n) if j != i) and e[i] > 0
                   for e in leads):
            return False
    return True


def _univariate_in(p, i):
    return all(all(k == 0 for j, k in enumerate(e) if j != i) for e in p.terms)


def _squarefree_univariate(f, i):
    g = poly_gcd(f, f.diff(i))
    sf = exact_div(f, g)
    assert sf is not None
    return sf


def _member_local(f, gens, order_local):
    return ideal_contains(f, tuple(gens), order_local)


def _power_in_local(g, gens, order_local, cap=200):
    p = g
    for k in range(1, cap + 1):
        if _member_local(p, gens, order_local):
            return k
        p = p * g
    raise EngineError("no power of the candidate witness entered the ideal")


def radical_test(gens, n, seed=0):
    """Decide whether the ideal generated by gens is radical in the local ring
    at the origin.  Zero-dimensional ideals are decided exactly (Seidenberg:
    adjoin squarefree parts of the univariate eliminants); monomial ideals are
    decided combinatorially; otherwise a seeded hyperplane-slice heuristic
    proposes witnesses which are then certified or the test returns undecided.
    Every radical/not_radical verdict carries explicit membership witnesses.
    """
    gens = tuple(g for g in gens if not g.is_zero)
    global_order = Order("degrevlex", n)
    local_order = Order("ds", n)
    gb = std_ideal(gens, global_order)
    if not gb:
        return RadicalVerdict("radical", method="zero ideal")
    if is_unit_ideal(list(gens), local_order):
        # the germ at the origin is the unit ideal; trivially radical there
        return RadicalVerdict("radical", method="unit at origin")

    if _is_zero_dimensional(gb, global_order, n):
        sqfs = []
        for i in range(n):
            elim = eliminate(list(gb), [j for j in range(n) if j != i], n)
            uni = [p for p in elim if _univariate_in(p, i) and not p.is_constant()]
            if not uni:
                raise EngineError("zero-dimensional ideal without eliminant")
            f = min(uni, key=lambda p: p.degree_in(i))
            sqfs.append(_squarefree_univariate(f, i))
        radical_gens = list(gb) + sqfs
        for g in std_ideal(tuple(radical_gens), global_order):
            if not _member_local(g, gens, local_order):
                k = _power_in_local(g, gens, local_order)
                return RadicalVerdict("not_radical", witness=(g, k),
                                      method="zero-dimensional")
        return RadicalVerdict("radical", method="zero-dimensional")

    if all(len(p.terms) == 1 for p in gb):
        # monomial ideal: radical iff every minimal generator is squarefree
        for p in gb:
            e = next(iter(p.terms))
            if any(k > 1 for k in e):
                root = Poly.monomial(n, tuple(min(k, 1) for k in e))
                if not _member_local(root, gens, local_order):
                    k = _power_in_local(root, gens, local_order)
                    return RadicalVerdict("not_radical", witness=(root, k),
                                          method="monomial")
        return RadicalVerdict("radical", method="monomial")

    # general positive-dimensional germ: hunt certified witnesses
    rng = random.Random(seed)
    candidates = [Poly.variable(n, i) for i in range(n)]
    for _ in range(8):
        coeffs = [rng.randint(-3, 3) for _ in range(n)]
        lin = Poly(n, {tuple(1 if j == i else 0 for j in range(n)): c
                       for i, c in enumerate(coeffs) if c})
        if not lin.is_zero:
            candidates.append(lin)
    for g in candidates:
        if _member_local(g, gens, local_order):
            continue
        p = g
        for k in range(2, 13):
            p = p * g
            if _member_local(p, gens, local_order):
                return RadicalVerdict("not_radical", witness=(g, k),
                                      method="witness search", seed=seed)
    return RadicalVerdict("undecided", method="witness search exhausted",
                          seed=seed)
