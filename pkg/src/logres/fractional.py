"""Fractional ideals on the hypersurface ring O_D = O_S / <h>.

A fractional ideal is stored as (num, den): a numerator ideal given mod h
and a denominator certified to be a nonzerodivisor mod h.  All arithmetic
happens mod h in the localization at the origin.  Duality follows
I^dual = {f : f*I inside O_D}, computed as den * (<c> : num) / c for a
certified nonzerodivisor c inside the numerator ideal; the quotient is an
ideal quotient mod h.  Equality is decided by cross-multiplied ideal
comparison.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import InputError, EngineError
from .poly import Poly, poly_str, exact_div, poly_gcd
from .groebner import (ideal_quotient, division_certificate, standard_basis,
                       ModOrder)

NZD_TRIAL_BUDGET = 32


_NZD_CACHE = {}


def nzd_witness(D, q):
    """None when q is a nonzerodivisor mod h; otherwise a witness w with
    w*q in <h> but w not in <h> locally.

    For squarefree h the zero divisors mod h are the elements sharing an
    irreducible factor with h that vanishes at the origin, so the test is
    gcd(q, h)(0) = 0 with witness h/gcd.  (The quotient characterization
    (<h> : q) = <h> is kept as an independent oracle, see
    nzd_witness_quotient.)"""
    if q.is_zero:
        return Poly.const(D.n, 1)
    key = (D.h, q)
    if key not in _NZD_CACHE:
        g = poly_gcd(q, D.h)
        if g.constant_term() != 0:
            _NZD_CACHE[key] = None
        else:
            w = exact_div(D.h, g)
            assert w is not None
            _NZD_CACHE[key] = w
    return _NZD_CACHE[key]


def nzd_witness_quotient(D, q):
    """The quotient-ideal form of the nonzerodivisor test: q is a
    nonzerodivisor mod h iff (<h> : q) = <h> in the local ring."""
    if q.is_zero:
        return Poly.const(D.n, 1)
    Q = ideal_quotient([D.h], [q], D.global_order)
    for w in Q:
        if not D.in_h(w):
            return w
    return None


def _nzd_candidates(gens, n, seed):
    """Deterministic schedule of candidate nonzerodivisors drawn from an
    ideal: generators first, then small integer combinations."""
    gens = [g for g in gens if not g.is_zero]
    for g in gens:
        yield g
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            yield gens[i] + gens[j]
            yield gens[i] - gens[j]
    rng = random.Random(seed)
    while True:
        coeffs = [rng.randint(-2, 2) for _ in gens]
        if not any(coeffs):
            continue
        acc = Poly.zero(n)
        for c, g in zip(coeffs, gens):
            if c:
                acc = acc + g.scale(c)
        yield acc


def find_nzd_in(D, gens, seed=0, budget=NZD_TRIAL_BUDGET):
    """A certified nonzerodivisor inside the ideal generated by gens mod h,
    or None after the trial budget."""
    seen = set()
    count = 0
    for cand in _nzd_candidates(gens, D.n, seed):
        if cand in seen or cand.is_zero:
            continue
        seen.add(cand)
        count += 1
        if nzd_witness(D, cand) is None:
            return cand
        if count >= budget:
            return None
    return None


class FractionalIdeal:
    """Finitely generated O_D-submodule of the total quotient ring containing
    a nonzerodivisor, in common-denominator form num/den."""

    __slots__ = ("germ", "num", "den", "_nzd_num", "_dual")

    def __init__(self, germ, num_gens, den, seed=0):
        self._dual = None
        self.germ = germ
        den = den if isinstance(den, Poly) else Poly.const(germ.n, den)
        w = nzd_witness(germ, den)
        if w is not None:
            raise InputError(
                f"denominator {poly_str(den, germ.names)} is a zero divisor mod h "
                f"(witness {poly_str(w, germ.names)})")
        self.den = den
        self.num = tuple(germ.mod_h_basis(num_gens))
        if not self.num:
            raise InputError("numerator ideal is zero mod h")
        self._nzd_num = find_nzd_in(germ, self.num, seed=seed)
        if self._nzd_num is None:
            raise InputError("numerator module contains no certified nonzerodivisor")

    @staticmethod
    def make(pairs, D, seed=0):
        """Fractional ideal generated by the fractions p/q in `pairs`."""
        pairs = list(pairs)
        if not pairs:
            raise InputError("no generators")
        dens = []
        for _, q in pairs:
            w = nzd_witness(D, q)
            if w is not None:
                raise InputError(
                    f"{poly_str(q, D.names)} is a zero divisor mod h "
                    f"(witness {poly_str(w, D.names)})")
            if q not in dens:
                dens.append(q)
        den = Poly.const(D.n, 1)
        for q in dens:
            den = den * q
        nums = []
        for p, q in pairs:
            rest = Poly.const(D.n, 1)
            for q2 in dens:
                if q2 != q:
                    rest = rest * q2
            nums.append(p * rest)
        return FractionalIdeal(D, nums, den, seed=seed)

    @staticmethod
    def ring(D):
        """O_D itself."""
        one = Poly.const(D.n, 1)
        return FractionalIdeal(D, [one], one)

    def __repr__(self):
        D = self.germ
        nums = ", ".join(poly_str(p, D.names) for p in self.num)
        return f"FractionalIdeal(<{nums}> / {poly_str(self.den, D.names)})"

    def generators(self):
        """The fractions (num_i, den) presenting this module."""
        return [(p, self.den) for p in self.num]

    def contains_fraction(self, p, q):
        """p/q in num/den, i.e. p*den in q*num mod h locally (q must be a
        nonzerodivisor, which the caller certifies)."""
        D = self.germ
        gens = [q * n for n in self.num]
        return D.member_mod_h(p * self.den, gens)

    def includes(self, other):
        """self contains other as submodules of the total quotient ring."""
        if self.germ is not other.germ and self.germ.h != other.germ.h:
            raise InputError("fractional ideals live on different germs")
        return all(self.contains_fraction(p, other.den) for p in other.num)

    def equals(self, other):
        """Cross-multiplied ideal comparison: num*den' = num'*den mod h."""
        if self.germ is not other.germ and self.germ.h != other.germ.h:
            raise InputError("fractional ideals live on different germs")
        D = self.germ
        return D.ideal_equal_mod_h([other.den * p for p in self.num],
                                   [self.den * p for p in other.num])

    def product(self, other):
        D = self.germ
        nums = [a * b for a in self.num for b in other.num]
        return FractionalIdeal(D, nums, self.den * other.den)

    def dual(self, seed=0):
        """I^dual = {f : f*I in O_D} = den * (<c> : num) / c for a certified
        nonzerodivisor c in the numerator ideal."""
        if self._dual is not None:
            return self._dual
        D = self.germ
        c = self._nzd_num
        Q = ideal_quotient([c, D.h], list(self.num), D.global_order)
        if not Q:
            raise EngineError("empty dual quotient")
        out = FractionalIdeal(D, [self.den * q for q in Q], c, seed=seed)
        # certification: I * I^dual inside O_D
        if not FractionalIdeal.ring(D).includes(self.product(out)):
            raise EngineError("dual certificate failed: I * I^dual not in O_D")
        self._dual = out
        return out

    def is_reflexive(self):
        return self.dual().dual().equals(self)

    def as_ideal_gens(self):
        """For a fractional ideal contained in O_D: polynomial generators of
        the corresponding ideal of O_D (unit factors dropped)."""
        D = self.germ
        basis, T = standard_basis([self.den, D.h], ModOrder(D.local_order),
                                  transform=True)
        basis = [v.polys[0] for v in basis]
        out = []
        for p in self.num:
            quots, unit, rem = division_certificate(p, basis, ModOrder(D.local_order))
            if not rem.is_zero:
                raise InputError("fractional ideal is not contained in O_D")
            # p = (sum_j quots_j (T_j0 den + T_j1 h)) / unit, so mod h the
            # fraction p/den is a unit multiple of sum_j quots_j T_j0
            rep = Poly.zero(D.n)
            for q, trow in zip(quots, T):
                if not q.is_zero:
                    rep = rep + q * trow[0]
            if not rep.is_zero:
                out.append(rep)
        return list(D.mod_h_basis(out)) if out else [D.h]
