"""Reduced hypersurface germs and their logarithmic vector fields.

A DivisorGerm is a squarefree polynomial h with h(0) = 0, carried with its
variable names and cached Jacobian data.  Logarithmic vector fields are the
syzygies of (dh/dx_1, ..., dh/dx_n, h) projected to the first n slots;
freeness is decided by the minimal local generator count together with a
determinant certificate det(M) = unit * h (Saito's criterion), each side
certifying the other.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from .errors import InputError, EngineError
from .poly import Poly, Order, parse, poly_str, exact_div, squarefree_check
from .groebner import (Vec, ModOrder, std_ideal, ideal_contains, ideal_equal,
                       is_unit_ideal, syzygies, division_certificate,
                       min_generators_local, standard_basis)


class DivisorGerm:
    """A reduced hypersurface germ {h = 0} at the origin of C^n."""

    def __init__(self, names, h):
        self.names = tuple(names)
        self.n = len(self.names)
        if isinstance(h, str):
            h = parse(h, self.names)
        if h.n != self.n:
            raise InputError("variable count mismatch")
        if h.is_zero:
            raise InputError("h must be nonzero")
        if h.constant_term() != 0:
            raise InputError("h(0) must vanish: the divisor passes through the origin")
        self.h = h
        self.partials = tuple(h.diff(i) for i in range(self.n))
        if not squarefree_check(h, self.partials):
            raise InputError("h is not squarefree: the divisor must be reduced")
        self.local_order = Order("ds", self.n)
        self.global_order = Order("degrevlex", self.n)

    def __repr__(self):
        return f"DivisorGerm({poly_str(self.h, self.names)})"

    def poly(self, text):
        return parse(text, self.names)

    def str_of(self, p):
        return poly_str(p, self.names)

    @cached_property
    def is_smooth(self):
        return any(p.constant_term() != 0 for p in self.partials)

    @cached_property
    def active_vars(self):
        return sorted(self.h.vars_used())

    @cached_property
    def passive_vars(self):
        return [i for i in range(self.n) if i not in self.h.vars_used()]

    # -- mod-h ideal arithmetic in the local ring -------------------------

    def mod_h_basis(self, gens):
        """Local standard basis of the ideal generated by gens and h."""
        return std_ideal(tuple(gens) + (self.h,), self.local_order)

    def member_mod_h(self, f, gens):
        """f in <gens, h> in the localization at the origin."""
        return ideal_contains(f, tuple(gens) + (self.h,), self.local_order)

    def ideal_equal_mod_h(self, gens1, gens2):
        return ideal_equal(tuple(gens1) + (self.h,),
                           tuple(gens2) + (self.h,), self.local_order)

    def is_unit_mod_h(self, gens):
        return is_unit_ideal(list(gens) + [self.h], self.local_order)

    def in_h(self, f):
        """f in <h> locally."""
        return ideal_contains(f, (self.h,), self.local_order)

    # -- Jacobian data -----------------------------------------------------

    @cached_property
    def jacobian_gens(self):
        """Generators of J_D inside O_D: the canonical local standard basis of
        the partials taken mod h."""
        return self.mod_h_basis(self.partials)

    @cached_property
    def jacobian_pullback(self):
        """Generators of the preimage of J_D in the ambient ring: h and its
        partials."""
        return (self.h,) + self.partials


def jacobian_ideal(D):
    """J_D as an ideal of O_D (generators reduced mod h, unit-normalized)."""
    return list(D.jacobian_gens)


class VectorField:
    """delta = sum coeffs[i] * d/dx_i with polynomial coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)

    def apply(self, f):
        n = f.n
        out = Poly.zero(n)
        for i, c in enumerate(self.coeffs):
            out = out + c * f.diff(i)
        return out

    def is_logarithmic(self, D):
        """dh(delta) in <h> locally: the defining membership of Der(-log D)."""
        return D.in_h(self.apply(D.h))

    def __eq__(self, other):
        return isinstance(other, VectorField) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def str_of(self, D):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c.is_zero:
                parts.append(f"({poly_str(c, D.names)})*d/d{D.names[i]}")
        return " + ".join(parts) if parts else "0"


def log_derivations(D):
    """Generators of Der(-log D): syzygies of (dh/dx_1, ..., dh/dx_n, h)
    projected to the first n slots.  Every output is certified logarithmic."""
    rows = list(D.partials) + [D.h]
    fields = []
    for s in syzygies(rows):
        coeffs = s.polys[: D.n]
        if all(c.is_zero for c in coeffs):
            continue
        fld = VectorField(coeffs)
        if not fld.is_logarithmic(D):
            raise EngineError("syzygy output violated the logarithmic condition")
        fields.append(fld)
    return fields


class SaitoMatrix:
    """n x n matrix whose rows are a candidate basis of Der(-log D), together
    with the freeness certificate det = unit * h."""

    def __init__(self, D, fields):
        self.germ = D
        self.fields = tuple(fields)
        if len(fields) != D.n:
            raise InputError("a Saito matrix needs exactly n rows")
        self.rows = tuple(f.coeffs for f in fields)
        self.det = _det([[p for p in row] for row in self.rows])
        self.unit = None          # quotient det/h when polynomial
        self.unit_value = None    # (det/h)(0) as a Fraction
        self._certify()

    def _certify(self):
        D = self.germ
        for f in self.fields:
            if not f.is_logarithmic(D):
                raise InputError("row is not a logarithmic vector field")
        q = exact_div(self.det, D.h)
        if q is not None:
            self.unit = q
            self.unit_value = q.constant_term()
        else:
            # det is in <h> locally with a unit cofactor recovered from the
            # Mora division certificate u*det = a*h
            quots, unit, rem = division_certificate(
                self.det, [D.h], ModOrder(D.local_order))
            if not rem.is_zero:
                raise InputError("det(M) does not lie in <h> at the origin")
            self.unit_value = quots[0].constant_term() / unit.constant_term()
        if self.unit_value == 0:
            raise InputError("det(M)/h vanishes at the origin: no Saito certificate")

    @property
    def certified(self):
        return self.unit_value not in (None, 0)


def _det(m):
    k = len(m)
    if k == 1:
        return m[0][0]
    out = None
    for j in range(k):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det(minor)
        if j % 2:
            term = -term
        out = term if out is None else out + term
    return out


def _adjugate(m):
    k = len(m)
    adj = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            minor = [row[:j] + row[j + 1:] for r, row in enumerate(m) if r != i]
            c = _det(minor) if k > 1 else Poly.const(m[0][0].n, 1)
            if (i + j) % 2:
                c = -c
            adj[j][i] = c  # transpose of the cofactor matrix
    return adj


def is_free(D):
    """Freeness verdict plus a certified Saito matrix when free.

    Free iff Der(-log D) needs exactly n local generators; the returned basis
    carries the determinant certificate det(M) = unit * h."""
    fields = log_derivations(D)
    mu, selected = min_generators_local([Vec(f.coeffs) for f in fields])
    if mu != D.n:
        return False, None
    M = SaitoMatrix(D, [fields[i] for i in selected])
    if not M.certified:
        raise EngineError("minimal generator count n without a Saito certificate")
    return True, M


class EulerField:
    """Witness for Euler homogeneity: chi = (1/unit) * sum coeffs[i] d/dx_i
    with chi(h) = h exactly, i.e. sum coeffs[i]*dh/dx_i = unit*h."""

    __slots__ = ("coeffs", "unit")

    def __init__(self, coeffs, unit):
        self.coeffs = tuple(coeffs)
        self.unit = unit

    def normalized(self):
        """Plain VectorField when the unit is a constant."""
        if not self.unit.is_constant():
            return None
        c = self.unit.constant_term()
        return VectorField([p.scale(Fraction(1) / c) for p in self.coeffs])

    def check(self, D):
        lhs = Poly.zero(D.n)
        for c, p in zip(self.coeffs, D.partials):
            lhs = lhs + c * p
        return lhs == self.unit * D.h


def euler_field(D):
    """The witness chi with chi(h) = h when h lies in the ideal of its
    partials locally; None otherwise."""
    basis, T = _partials_basis(D)
    quots, unit, rem = division_certificate(D.h, list(basis), ModOrder(D.local_order))
    if not rem.is_zero:
        return None
    coeffs = [Poly.zero(D.n) for _ in range(D.n)]
    for q, trow in zip(quots, T):
        if q.is_zero:
            continue
        for i in range(D.n):
            coeffs[i] = coeffs[i] + q * trow[i]
    ef = EulerField(coeffs, unit)
    if not ef.check(D):
        raise EngineError("Euler certificate failed to re-multiply")
    return ef


_PARTIALS_CACHE = {}


def _partials_basis(D):
    key = (D.h, D.names)
    if key not in _PARTIALS_CACHE:
        basis, T = standard_basis(list(D.partials), ModOrder(D.local_order),
                                  transform=True)
        _PARTIALS_CACHE[key] = ([v.polys[0] for v in basis], T)
    return _PARTIALS_CACHE[key]


def is_euler_homogeneous(D):
    """h in <dh/dx_1, ..., dh/dx_n> in the local ring at the origin."""
    return euler_field(D) is not None


class LogOneForm:
    """omega = (sum a_i dx_i) / (extra * h) with polynomial a_i and a unit
    extra factor (1 unless a dual basis needed a non-constant Saito unit)."""

    __slots__ = ("a", "extra")

    def __init__(self, a, extra=None):
        self.a = tuple(a)
        self.extra = extra if extra is not None else Poly.const(a[0].n, 1)

    def is_logarithmic(self, D):
        return form_is_logarithmic(self.a, D)

    def str_of(self, D):
        num = " + ".join(f"({poly_str(c, D.names)})*d{D.names[i]}"
                         for i, c in enumerate(self.a) if not c.is_zero)
        den = poly_str(self.extra * D.h, D.names)
        return f"({num}) / ({den})"


def form_is_logarithmic(a, D):
    """Pairwise criterion: dh_i * a_j - dh_j * a_i in <h> locally for i < j,
    equivalently dh wedge omega is holomorphic."""
    for i in range(D.n):
        for j in range(i + 1, D.n):
            lhs = D.partials[i] * a[j] - D.partials[j] * a[i]
            if not D.in_h(lhs):
                return False
    return True


def log_forms_basis(M):
    """Dual basis of logarithmic 1-forms of a certified Saito matrix, from the
    adjugate: row j of adj(M)^T divided by the unit; the pairing with the
    fields is verified to be exactly Kronecker delta."""
    D = M.germ
    if not M.certified:
        raise InputError("log_forms_basis needs a certified Saito matrix")
    adj = _adjugate([[p for p in row] for row in M.rows])
    forms = []
    for j in range(D.n):
        row = [adj[i][j] for i in range(D.n)]  # column j of adj = row j of adj^T
        if M.unit is not None and M.unit.is_constant():
            c = M.unit.constant_term()
            forms.append(LogOneForm([p.scale(Fraction(1) / c) for p in row]))
        elif M.unit is not None:
            divided = [exact_div(p, M.unit) for p in row]
            if all(d is not None for d in divided):
                forms.append(LogOneForm(divided))
            else:
                forms.append(LogOneForm(row, extra=M.unit))
        else:
            forms.append(LogOneForm(row, extra=None))
    # pairing <delta_i, omega_j> = delta_ij, i.e.
    # sum_k M[i][k]*a_j[k] == kronecker * extra_j * h exactly
    for i in range(D.n):
        for j, w in enumerate(forms):
            s = Poly.zero(D.n)
            for k in range(D.n):
                s = s + M.rows[i][k] * w.a[k]
            expected = w.extra * D.h if i == j else Poly.zero(D.n)
            if s != expected:
                raise EngineError("dual basis pairing is not Kronecker")
        if not forms[i].is_logarithmic(D):
            raise EngineError("dual basis form is not logarithmic")
    return forms
