"""Engine tests: bases, normal forms, syzygies, quotients, radical test."""

from fractions import Fraction

from logres.poly import Poly, Order, parse
from logres.groebner import (Vec, ModOrder, standard_basis, normal_form,
                             division_certificate, syzygies, ideal_quotient,
                             saturation, eliminate, intersect_ideals,
                             radical_test, min_generators_local, std_ideal,
                             ideal_contains, ideal_equal, local_colength,
                             local_dim, kernel_basis, _row_echelon)

V2 = ["x", "y"]
V3 = ["x", "y", "z"]
GLOBAL2 = Order("degrevlex", 2)
LOCAL2 = Order("ds", 2)


def P(text, names=V2):
    return parse(text, names)


def test_standard_basis_global_trivial():
    basis = std_ideal((P("x"), P("y")), GLOBAL2)
    assert set(basis) == {P("x"), P("y")}


def test_standard_basis_local_cusp_jacobian():
    # <x^2 - y^3, 2x, -3y^2> generates <x, y^2> in the local ring
    basis = std_ideal((P("x^2 - y^3"), P("2*x"), P("-3*y^2")), LOCAL2)
    assert set(basis) == {P("x"), P("y^2")}
    # two-sided membership oracle
    for g in (P("x"), P("y^2")):
        assert ideal_contains(g, (P("x^2-y^3"), P("2*x"), P("-3*y^2")), LOCAL2)
    for g in basis:
        assert ideal_contains(g, (P("x"), P("y^2")), LOCAL2)


def test_spolynomials_of_basis_reduce_to_zero():
    gens = (P("x^2*y - 1"), P("x*y^2 - x"))
    basis = std_ideal(gens, GLOBAL2)
    mo = ModOrder(GLOBAL2)
    vecs = [Vec([g]) for g in basis]
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            li = mo.lead(vecs[i])
            lj = mo.lead(vecs[j])
            lcm = tuple(max(a, b) for a, b in zip(li[1], lj[1]))
            a = vecs[i].mul_term(Fraction(1) / mo.lead_coeff(vecs[i], li),
                                 tuple(x - y for x, y in zip(lcm, li[1])))
            b = vecs[j].mul_term(Fraction(1) / mo.lead_coeff(vecs[j], lj),
                                 tuple(x - y for x, y in zip(lcm, lj[1])))
            assert normal_form(a - b, vecs, mo).is_zero


def test_normal_form_examples():
    basis = [P("x"), P("y^2")]
    mo = ModOrder(LOCAL2)
    assert normal_form(Vec([P("x^2 - y^3")]), [Vec([b]) for b in basis], mo).is_zero
    rem = normal_form(Vec([P("y")]), [Vec([b]) for b in basis], mo)
    assert rem.polys[0] == P("y")
    assert normal_form(Vec([Poly.zero(2)]), [Vec([b]) for b in basis], mo).is_zero


def test_division_certificate_remultiplies():
    basis = list(std_ideal((P("x*y - 1"), P("y^2 - x")), GLOBAL2))
    f = P("x^3*y + y^3 - 2")
    quots, unit, rem = division_certificate(f, basis, ModOrder(GLOBAL2))
    recombined = rem.polys[0]
    for q, g in zip(quots, basis):
        recombined = recombined + q * g
    assert recombined == unit * f
    assert unit == Poly.const(2, 1)


def test_mora_certificate_remultiplies():
    gens = [P("x + x^2"), P("y")]
    f = P("x")  # in the local ideal: x = (x + x^2)/(1+x)
    quots, unit, rem = division_certificate(f, list(std_ideal(tuple(gens), LOCAL2)),
                                            ModOrder(LOCAL2))
    assert rem.is_zero
    basis = list(std_ideal(tuple(gens), LOCAL2))
    recombined = Poly.zero(2)
    for q, g in zip(quots, basis):
        recombined = recombined + q * g
    assert recombined == unit * f
    assert unit.constant_term() != 0


def test_ideal_quotients():
    assert ideal_equal(ideal_quotient([P("x*y")], [P("x")], GLOBAL2),
                       [P("y")], GLOBAL2)
    # the cusp dual-numerator quotient
    q = ideal_quotient([P("x"), P("x^2 - y^3")], [P("x"), P("y^2")], GLOBAL2)
    assert ideal_equal(q, [P("x"), P("y")], GLOBAL2)
    # membership oracle: every quotient element multiplies J into I
    for g in q:
        for j in (P("x"), P("y^2")):
            assert ideal_contains(g * j, (P("x"), P("x^2 - y^3")), GLOBAL2)
    # I : <1> = I
    q2 = ideal_quotient([P("x*y - y^3")], [P("1")], GLOBAL2)
    assert ideal_equal(q2, [P("x*y - y^3")], GLOBAL2)


def test_saturation():
    # strip all powers of y: <x^2 y, x y^2> : y^inf = <x>
    sat = saturation([P("x^2*y"), P("x*y^2")], P("y"), GLOBAL2)
    assert ideal_equal(sat, [P("x")], GLOBAL2)
    # y^2 in the ideal forces the saturation to the unit ideal
    sat2 = saturation([P("x*y"), P("y^2")], P("y"), GLOBAL2)
    assert ideal_equal(sat2, [P("1")], GLOBAL2)


def test_eliminate():
    x, y, t = (Poly.variable(3, i) for i in range(3))
    gens = [x - t ** 2, y - t ** 3]
    out = eliminate(gens, [2], 3)
    assert len(out) == 1
    # implicitization oracle: the eliminant vanishes under the substitution
    el = out[0]
    sub = el.subs({0: t ** 2, 1: t ** 3})
    assert sub.is_zero
    assert ideal_equal(eliminate([P("x")], [1], 2), [P("x")], GLOBAL2)
    assert eliminate([P("x - y")], [1], 2) == []


def test_intersection_matches_gcd_lcm():
    a = P("x*y")
    b = P("x^2")
    inter = intersect_ideals([a], [b], 2)
    # <xy> cap <x^2> = <x^2 y>
    assert ideal_equal(inter, [P("x^2*y")], GLOBAL2)


def test_syzygies_of_node_row():
    # syzygies of (y, x, xy) = (h_x, h_y, h) for h = xy
    sy = syzygies([P("y"), P("x"), P("x*y")])
    for s in sy:
        combo = s.polys[0] * P("y") + s.polys[1] * P("x") + s.polys[2] * P("x*y")
        assert combo.is_zero
    expected = [Vec([P("x"), P("0"), P("-1")]), Vec([P("0"), P("y"), P("-1")])]
    mo = ModOrder(GLOBAL2)
    for e in expected:
        assert normal_form(e, sy, mo).is_zero


def test_syzygy_completeness_against_linear_algebra_oracle():
    """Every syzygy of (y, x, xy) with coefficients of degree <= 2, found by
    brute-force linear algebra, lies in the module the engine returns."""
    row = [P("y"), P("x"), P("x*y")]
    monos = [(i, j) for i in range(3) for j in range(3) if i + j <= 2]
    cols = []  # one column per (slot, monomial)
    for slot in range(3):
        for e in monos:
            prod = row[slot].mul_term(Fraction(1), e)
            cols.append(prod)
    # build the linear system: coefficients of the combined polynomial vanish
    all_exps = sorted({e for c in cols for e in c.terms})
    matrix_rows = []
    for e in all_exps:
        matrix_rows.append([c.terms.get(e, Fraction(0)) for c in cols])
    kb = kernel_basis(matrix_rows, len(cols))
    sy = syzygies(row)
    mo = ModOrder(GLOBAL2)
    assert kb, "oracle found no syzygies, which is wrong"
    for vec in kb:
        parts = []
        idx = 0
        for slot in range(3):
            p = Poly.zero(2)
            for e in monos:
                if vec[idx]:
                    p = p + Poly.monomial(2, e, vec[idx])
                idx += 1
            parts.append(p)
        cand = Vec(parts)
        combo = sum((parts[k] * row[k] for k in range(3)), Poly.zero(2))
        assert combo.is_zero
        assert normal_form(cand, sy, mo).is_zero


def test_radical_verdicts():
    rv = radical_test((P("x"), P("y^2")), 2)
    assert rv.status == "not_radical"
    g, k = rv.witness
    assert not ideal_contains(g, (P("x"), P("y^2")), LOCAL2)
    assert ideal_contains(g ** k, (P("x"), P("y^2")), LOCAL2)
    assert radical_test((P("x"), P("y")), 2).status == "radical"
    assert radical_test((parse("x^2 + 1", ["x"]),), 1).status == "radical"


def test_radical_monomial_path():
    h = parse("x^2 - y^2*z", V3)
    gens = (h,) + tuple(h.diff(i) for i in range(3))
    rv = radical_test(gens, 3)
    assert rv.status == "not_radical"
    assert rv.method == "monomial"


def test_radical_witness_search_path():
    h = parse("x*y*(x+y)*(x+y*z)", V3)
    gens = (h,) + tuple(h.diff(i) for i in range(3))
    rv = radical_test(gens, 3, seed=1)
    assert rv.status == "not_radical"
    g, k = rv.witness
    local3 = Order("ds", 3)
    assert not ideal_contains(g, gens, local3)
    assert ideal_contains(g ** k, gens, local3)


def test_radical_positive_dim_monomial_radical():
    h = parse("x*y*z", V3)
    gens = (h,) + tuple(h.diff(i) for i in range(3))
    assert radical_test(gens, 3).status == "radical"


def test_min_generators_local():
    x, y = P("x"), P("y")
    mu, sel = min_generators_local([x, y, x + y])
    assert mu == 2
    one = Poly.const(2, 1)
    mu2, sel2 = min_generators_local([one, x])
    assert mu2 == 1 and sel2 == [0]
    # the cusp derivation module needs two generators
    E = Vec([P("3*x"), P("2*y")])
    H = Vec([P("-3*y^2"), P("-2*x")])
    mu3, _ = min_generators_local([E, H])
    assert mu3 == 2


def test_local_colength_and_dim():
    # Milnor number of the cusp is 2
    h = P("x^2 - y^3")
    assert local_colength([h.diff(0), h.diff(1)], 2) == 2
    assert local_colength([P("x")], 2) is None
    assert local_dim([P("x"), P("y")], 2) == 0
    assert local_dim([P("x")], 2) == 1
    assert local_dim([P("1 + x")], 2) == -1
    assert local_dim([parse("x", V3), parse("y", V3), parse("x + y", V3)], 3) == 1


def test_linear_algebra_helpers():
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert len(_row_echelon(rows)) == 1
    kb = kernel_basis(rows, 2)
    assert len(kb) == 1
    v = kb[0]
    assert v[0] * 1 + v[1] * 2 == 0


def test_local_membership_sees_units():
    # x(1-x) generates <x> locally but not globally
    gens = (P("x - x^2"),)
    assert ideal_contains(P("x"), gens, LOCAL2)
    assert not ideal_contains(P("x"), gens, GLOBAL2)


def test_homogeneous_bypass_agrees_with_mora():
    gens = (P("x^2 - y^2"), P("x*y"))  # homogeneous: bypass path
    basis_fast = std_ideal(gens, LOCAL2)
    # force the Mora path by adding an inhomogeneous redundant generator
    gens2 = (P("x^2 - y^2"), P("x*y"), P("x^3 + x^4"))
    basis_slow = std_ideal(gens2, LOCAL2)
    assert ideal_equal(list(basis_fast), list(basis_slow), LOCAL2)
