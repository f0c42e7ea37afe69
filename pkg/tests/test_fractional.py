"""Fractional ideals: construction, duality, inclusion, products."""

import pytest

from logres.errors import InputError
from logres.germs import DivisorGerm, jacobian_ideal
from logres.fractional import (FractionalIdeal, nzd_witness,
                               nzd_witness_quotient, find_nzd_in)


def node():
    return DivisorGerm(["x", "y"], "x*y")


def cusp():
    return DivisorGerm(["x", "y"], "x^2 - y^3")


def test_nzd_witness_and_quotient_oracle_agree():
    D = node()
    cases = ["x", "y", "x + y", "x - y", "1 + x", "x^2", "x + y^2"]
    for text in cases:
        q = D.poly(text)
        fast = nzd_witness(D, q)
        slow = nzd_witness_quotient(D, q)
        assert (fast is None) == (slow is None), text
        if fast is not None:
            # both witnesses certify: w*q in <h>, w not in <h> locally
            for w in (fast, slow):
                assert D.in_h(w * q)
                assert not D.in_h(w)


def test_make_node_example():
    D = node()
    one = D.poly("1")
    I = FractionalIdeal.make([(one, one), (D.poly("y"), D.poly("x + y"))], D)
    assert I.den == D.poly("x + y")
    assert D.ideal_equal_mod_h(I.num, [D.poly("x"), D.poly("y")])


def test_make_unit():
    D = node()
    I = FractionalIdeal.make([(D.poly("1"), D.poly("1"))], D)
    assert I.equals(FractionalIdeal.ring(D))


def test_make_zero_divisor_denominator():
    D = node()
    with pytest.raises(InputError) as err:
        FractionalIdeal.make([(D.poly("1"), D.poly("x"))], D)
    assert "witness" in str(err.value)


def test_dual_node_jacobian():
    D = node()
    J = FractionalIdeal(D, jacobian_ideal(D), 1)
    R = J.dual()
    expected = FractionalIdeal.make(
        [(D.poly("1"), D.poly("1")), (D.poly("y"), D.poly("x + y"))], D)
    assert R.equals(expected)


def test_dual_ring_is_ring():
    D = node()
    O = FractionalIdeal.ring(D)
    assert O.dual().equals(O)


def test_dual_cusp_jacobian():
    C = cusp()
    J = FractionalIdeal(C, jacobian_ideal(C), 1)
    R = J.dual()
    expected = FractionalIdeal.make(
        [(C.poly("1"), C.poly("1")), (C.poly("y"), C.poly("x"))], C)
    assert R.equals(expected)


def test_includes_and_equals():
    D = node()
    J = FractionalIdeal(D, jacobian_ideal(D), 1)
    R = J.dual()
    O = FractionalIdeal.ring(D)
    assert R.includes(O)
    assert not O.includes(R)
    assert R.includes(J)
    assert J.equals(J)
    # duality reverses inclusions
    assert J.dual().includes(R.dual()) or R.dual().equals(J.dual())
    assert R.dual().equals(J) or J.includes(R.dual())


def test_product():
    D = node()
    J = FractionalIdeal(D, jacobian_ideal(D), 1)
    O = FractionalIdeal.ring(D)
    assert O.product(J).equals(J)
    R = J.dual()
    assert O.includes(J.product(R))


def test_reflexive():
    D = node()
    J = FractionalIdeal(D, jacobian_ideal(D), 1)
    assert J.is_reflexive()
    C = cusp()
    Jc = FractionalIdeal(C, jacobian_ideal(C), 1)
    assert Jc.is_reflexive()
    assert FractionalIdeal.ring(D).is_reflexive()


def test_find_nzd_skips_zero_divisors():
    D = node()
    c = find_nzd_in(D, [D.poly("x"), D.poly("y")])
    assert c is not None
    assert nzd_witness(D, c) is None


def test_as_ideal_gens():
    C = cusp()
    # <x^2, x*y> / x = <x, y> as an ideal of O_D
    I = FractionalIdeal(C, [C.poly("x^2"), C.poly("x*y")], C.poly("x"))
    gens = I.as_ideal_gens()
    assert C.ideal_equal_mod_h(gens, [C.poly("x"), C.poly("y")])
    R = FractionalIdeal(C, jacobian_ideal(C), 1).dual()
    with pytest.raises(InputError):
        R.as_ideal_gens()  # R contains y/x, not in O_D


def test_germ_mismatch():
    D = node()
    C = cusp()
    with pytest.raises(InputError):
        FractionalIdeal.ring(D).equals(FractionalIdeal.ring(C))
