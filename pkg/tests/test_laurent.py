import random

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from cyclojones import (
    DivisionByZeroDenominator,
    LaurentFraction,
    LaurentPoly,
    NotExpressible,
    RemainderNonzero,
)

A = LaurentPoly.monomial

polys = st.dictionaries(
    st.integers(-60, 60), st.integers(-(2**64), 2**64), max_size=8
).map(LaurentPoly)
nonzero_polys = polys.filter(lambda f: not f.is_zero)


def test_ring_op_examples():
    assert (A(2) + (-A(2))).is_zero
    assert (A(2) - A(-2)) * (A(2) + A(-2)) == A(4) - A(-4)
    assert A(3) * A(-3) == 1
    assert A(2, 5) == LaurentPoly({2: 5})
    assert 3 * A(1) == A(1, 3)
    assert (A(1) + 1) ** 2 == A(2) + A(1, 2) + 1


def test_canonical_form_no_zero_coefficients():
    f = LaurentPoly({4: 1, 0: 0, -2: 3})
    assert dict(f.items()) == {-2: 3, 4: 1}
    assert LaurentPoly({1: 2, 2: 0}) + LaurentPoly({1: -2}) == LaurentPoly()


def test_exact_div_examples():
    assert (A(4) - A(-4)).exact_div(A(2) - A(-2)) == A(2) + A(-2)
    f = A(7) - A(-3, 2) + 1
    assert f.exact_div(LaurentPoly.one()) == f
    with pytest.raises(RemainderNonzero) as err:
        (A(2) + 1).exact_div(A(2) - 1)
    # long division leaves remainder 2
    assert err.value.remainder == LaurentPoly.from_int(2)


def test_exact_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        (A(2) + 1).exact_div(LaurentPoly.zero())


def test_substitute_power_examples():
    assert (A(2) - A(-2)).substitute_power(-1) == A(-2) - A(2)
    assert (A(1) + 1).substitute_power(2) == A(2) + 1
    with pytest.raises(ValueError):
        A(1).substitute_power(0)


def test_negative_power_rejected():
    with pytest.raises(ValueError):
        (A(1) + 1) ** -1


def test_fraction_examples():
    f = A(3) - A(-1, 7)
    assert LaurentFraction(f) + LaurentFraction(-f) == LaurentFraction(0)
    # q^-1/(q-1) == 1/(q^2-q) by cross-multiplication
    assert LaurentFraction(A(-4), A(4) - 1) == LaurentFraction(1, A(8) - A(4))
    a, b = A(2) - A(-2), A(2) + A(-2)
    assert LaurentFraction(a, b) * LaurentFraction(b, a) == LaurentFraction(1)
    with pytest.raises(DivisionByZeroDenominator):
        LaurentFraction(1, LaurentPoly.zero())


def test_fraction_canonical_orientation():
    # denominator shifted to lowest exponent 0, positive leading coefficient
    frac = LaurentFraction(A(-4), -(A(6) - A(2)))
    assert frac.den.min_exp == 0
    assert frac.den.coeff(frac.den.max_exp) > 0
    assert frac == LaurentFraction(-A(-6), A(4) - 1)


def test_frac_to_poly():
    assert LaurentFraction(A(4) - A(-4), A(2) - A(-2)).to_poly() == A(2) + A(-2)
    assert LaurentFraction(0, A(2) - 1).to_poly() == LaurentPoly.zero()
    with pytest.raises(RemainderNonzero):
        LaurentFraction(1, 1 - A(4)).to_poly()


def test_eval_unit_root_examples():
    assert abs(A(4).eval_unit_root(1, 4) - 1) < mpmath.mpf("1e-50")
    got = (A(2) - A(-2)).eval_unit_root(1, 8)  # 2i sin(pi/2) = 2i
    assert abs(got - mpmath.mpc(0, 2)) < mpmath.mpf("1e-40")
    assert (LaurentPoly.zero()).eval_unit_root(3, 5) == 0


def test_eval_unit_root_huge_coefficients():
    f = LaurentPoly({100: 2**256, -100: -(2**256), 3: 12345})
    g = LaurentPoly({50: 3**100, -7: -9})
    with mpmath.workdps(400):
        lhs = (f * g).eval_unit_root(1, 16)
        rhs = f.eval_unit_root(1, 16) * g.eval_unit_root(1, 16)
        assert abs(lhs - rhs) < mpmath.mpf("1e-40")


def test_kronecker_path_matches_dict_multiplication():
    # operands big enough to take the packed-integer multiply path
    from cyclojones.laurent import _KRONECKER_CUTOFF, _mul_dicts

    rng = random.Random(31337)
    f = LaurentPoly({2 * i: rng.randint(-(2**90), 2**90) for i in range(-150, 151)})
    g = LaurentPoly({2 * i + 4: rng.randint(-(2**90), 2**90) for i in range(-100, 101)})
    assert len(f) * len(g) >= _KRONECKER_CUTOFF
    fast = f * g
    slow = LaurentPoly(_mul_dicts(dict(f.items()), dict(g.items())))
    assert fast == slow


def test_render():
    assert (A(4) + 1).render("𝔮") == "𝔮^2 + 1"
    with pytest.raises(NotExpressible):
        A(3).render("𝔮")
    # descending exponent order (frozen; A^-16, A^-12, A^-4 in the q variable)
    assert LaurentPoly({-16: -1, -12: 1, -4: 1}).render("q") == "q^-1 + q^-3 - q^-4"
    assert LaurentPoly.zero().render("A") == "0"
    assert (A(2, -3) + A(1) - 5).render("A") == "-3A^2 + A - 5"


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero


@settings(max_examples=60, deadline=None)
@given(polys, nonzero_polys)
def test_exact_div_roundtrip(a, b):
    assert (a * b).exact_div(b) == a


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_substitution_is_ring_involution(f, g):
    inv = lambda h: h.substitute_power(-1)
    assert inv(inv(f)) == f
    assert inv(f * g) == inv(f) * inv(g)
    assert inv(f + g) == inv(f) + inv(g)


@settings(max_examples=40, deadline=None)
@given(polys, nonzero_polys, nonzero_polys)
def test_fraction_equality_is_representation_independent(a, b, u):
    x = LaurentFraction(a, b)
    y = LaurentFraction(a * u, b * u)
    assert x == y and y == x
    assert x - y == LaurentFraction(0)
    if not a.is_zero:
        assert LaurentFraction(a * b, a).to_poly() == b
