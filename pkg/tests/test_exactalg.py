import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spinorlaw.errors import InvalidWeightError
from spinorlaw.exactalg import LaurentPoly, det, factorial, poly_eval, poly_mul, poly_pow, torus_point

y = LaurentPoly(1, {(1,): 1, (-1,): 1})


def test_mul_examples():
    assert poly_mul(y, y) == LaurentPoly(1, {(2,): 1, (0,): 2, (-2,): 1})
    assert poly_mul(y, LaurentPoly.constant(1)) == y
    diff = LaurentPoly(1, {(1,): 1, (-1,): -1})
    assert poly_mul(diff, y) == LaurentPoly(1, {(2,): 1, (-2,): -1})


def test_mul_rejects_mismatch():
    with pytest.raises(ValueError):
        poly_mul(y, LaurentPoly.constant(2))


def test_pow_examples():
    assert poly_pow(y, 0) == 1
    assert poly_pow(y, 2) == LaurentPoly(1, {(2,): 1, (0,): 2, (-2,): 1})
    assert poly_pow(y, 4).terms == {(4,): 1, (2,): 4, (0,): 6, (-2,): 4, (-4,): 1}


def test_eval_examples():
    assert poly_eval(y, (Fraction(2),)) == Fraction(5, 2)
    assert poly_eval(LaurentPoly.constant(1, 7), (Fraction(3, 7),)) == 7
    # 4 + 1 + 1/4
    assert poly_eval(LaurentPoly(1, {(2,): 1, (0,): 1, (-2,): 1}), (Fraction(2),)) == Fraction(21, 4)


def test_eval_rejects_zero():
    with pytest.raises(InvalidWeightError):
        poly_eval(y, (Fraction(0),))


def test_no_zero_coefficients_stored():
    p = LaurentPoly(2, {(1, 0): 3, (0, 1): 0}) + LaurentPoly(2, {(1, 0): -3})
    assert len(p) == 0


@pytest.mark.parametrize("k, expected", [(0, 1), (5, 120), (20, 2432902008176640000)])
def test_factorial(k, expected):
    assert factorial(k) == expected


def test_factorial_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_torus_point_parsing():
    assert torus_point(["3/2", "2"]) == (Fraction(3, 2), Fraction(2))
    with pytest.raises(InvalidWeightError):
        torus_point(["0"])
    with pytest.raises(InvalidWeightError):
        torus_point(["-1/2"])


def test_det_matches_leibniz():
    import itertools
    m = [[Fraction(i * j + 1, i + 2) for j in range(4)] for i in range(4)]
    m[0][0] = Fraction(0)
    leibniz = Fraction(0)
    for perm in itertools.permutations(range(4)):
        sign = (-1) ** sum(perm[i] > perm[j] for i in range(4) for j in range(i + 1, 4))
        leibniz += sign * math.prod(m[i][perm[i]] for i in range(4))
    assert det(m) == leibniz
    assert det([[2, 3], [4, 5]]) == -2


exponents = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
polys = st.dictionaries(exponents, st.integers(-5, 5), max_size=5).map(lambda d: LaurentPoly(2, d))
points = st.tuples(*[st.fractions(min_value=Fraction(1, 5), max_value=5)] * 2)


@given(polys, polys, points)
def test_eval_is_multiplicative(a, b, pt):
    assert poly_eval(poly_mul(a, b), pt) == poly_eval(a, pt) * poly_eval(b, pt)


@given(polys, st.integers(0, 8))
def test_pow_is_iterated_mul(p, N):
    expected = LaurentPoly.constant(2)
    for _ in range(N):
        expected = expected * p
    assert poly_pow(p, N) == expected


@given(st.fractions(), st.fractions(), st.fractions(), st.fractions())
def test_rational_sum_cross_multiplication(a, b, c, d):
    if b == 0 or d == 0:
        return
    x, z = a / b, c / d
    assert x + z == Fraction(a * d + c * b, b * d)
