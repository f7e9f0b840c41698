import random
from fractions import Fraction

import pytest

from hypcount.errors import (
    DomainError,
    FractionalExponent,
    NonzeroConstantTerm,
    ZeroConstantTerm,
)
from hypcount.fps import Series, XPoly


def S(*coeffs, order=None, denom=1):
    return Series(list(coeffs), order, denom)


def random_series(rng, order, denom=1, invertible=False):
    coeffs = [rng.randint(-4, 4) for _ in range(order + 1)]
    if rng.random() < 0.4:
        coeffs[rng.randrange(order + 1)] = Fraction(rng.randint(-5, 5), rng.choice((2, 3)))
    if invertible:
        coeffs[0] = rng.choice((1, -1, 2))
    return Series(coeffs, order, denom)


# -- add ---------------------------------------------------------------------


def test_add_cancellation():
    assert S(1, 1, order=4) + S(1, -1, order=4) == S(2, order=4)


def test_add_identity():
    s = S(0, 1, 3, order=5)
    assert Series.zero(5) + s == s


def test_add_direct():
    assert S(0, 1, 3, order=3) + S(0, 0, 2, order=3) == S(0, 1, 5, order=3)


def test_add_truncates_to_min_order():
    out = S(1, 1, 1, 1, order=3) + S(1, 1, order=1)
    assert out.order == 1
    assert out.coeffs == (2, 2)


# -- mul ---------------------------------------------------------------------


def test_mul_difference_of_squares():
    assert S(1, 1, order=4) * S(1, -1, order=4) == S(1, 0, -1, order=4)


def test_mul_exactness_with_fractions():
    a = S(Fraction(1, 3), Fraction(1, 7), order=2)
    b = S(3, 0, 21, order=2)
    assert (a * b).coeffs == (1, Fraction(3, 7), 7)


def test_mul_bigint_no_overflow():
    big = 10 ** 40
    a = S(big, big, order=2)
    assert (a * a).coeffs == (big * big, 2 * big * big, big * big)


# -- invert ------------------------------------------------------------------


def test_invert_geometric():
    assert S(1, -1, order=6).invert() == Series([1] * 7, 6)


def test_invert_identity():
    assert Series.one(5).invert() == Series.one(5)


def test_invert_zero_constant_raises():
    with pytest.raises(ZeroConstantTerm):
        S(0, 1, order=3).invert()


def test_invert_roundtrip_random():
    rng = random.Random(7)
    for _ in range(200):
        a = random_series(rng, 64, invertible=True)
        assert a * a.invert() == Series.one(64)


# -- compose_monomial --------------------------------------------------------


def test_compose_monomial_scaling():
    s = S(0, 1, 2, order=4)
    assert s.compose_monomial(2) == S(0, 0, 1, 0, 2, order=4)


def test_compose_monomial_constant_fixed():
    assert Series.one(5).compose_monomial(5) == Series.one(5)


def test_compose_monomial_nesting():
    rng = random.Random(11)
    for _ in range(50):
        a = random_series(rng, 24)
        m, n = rng.choice(((2, 3), (3, 2), (2, 2), (5, 1)))
        assert a.compose_monomial(m).compose_monomial(n) == a.compose_monomial(m * n)


# -- qderiv ------------------------------------------------------------------


def test_qderiv_termwise():
    geo = S(1, -1, order=6).invert()
    assert geo.qderiv() == Series([n for n in range(7)], 6)


def test_qderiv_constant():
    assert Series.one(4).qderiv() == Series.zero(4)


def test_qderiv_requires_integer_exponents():
    with pytest.raises(FractionalExponent):
        S(1, 1, order=2, denom=4).qderiv()


def test_qderiv_is_derivation():
    rng = random.Random(13)
    for _ in range(60):
        a = random_series(rng, 20)
        b = random_series(rng, 20)
        assert (a * b).qderiv() == a.qderiv() * b + a * b.qderiv()


# -- pow ---------------------------------------------------------------------


def test_pow_binomial():
    assert S(1, 1, order=4) ** 2 == S(1, 2, 1, order=4)


def test_pow_zero_is_one():
    rng = random.Random(17)
    assert random_series(rng, 8) ** 0 == Series.one(8)


def test_pow_negative_inverts():
    assert S(1, -1, order=5) ** -2 == (S(1, -1, order=5).invert()) ** 2


def test_pow_negative_zero_constant_raises():
    with pytest.raises(ZeroConstantTerm):
        S(0, 1, order=3) ** -1


# -- substitute --------------------------------------------------------------


def sin_series(order):
    from math import factorial

    return Series.from_terms(
        {2 * j + 1: Fraction((-1) ** j, factorial(2 * j + 1)) for j in range(order)},
        order,
    )


def test_substitute_two_sin_half():
    half = Series.from_terms({1: Fraction(1, 2)}, 6)
    got = sin_series(6).substitute(half) * 2
    assert got == Series.from_terms(
        {1: 1, 3: Fraction(-1, 24), 5: Fraction(1, 1920)}, 6
    )


def test_substitute_identity():
    rng = random.Random(19)
    x = Series.from_terms({1: 1}, 12)
    s = random_series(rng, 12)
    coeffs = list(s.coeffs)
    coeffs[0] = 0
    s = Series(coeffs, 12)
    assert x.substitute(s) == s


def test_substitute_square_of_two_sin_half():
    # oracle: square the Taylor series by hand: z^2 - z^4/12 + ...
    half = Series.from_terms({1: Fraction(1, 2)}, 6)
    two_sin = sin_series(6).substitute(half) * 2
    sq = Series.from_terms({2: 1}, 6).substitute(two_sin)
    assert sq[2] == 1 and sq[4] == Fraction(-1, 12)
    assert sq == two_sin * two_sin


def test_substitute_nonzero_constant_raises():
    with pytest.raises(NonzeroConstantTerm):
        S(1, 1, order=3).substitute(S(1, 1, order=3))


# -- ring axioms, denom handling, serialization ------------------------------


def test_ring_axioms_random():
    rng = random.Random(23)
    for _ in range(60):
        a = random_series(rng, 16)
        b = random_series(rng, 16)
        c = random_series(rng, 16)
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


def test_denom_alignment_in_arithmetic():
    quarter = Series.from_terms({1: 1}, 8, denom=4)  # q^(1/4), order 2 in q
    whole = S(1, 1, order=2)  # 1 + q
    out = quarter * whole
    assert out.denom == 4
    assert out.order == 8  # min common order after rescaling
    assert out[1] == 1 and out[5] == 1 and sum(map(abs, out.coeffs)) == 2


def test_denom_roundtrip_preserves_coeffs():
    rng = random.Random(29)
    for _ in range(40):
        a = random_series(rng, 10, denom=rng.choice((1, 2)))
        up = a.rescale(a.denom * 4)
        assert up == a
        assert up.reduce_denom() == a


def test_equality_after_rescaling():
    a = S(1, 0, 2, order=2, denom=1)
    b = a.rescale(4)
    assert a == b and b == a


def test_json_roundtrip():
    s = S(1, Fraction(-3, 2), 0, 7, order=5, denom=4)
    assert Series.from_json(s.to_json()) == s
    assert s.to_json()["coeffs"] == ["1", "-3/2", "0", "7", "0", "0"]


def test_getitem_rejects_phantom_tail():
    s = S(1, 2, order=1)
    with pytest.raises(IndexError):
        s[5]


def test_format_rendering():
    assert S(1, -1, 0, Fraction(1, 2), order=3).format() == "1 - q + 1/2q^3"
    assert Series.zero(3).format() == "0"


# -- XPoly -------------------------------------------------------------------


def test_xpoly_mul_truncates_degree():
    one = Series.one(4)
    p = XPoly([one, one])  # 1 + x
    sq = p.mul(p, xdeg=1)
    assert sq.xdeg == 1
    assert sq.coefficient(0) == one and sq.coefficient(1) == one * 2


def test_xpoly_coefficient_beyond_degree_is_zero():
    p = XPoly([Series.one(3)])
    assert p.coefficient(5).is_zero()


def test_xpoly_requires_common_denom():
    with pytest.raises(DomainError):
        XPoly([Series.one(3, denom=1), Series.one(3, denom=4)])
