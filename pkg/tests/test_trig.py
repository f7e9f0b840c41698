import math
import random
from fractions import Fraction

import pytest

from hypcount.errors import BoundTooSmall
from hypcount.fps import Series
from hypcount import qforms, trig


# -- Chebyshev polynomials ----------------------------------------------------


def test_T2_and_T3():
    assert trig.chebyshev(2).coeffs == (-1, 0, 2)
    assert trig.chebyshev(3).coeffs == (0, -3, 0, 4)


def test_T5_sine_identity_numeric():
    theta = 0.3
    got = trig.chebyshev(5).eval_float(math.sin(theta))
    assert abs(got - math.sin(5 * theta)) < 1e-12  # (-1)^2 sin(5t)


def test_odd_sine_identity_random():
    rng = random.Random(5)
    for _ in range(20):
        theta = rng.uniform(-math.pi, math.pi)
        for n in range(0, 7):
            got = trig.chebyshev(2 * n + 1).eval_float(math.sin(theta))
            want = (-1) ** n * math.sin((2 * n + 1) * theta)
            assert abs(got - want) < 1e-10


def test_even_composition_identity_exact():
    for n in range(0, 13):
        assert trig.cheb_even_identity_exact(n)


def test_recurrence_structure():
    for n in range(1, 13):
        p = trig.chebyshev(n)
        assert sum(p.coeffs) == 1  # T_n(1) = 1
        assert p.coeffs[-1] == 2 ** (n - 1)


def test_cheb_half_doubled_integrality():
    assert trig.cheb_half_doubled(1) == (0, 1)  # 2 T_1(x/2) = x
    assert trig.cheb_half_doubled(2) == (-2, 0, 1)  # x^2 - 2
    assert trig.cheb_half_doubled(3) == (0, -3, 0, 1)  # x^3 - 3x


# -- theta blocks --------------------------------------------------------------


def test_h_block_lowest_term():
    h = trig.theta_block("h", 12)
    assert h.coefficient(1)[0] == 1  # 2 T_1(x/2) = x at u^0


def test_g_block_constant_and_x2():
    g = trig.theta_block("g", 12)
    assert g.coefficient(0)[0] == 1
    assert g.coefficient(2)[2] == 1  # from 2T_2(x/2) = x^2 - 2 at u^2


def test_block_parity():
    h = trig.theta_block("h", 32)
    g = trig.theta_block("g", 32)
    assert all(h.coefficient(i).is_zero() for i in range(0, h.xdeg + 1, 2))
    assert all(g.coefficient(i).is_zero() for i in range(1, g.xdeg + 1, 2))


def test_h_block_x1_is_cube_of_even_pochhammer():
    # the x-coefficient at k=0 must be (q^2;q^2)^3 with q=u^2 (Jacobi cube)
    h = trig.theta_block("h", 24)
    assert h.coefficient(1) == qforms.pochhammer(1, 2, 12).compose_monomial(2) ** 3


# -- Andrews-Rose expansions ----------------------------------------------------


def test_andrews_rose_H_equals_block():
    assert trig.andrews_rose_H(32, 13) == trig.theta_block_q("h", 32, 13)


def test_andrews_rose_G_equals_block():
    assert trig.andrews_rose_G(32, 13) == trig.theta_block_q("g", 32, 13)


def test_H_x1_coefficient():
    H = trig.andrews_rose_H(16, 3)
    assert H.coefficient(1) == qforms.pochhammer(1, 2, 16) ** 3  # A_0 = 1 term


# -- lattice-sum route -----------------------------------------------------------


def test_lattice_sums_rebuild_blocks():
    for kind in ("h", "g"):
        direct = trig.theta_block_from_lattice_sum(kind, 5, 32)
        assert direct == trig.theta_block(kind, 32)


def test_lattice_sum_bound_guard():
    with pytest.raises(BoundTooSmall):
        trig.theta_block_from_lattice_sum("h", 3, 32)  # 2*9 <= 32


def test_change_of_variable_roundtrip():
    # z(x(z)) = z as formal series
    order = 13
    x_of_z = trig.two_sin_half(order)
    z_of_x = trig.z_of_x(order)
    assert z_of_x.substitute(x_of_z) == Series.from_terms({1: 1}, order)
    assert x_of_z.substitute(z_of_x) == Series.from_terms({1: 1}, order)


# -- sine substitution ------------------------------------------------------------


def test_substitute_low_order_fixed_point():
    # with every multiplicity <= 1 and no room for shifts, coefficients pass through
    data = {(1, 1, 0): Fraction(5, 3), (0, 1, 1): 2}
    out = trig.sine_substitute(data, 2)
    assert out == data


def test_substitute_single_variable_shift():
    # one point of multiplicity 1: the z^3 output picks up -1/4 * s(3,1) = -1/4
    out = trig.sine_substitute({(1,): 1}, 5)
    assert out[(1,)] == 1
    assert out[(3,)] == Fraction(-1, 4)
    assert out[(5,)] == Fraction(1, 16) * 1  # (-1/4)^2 s(5,1)


def test_substitute_routes_agree_randomized():
    rng = random.Random(404)
    for _ in range(8):
        data = {}
        for _ in range(rng.randint(1, 3)):
            profile = [0, 0, 0, 0]
            for _ in range(rng.randint(1, 6)):
                profile[rng.randrange(4)] += 1
            data[tuple(profile)] = Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3)))
        order = rng.randint(6, 9)
        assert trig.sine_substitute(data, order) == trig.sine_substitute_combinatorial(
            data, order
        )


def test_substitute_sixteen_point_profiles():
    profile = [0] * 16
    for v in (0, 4, 8, 12):
        profile[v] = 1
    data = {tuple(profile): 1}
    out = trig.sine_substitute(data, 6)
    combo = trig.sine_substitute_combinatorial(data, 6)
    assert out == combo
    shifted = list(profile)
    shifted[0] = 3
    assert out[tuple(shifted)] == Fraction(-1, 4)


# -- differential identities -------------------------------------------------------


def test_h_ode_small_and_default():
    assert trig.h_ode_check(2)
    assert trig.h_ode_check(16)


def test_h_ode_perturbed_fails():
    h = trig.two_sin_half(18)
    coeffs = list(h.coeffs)
    coeffs[3] += Fraction(1, 7)
    r1, r2 = trig.ode_residuals(Series(coeffs, 18))
    assert not (r1.truncate(16).is_zero() and r2.truncate(16).is_zero())
