from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hyperchar.padic import (
    EisensteinElem,
    PadicScalar,
    floor_identity_check,
    gamma_bridge_check,
    gamma_direct,
    gamma_int,
    gamma_multiplication_check,
    gamma_reflection_check,
    gross_koblitz_check,
    padic_gamma,
    teich_realize,
    zeta_p,
)
from hyperchar.padic.eisenstein import gauss_sum_eisenstein, gross_koblitz_sides
from hyperchar.padic.gamma import frac, lift
from hyperchar.padic.lemmas import floor_identity_sides, gamma_bridge_sides

PRIMES = [3, 5, 7, 11, 13]


# scalars -----------------------------------------------------------------------


def test_scalar_basics():
    x = PadicScalar.from_rational(5, Fraction(3, 25), 4)
    assert x.valuation == -2
    assert (x * 25).residue() == 3
    assert PadicScalar.from_int(7, -1, 3).as_small_int() == -1
    assert PadicScalar.zero(7, 3).is_zero()
    assert PadicScalar.from_int(5, 2, 3).render() == "5^0 * 2 mod 5^3 (= 2)"


@given(st.sampled_from(PRIMES), st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_rational_round_trip(p, a, b):
    if b % p == 0:
        b += 1
    k = 6
    x = PadicScalar.from_rational(p, Fraction(a, b), k)
    assert (x * b).residue() == a % p**k


@given(st.sampled_from(PRIMES), st.integers(1, 10**6), st.integers(1, 10**6))
def test_division_inverts_multiplication(p, a, b):
    k = 6
    x, y = PadicScalar.from_int(p, a, k), PadicScalar.from_int(p, b, k)
    if y.valuation == 0:
        assert ((x * y) / y).congruent(x, k)


def test_teichmuller_realize():
    w = teich_realize(5, 1, 2, 2)
    assert w.residue() == 7
    assert teich_realize(7, 1, 6, 4).as_small_int() == -1
    assert teich_realize(7, 3, 1, 4).residue() == 1


# Gamma_p ----------------------------------------------------------------------


def test_gamma_small_values():
    assert padic_gamma(5, 3, 0).residue() == 1
    assert padic_gamma(5, 3, 1).as_small_int() == -1
    # 1/2 = 13 mod 25, so Gamma_5(1/2) = Gamma_5(13) mod 25
    assert lift(5, 2, Fraction(1, 2)) == 13
    assert padic_gamma(5, 2, Fraction(1, 2)).residue() == gamma_direct(5, 2, 13)


@given(st.sampled_from(PRIMES), st.integers(1, 3), st.integers(0, 4000))
def test_gamma_matches_direct_product(p, k, n):
    assert gamma_int(p, k, n) == gamma_direct(p, k, n)


@given(st.sampled_from(PRIMES), st.integers(1, 3), st.integers(0, 2000))
def test_gamma_functional_equation(p, k, n):
    m = p**k
    g, g1 = gamma_int(p, k, n), gamma_int(p, k, n + 1)
    assert g1 == (-g if n % p == 0 else -n * g) % m


@given(st.sampled_from(PRIMES), st.integers(1, 3), st.integers(0, 300), st.integers(1, 4))
def test_gamma_continuity(p, k, n, j):
    # x = y mod p^k gives Gamma_p(x) = Gamma_p(y) mod p^k
    assert gamma_int(p, k, n) == gamma_int(p, k + 1, n + j * p**k) % p**k


def test_lift_rejects_nonintegral():
    with pytest.raises(ValueError):
        lift(5, 3, Fraction(1, 5))


# lemmas -----------------------------------------------------------------------


@pytest.mark.parametrize("p", [5, 7, 11])
def test_reflection(p):
    assert all(gamma_reflection_check(p, 3, l).passed for l in range(1, p - 1))


def test_reflection_rejects_l_zero():
    with pytest.raises(ValueError):
        gamma_reflection_check(5, 3, 0)


@pytest.mark.parametrize("p,t", [(5, 2), (7, 3), (11, 4), (7, 1)])
def test_multiplication(p, t):
    assert all(gamma_multiplication_check(p, 3, l, t).passed for l in range(p - 1))


def test_multiplication_rejects_t_divisible_by_p():
    with pytest.raises(ValueError):
        gamma_multiplication_check(7, 3, 1, 7)


def test_floor_identity():
    assert floor_identity_check(7, 3).passed
    assert floor_identity_check(47, 10).passed
    lhs, rhs = floor_identity_sides(11, 4, 3)
    assert lhs == rhs
    with pytest.raises(ValueError):
        floor_identity_check(3, 3)


def test_bridges():
    lhs, rhs = gamma_bridge_sides(7, 4, 0, "plus")
    assert lhs.as_small_int() == 1 and rhs.as_small_int() == 1
    for form in ("minus", "plus"):
        assert gamma_bridge_check(7, 4, 3, form).passed
    assert all(gamma_bridge_check(11, 4, l, "plus").passed for l in range(10))
    assert all(gamma_bridge_check(11, 4, l, "minus").passed for l in range(1, 10))
    with pytest.raises(ValueError):
        gamma_bridge_sides(7, 4, 0, "minus")


# Eisenstein ring and Gross-Koblitz -----------------------------------------------


@pytest.mark.parametrize("p", [3, 5, 7])
def test_uniformizer_and_zeta(p):
    C = 6
    pi = EisensteinElem.pi(p, C)
    assert pi ** (p - 1) + p == 0
    zeta, cert = zeta_p(p, C)
    assert cert >= 4 * (p - 1)
    one = EisensteinElem.scalar(p, C, 1)
    assert (zeta**p - one).valuation() >= cert
    assert (zeta - one - pi).valuation() >= 2


@pytest.mark.parametrize("p", [5, 7])
def test_quadratic_gauss_sum_square(p):
    C = 6
    g = gauss_sum_eisenstein(p, C, (p - 1) // 2)
    sign = 1 if p % 4 == 1 else -1
    assert (g * g - sign * p).valuation() >= (p - 1) * (C - 2)


@pytest.mark.parametrize("p", [5, 7])
def test_gross_koblitz(p):
    for a in range(p - 1):
        assert gross_koblitz_check(p, 20, a).passed
    lhs, rhs, _ = gross_koblitz_sides(p, 20, 0)
    assert lhs == -1 and rhs == -1


def test_gross_koblitz_precision_guard():
    with pytest.raises(ValueError):
        gross_koblitz_sides(7, 5, 1)


def test_frac():
    assert frac(Fraction(-1, 3)) == Fraction(2, 3)
    assert frac(Fraction(7, 2)) == Fraction(1, 2)
