from fractions import Fraction
from math import lcm

import pytest
from hypothesis import given, strategies as st

from hyperchar.char_sums import (
    binomial_gauss_check,
    davenport_hasse_check,
    dh_specialization_check,
    gauss_bridge_check,
    gauss_conductor,
    gauss_inverse_check,
    gauss_sum,
    greene_binom,
    jacobi_gauss_check,
    jacobi_sum,
    lift_chars,
    phi_tt1_sum,
    theta_expansion_check,
)
from hyperchar.characters import char_eval
from hyperchar.exact_arith import CycloNum
from hyperchar.finite_field import make_field


def literal_gauss(ctx, m):
    """sum_x T^m(x) theta(x) by a double loop over x and its trace."""
    L = lcm(ctx.q - 1, ctx.p)
    counts = [0] * L
    for x in ctx.units():
        e = (L // (ctx.q - 1)) * m * ctx.dlog(x) + (L // ctx.p) * ctx.trace(x)
        counts[e % L] += 1
    return CycloNum.from_counts(L, counts)


def test_conductor():
    assert gauss_conductor(make_field(7)) == 42
    assert gauss_conductor(make_field(5, 2)) == 120


@pytest.mark.parametrize("p,e", [(7, 1), (3, 2), (5, 2)])
def test_gauss_sum_matches_literal_loop(p, e):
    ctx = make_field(p, e)
    assert gauss_sum(ctx, 0) == -1
    for m in range(ctx.q - 1):
        assert gauss_sum(ctx, m) == literal_gauss(ctx, m)


def test_gauss_inverse_formula_q7():
    ctx = make_field(7)
    for m in range(1, 6):
        assert gauss_inverse_check(ctx, m).passed
        assert gauss_sum(ctx, m) * gauss_sum(ctx, -m) == 7 * lift_chars(ctx, char_eval(ctx, m, 6))
    assert gauss_inverse_check(ctx, 0).status == "skip"


def test_jacobi():
    ctx = make_field(7)
    assert jacobi_sum(ctx, 0, 0) == 5
    for m in range(6):
        for n in range(6):
            r = jacobi_gauss_check(ctx, m, n)
            assert r.passed or (m == n == 0 and r.status == "skip")


def test_jacobi_direct():
    ctx = make_field(13)
    for m, n in [(1, 2), (3, 9), (4, 4), (6, 6)]:
        direct = CycloNum.zero(12)
        for t in ctx.elements():
            direct = direct + char_eval(ctx, m, t) * char_eval(ctx, n, ctx.sub(1, t))
        assert jacobi_sum(ctx, m, n) == direct


def test_binomial():
    ctx = make_field(7)
    assert greene_binom(ctx, 0, 0) == CycloNum.rational(6, Fraction(5, 7))
    for m in range(6):
        for n in range(6):
            r = binomial_gauss_check(ctx, m, n)
            assert r.passed or (m == n and r.status == "skip")


def test_theta_expansion():
    assert theta_expansion_check(make_field(7), 1).passed
    ctx = make_field(3, 2)
    assert all(theta_expansion_check(ctx, a).passed for a in ctx.units())
    with pytest.raises(ValueError):
        theta_expansion_check(ctx, 0)


def test_davenport_hasse():
    ctx = make_field(7)
    assert all(davenport_hasse_check(ctx, 1, psi).passed for psi in range(6))
    assert all(davenport_hasse_check(ctx, 2, psi).passed for psi in range(6))
    f13 = make_field(13)
    assert all(davenport_hasse_check(f13, 3, psi).passed for psi in range(12))
    assert all(dh_specialization_check(f13, 3, l, s).passed for l in range(12) for s in (1, -1))
    assert all(dh_specialization_check(f13, 4, l, s).passed for l in range(12) for s in (1, -1))
    with pytest.raises(ValueError):
        davenport_hasse_check(ctx, 4, 1)


def test_bridge():
    for q in (7, 13):
        ctx = make_field(q)
        assert all(gauss_bridge_check(ctx, l).passed for l in range(q - 1))


@given(st.sampled_from([3, 5, 7, 11, 13, 17, 19, 23]))
def test_phi_tt1_sum(p):
    assert phi_tt1_sum(make_field(p)) == -1
