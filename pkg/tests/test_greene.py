from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hyperchar.characters import char_eval
from hyperchar.exact_arith import CycloNum
from hyperchar.finite_field import make_field
from hyperchar.greene import GreeneParams, greene_F, greene_summation_check


def binom_by_definition(ctx, a, b):
    """B(-1)/q sum_x A(x) B-bar(1-x)."""
    acc = CycloNum.zero(ctx.q - 1)
    for x in ctx.elements():
        acc = acc + char_eval(ctx, a, x) * char_eval(ctx, -b, ctx.sub(1, x))
    return acc * char_eval(ctx, b, ctx.neg(1)) * Fraction(1, ctx.q)


def greene_by_definition(ctx, upper, lower, x):
    n = ctx.q - 1
    acc = CycloNum.zero(n)
    for j in range(n):
        term = binom_by_definition(ctx, upper[0] + j, j)
        for a, b in zip(upper[1:], lower):
            term = term * binom_by_definition(ctx, a + j, b + j)
        acc = acc + term * char_eval(ctx, j, x)
    return acc * Fraction(ctx.q, n)


def test_two_f_one_matches_definition_q7():
    ctx = make_field(7)
    up, lo = (2, 4), (0,)
    for x in ctx.elements():
        assert greene_F(GreeneParams(ctx, up, lo, x)) == greene_by_definition(ctx, up, lo, x)


def test_three_f_two_matches_definition_q9():
    ctx = make_field(3, 2)
    up, lo = (4, 1, 6), (4, 3)
    for x in (1, 2, 5, 8):
        assert greene_F(GreeneParams(ctx, up, lo, x)) == greene_by_definition(ctx, up, lo, x)


def test_value_at_zero():
    ctx = make_field(11)
    assert greene_F(GreeneParams(ctx, (1, 2, 3), (4, 5), 0)).is_zero()


def test_params_validation_and_reduction():
    ctx = make_field(7)
    p = GreeneParams(ctx, (8, -1), (13,), 3)
    assert p.upper == (2, 5) and p.lower == (1,) and p.n == 1
    with pytest.raises(ValueError):
        GreeneParams(ctx, (1,), (1,))


@pytest.mark.parametrize("q,e", [(7, 1), (3, 2), (11, 1)])
def test_summation_fixed(q, e):
    ctx = make_field(q, e)
    n = ctx.q - 1
    for x in ctx.elements():
        assert greene_summation_check(GreeneParams(ctx, (n // 3 if n % 3 == 0 else 1, 2), (0,), x)).passed


FIELDS = [make_field(7), make_field(3, 2), make_field(11)]


@given(st.sampled_from(FIELDS), st.integers(1, 2), st.data())
def test_summation_random(ctx, n, data):
    exps = st.integers(0, ctx.q - 2)
    up = tuple(data.draw(exps) for _ in range(n + 1))
    lo = tuple(data.draw(exps) for _ in range(n))
    x = data.draw(st.integers(0, ctx.q - 1))
    assert greene_summation_check(GreeneParams(ctx, up, lo, x)).passed
