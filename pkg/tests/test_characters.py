import pytest

from hyperchar.characters import (
    additive_char,
    additive_sum_check,
    char_eval,
    char_exp,
    order,
    orthogonality_check,
    phi,
    quadratic_exp,
    sign_char,
    teichmuller,
)
from hyperchar.exact_arith import CycloNum
from hyperchar.finite_field import make_field


def test_zero_convention():
    ctx = make_field(7)
    for m in range(6):
        assert char_eval(ctx, m, 0).is_zero()
        assert char_exp(ctx, m, 0) is None
    assert all(char_eval(ctx, 0, x) == 1 for x in ctx.units())


def test_quadratic_character_is_euler_criterion():
    ctx = make_field(13)
    h = quadratic_exp(ctx)
    for x in ctx.units():
        want = 1 if pow(x, 6, 13) == 1 else -1
        assert char_eval(ctx, h, x) == want
        assert phi(ctx, x) == want == sign_char(ctx, h, x)
    assert phi(ctx, 0) == 0


def test_t_of_minus_one():
    for ctx in (make_field(7), make_field(5, 2), make_field(3, 3)):
        assert char_eval(ctx, 1, ctx.neg(1)) == -1


def test_order():
    ctx = make_field(13)
    assert order(ctx, 0) == 1 and order(ctx, 4) == 3 and order(ctx, 1) == 12


@pytest.mark.parametrize("q", [7, 9, 25])
def test_orthogonality(q):
    p = 3 if q == 9 else 5 if q == 25 else q
    ctx = make_field(p, {7: 1, 9: 2, 25: 2}[q])
    assert orthogonality_check(ctx).passed


def test_additive_character():
    ctx = make_field(3, 2)
    assert additive_char(ctx, 0) == 1
    assert additive_sum_check(ctx).passed
    total = sum((additive_char(ctx, x) for x in ctx.elements()), CycloNum.zero(3))
    assert total.is_zero()


def test_teichmuller_values():
    assert teichmuller(5, 1, 4) == 1
    assert teichmuller(5, 2, 2) == 7
    assert teichmuller(7, 6, 5) == 7**5 - 1
    for x in range(1, 11):
        w = teichmuller(11, x, 4)
        assert pow(w, 10, 11**4) == 1 and w % 11 == x
