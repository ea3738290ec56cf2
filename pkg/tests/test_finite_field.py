import pickle

import pytest
from hypothesis import given, strategies as st

from hyperchar.finite_field import is_prime, make_field, prime_factors, primitive_elements


def test_small_prime_helpers():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert prime_factors(360) == [2, 3, 5]


def test_prime_field_generator():
    ctx = make_field(7)
    assert ctx.generator == 3
    assert sorted(primitive_elements(ctx)) == [3, 5]


def test_quadratic_modulus():
    ctx = make_field(5, 2)
    # x^2 + 2, lowest coefficient first
    assert tuple(ctx.modulus) == (2, 0, 1)


def test_even_characteristic_rejected():
    with pytest.raises(ValueError):
        make_field(2)


def test_dlog_round_trip_q25():
    ctx = make_field(5, 2)
    assert ctx.dlog(1) == 0 and ctx.dlog(ctx.generator) == 1
    for k in range(ctx.q - 1):
        assert ctx.dlog(ctx.gen_pow(k)) == k


def test_trace():
    f7 = make_field(7)
    assert all(f7.trace(x) == x for x in f7.elements())
    ctx = make_field(5, 2)
    for x in ctx.elements():
        assert ctx.from_int(ctx.trace(x)) == ctx.add(x, ctx.pow(x, 5))
        for y in ctx.elements():
            assert ctx.trace(ctx.add(x, y)) == (ctx.trace(x) + ctx.trace(y)) % 5


@pytest.mark.parametrize("p,e", [(3, 2), (5, 2), (7, 2), (3, 3)])
def test_modulus_is_irreducible_and_generator_primitive(p, e):
    ctx = make_field(p, e)
    seen = {ctx.gen_pow(k) for k in range(ctx.q - 1)}
    assert seen == set(ctx.units())


FIELDS = [make_field(7), make_field(3, 2), make_field(5, 2), make_field(13)]


@given(st.sampled_from(FIELDS), st.data())
def test_field_axioms(ctx, data):
    el = st.integers(0, ctx.q - 1)
    x, y, z = data.draw(el), data.draw(el), data.draw(el)
    assert ctx.mul(x, ctx.add(y, z)) == ctx.add(ctx.mul(x, y), ctx.mul(x, z))
    assert ctx.add(x, ctx.neg(x)) == 0
    if x:
        assert ctx.mul(x, ctx.inv(x)) == 1
        assert ctx.pow(x, -1) == ctx.inv(x)
        assert ctx.pow(x, ctx.q - 1) == 1
    assert ctx.frobenius(ctx.mul(x, y)) == ctx.mul(ctx.frobenius(x), ctx.frobenius(y))
    assert ctx.from_coeffs(ctx.coeffs(x)) == x


def test_is_square_matches_euler():
    ctx = make_field(13)
    for x in ctx.units():
        assert ctx.is_square(x) == (pow(x, 6, 13) == 1)


def test_pickle_round_trip():
    ctx = make_field(5, 2)
    other = pickle.loads(pickle.dumps(ctx))
    assert other.q == 25 and other.mul(7, 13) == ctx.mul(7, 13)
