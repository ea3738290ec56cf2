from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from hyperchar.gfunc import G, GParams, g_function, residue_mod
from hyperchar.padic import PadicScalar, padic_gamma, teich_realize
from hyperchar.padic.gamma import floor, frac


def g_by_definition(p, k, a, b, t):
    """The defining sum, term by term in PadicScalar arithmetic with extra digits."""
    n = len(a)
    K = k + n + 1
    total = PadicScalar.zero(p, K)
    for j in range(p - 1):
        x = F(j, p - 1)
        term = teich_realize(p, -j, t, K) * (-1) ** (j * n)
        for ai, bi in zip(a, b):
            e = -floor(frac(ai) - x) - floor(frac(-bi) + x)
            term = term * PadicScalar.from_rational(p, F(-p) ** e, K + 2 * n)
            term = term * padic_gamma(p, K, frac(ai - x)) / padic_gamma(p, K, frac(ai))
            term = term * padic_gamma(p, K, frac(-bi + x)) / padic_gamma(p, K, frac(-bi))
        total = total + term
    return total * F(-1, p - 1)


CUBIC = ((F(1, 3), F(2, 3)), (F(0), F(1, 2)))
SV2 = ((F(1, 4), F(1, 2), F(3, 4)), (F(0), F(1, 3), F(2, 3)))


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_special_values(p):
    assert G(p, 5, *CUBIC, 1).as_small_int() == 1
    phi_m2 = 1 if pow(-2 % p, (p - 1) // 2, p) == 1 else -1
    assert G(p, 5, *SV2, 1).as_small_int() == 1 + phi_m2


def test_argument_343_over_243():
    got = {p: G(p, 5, *CUBIC, F(343, 243)).as_small_int() for p in (5, 7, 11, 13)}
    assert got == {5: 1, 7: 0, 11: 2, 13: 2}


def test_zero_argument():
    assert G(7, 5, *CUBIC, 0).is_zero()
    assert G(7, 5, *CUBIC, 14).is_zero()


def test_precision_is_at_least_k():
    for p in (5, 7, 11):
        for k in (2, 4, 6):
            assert G(p, k, *SV2, 2).prec >= k


PARAMS = st.sampled_from([CUBIC, SV2, ((F(1, 5), F(2, 5), F(3, 5), F(4, 5)), (F(0), F(1, 4), F(1, 2), F(3, 4))),
                          ((F(1, 2),), (F(0),)), ((F(1, 6), F(5, 6)), (F(1, 3), F(0)))])


@given(st.sampled_from([7, 11, 13]), PARAMS, st.integers(1, 200), st.integers(3, 5))
def test_matches_definition(p, ab, t, k):
    a, b = ab
    if any(x.denominator % p == 0 for x in a + b) or t % p == 0:
        return
    want = g_by_definition(p, k, a, b, t)
    assert G(p, k, a, b, t).diff_valuation(want) >= k


@given(st.sampled_from([5, 7, 11]), st.integers(1, 100))
def test_depends_on_t_mod_p(p, t):
    assert G(p, 4, *CUBIC, t) == G(p, 4, *CUBIC, t + 3 * p)


def test_params_validation():
    with pytest.raises(ValueError):
        GParams(7, 5, (F(1, 2),), ())
    with pytest.raises(ValueError):
        GParams(7, 5, (F(1, 7),), (F(0),))
    with pytest.raises(ValueError):
        GParams(4, 5, (F(1, 3),), (F(0),))
    assert GParams(7, 5, (F(1, 3),), (F(0),), F(1, 2)).t == 4
    assert g_function(GParams(7, 5, *CUBIC, 1)).as_small_int() == 1


def test_residue_mod():
    assert residue_mod(7, F(1, 2)) == 4
    with pytest.raises(ValueError):
        residue_mod(3, F(343, 243))
