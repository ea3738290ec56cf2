from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hyperchar.exact_arith import CycloNum, Residue, cyclo_embed, cyclo_make, cyclotomic_poly, degree


def test_cyclotomic_polys():
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert degree(12) == 4 and degree(1) == 1


def test_reductions():
    assert cyclo_make(4, [0, 0, 1]) == -1
    assert cyclo_make(3, [1, 1, 1]).is_zero()
    assert cyclo_make(6, [0, 0, 1]) == cyclo_make(6, [-1, 1])


def test_primitive_fifth_roots_sum():
    s = sum((CycloNum.zeta(5, k) for k in range(1, 5)), CycloNum.zero(5))
    assert s == -1


def test_inverse_pair_and_zero_inverse():
    for n in (5, 6, 12):
        assert CycloNum.zeta(n) * CycloNum.zeta(n, n - 1) == 1
    with pytest.raises(ZeroDivisionError):
        CycloNum.zero(7).inverse()


def test_embed():
    assert cyclo_embed(CycloNum.zeta(2), 6) == CycloNum.zeta(6, 3) == -1
    assert cyclo_embed(CycloNum.rational(5, Fraction(3, 7)), 15) == Fraction(3, 7)
    with pytest.raises(ValueError):
        cyclo_embed(CycloNum.zeta(4), 6)


def test_residue():
    r = Residue(25, 7)
    assert int(r * r.inverse()) == 1
    assert int(Residue(7, -1)) == 6


cyc3 = st.lists(st.integers(-20, 20), min_size=2, max_size=2).map(lambda c: CycloNum(3, c))


@given(cyc3, cyc3)
def test_embed_is_multiplicative(a, b):
    assert cyclo_embed(a * b, 12) == cyclo_embed(a, 12) * cyclo_embed(b, 12)


def _elem(n):
    coeff = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))
    return st.lists(coeff, min_size=degree(n), max_size=degree(n)).map(lambda c: CycloNum.from_fractions(n, c))


@given(_elem(12), _elem(12), _elem(12))
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(_elem(9))
def test_complex_image_consistent(a):
    b = a * a + 1
    assert abs(b.to_complex() - (a.to_complex() ** 2 + 1)) < 1e-6


@given(st.integers(0, 40), st.integers(0, 40))
def test_mul_zeta(i, j):
    n = 10
    assert CycloNum.zeta(n, i).mul_zeta(j) == CycloNum.zeta(n, i + j)


@given(_elem(8))
def test_conjugate_is_involution(a):
    assert a.conjugate().conjugate() == a


def test_from_counts_matches_sum():
    counts = [3, 0, -1, 2, 0, 5]
    direct = sum((c * CycloNum.zeta(6, i) for i, c in enumerate(counts)), CycloNum.zero(6))
    assert CycloNum.from_counts(6, counts) == direct


def test_render_and_rational():
    x = CycloNum.rational(4, Fraction(-2, 3))
    assert x.is_rational() and x.to_fraction() == Fraction(-2, 3)
    assert x.render().startswith("zeta_4:")
    with pytest.raises(ValueError):
        CycloNum.zeta(4).to_fraction()
