import pytest
from hypothesis import given, strategies as st

from hyperchar.finite_field import make_field
from hyperchar.varieties import (
    CurveInstance,
    affine_count,
    alpha,
    count_points,
    f_hypothesis,
    g_hypothesis,
    point_f_layout,
    remark_check,
    root_count,
    std_layout,
    thm_pointcount_F,
    thm_pointcount_G,
)


def projective_by_charts(ctx, d, lam):
    """Points [x1 : x2] of P^1 counted chart by chart."""
    c = ctx.mul(ctx.from_int(d), lam)
    n = 0
    for x1 in ctx.elements():  # chart x2 = 1
        if ctx.add(ctx.pow(x1, d), 1) == ctx.mul(c, x1):
            n += 1
    # the point [1 : 0] lies on the curve iff 1 = 0, never
    return n


def test_small_instance():
    ctx = make_field(7)
    res = count_points(CurveInstance(ctx, 3, 1))
    assert res.projective == root_count(ctx, 3, 1) == projective_by_charts(ctx, 3, 1)
    assert res.agrees


@given(st.sampled_from([5, 7, 11, 13]), st.integers(2, 6), st.integers(0, 12))
def test_affine_orbits(p, d, lam):
    ctx = make_field(p)
    lam %= p
    aff = affine_count(ctx, d, lam)
    assert (aff - 1) % (p - 1) == 0
    assert (aff - 1) // (p - 1) == projective_by_charts(ctx, d, lam)


def test_cubic_counts_q13():
    ctx = make_field(13)
    for lam in ctx.units():
        assert count_points(CurveInstance(ctx, 3, lam)).projective in {0, 1, 2, 3}


def test_lambda_zero_has_no_root_comparison():
    res = count_points(CurveInstance(make_field(7), 3, 0))
    assert res.roots is None and res.agrees is None
    assert remark_check(CurveInstance(make_field(7), 3, 0)).status == "skip"


def test_hypotheses():
    assert g_hypothesis(3, 3) is not None and g_hypothesis(7, 3) is None
    assert "∤" in g_hypothesis(5, 5)
    assert f_hypothesis(7, 3) is None
    assert f_hypothesis(11, 3) is not None and f_hypothesis(7, 4) is not None


def test_alpha_and_layout():
    ctx = make_field(11)
    assert alpha(ctx, 4, 2) == (2**4 * 3**3) % 11
    a, b = std_layout(4)
    assert [str(x) for x in a] == ["1/4", "1/2", "3/4"]
    assert [str(x) for x in b] == ["0", "1/3", "2/3"]


def test_point_f_layout_d3():
    ctx = make_field(7)
    assert point_f_layout(ctx, 3) == ((2, 4), (0,))


def test_point_counts():
    assert thm_pointcount_G(CurveInstance(make_field(7), 3, 1), 5).passed
    assert all(thm_pointcount_G(CurveInstance(make_field(11), 4, l), 5).passed for l in range(1, 11))
    assert thm_pointcount_G(CurveInstance(make_field(3), 3, 1), 5).status == "skip"
    assert all(thm_pointcount_F(CurveInstance(make_field(7), 3, l)).passed for l in range(1, 7))
    assert thm_pointcount_G(CurveInstance(make_field(5, 2), 3, 1)).status == "skip"


def test_degree_validation():
    with pytest.raises(ValueError):
        CurveInstance(make_field(7), 1, 1)
