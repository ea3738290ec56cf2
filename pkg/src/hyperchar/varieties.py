"""Brute-force point counts on Z_lambda: x1^d + x2^d = d*lambda*x1*x2^(d-1).

The equation is homogeneous, so nonzero affine solutions come in scaling
orbits of size q-1 and the projective count is (affine - 1)/(q - 1).  For
lambda != 0 that count equals the number of distinct roots of
x^d - d*lambda*x + 1 in F_q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characters import phi
from .exact_arith import CycloNum
from .finite_field import FieldCtx
from .gfunc import G
from .greene import greene_series
from .report import Timer, exact_report, padic_report, skip_report


@dataclass(frozen=True)
class CurveInstance:
    ctx: FieldCtx
    d: int
    lam: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("degree d must be at least 2")


@dataclass(frozen=True)
class CountResult:
    affine: int
    projective: int
    roots: int | None  # None when lambda = 0 (comparison not defined)

    @property
    def agrees(self) -> bool | None:
        return None if self.roots is None else self.projective == self.roots

    def to_dict(self) -> dict:
        return {"affine": self.affine, "projective": self.projective, "root_count": self.roots,
                "agrees": self.agrees}


def _powers(ctx: FieldCtx, e: int) -> list[int]:
    return [ctx.pow(x, e) for x in ctx.elements()]


def affine_count(ctx: FieldCtx, d: int, lam: int) -> int:
    """#{(x1, x2) in F_q^2 : x1^d + x2^d = d lam x1 x2^(d-1)} by enumeration."""
    pd, pd1 = _powers(ctx, d), _powers(ctx, d - 1)
    c = ctx.mul(ctx.from_int(d), lam)
    total = 0
    for x1 in ctx.elements():
        cx1 = ctx.mul(c, x1)
        a = pd[x1]
        for x2 in ctx.elements():
            if ctx.add(a, pd[x2]) == ctx.mul(cx1, pd1[x2]):
                total += 1
    return total


def root_count(ctx: FieldCtx, d: int, lam: int) -> int:
    """Number of distinct zeros of x^d - d lam x + 1 in F_q."""
    c = ctx.neg(ctx.mul(ctx.from_int(d), lam))
    poly = [1, c] + [0] * (d - 2) + [1]
    return sum(1 for x in ctx.elements() if ctx.eval_poly(poly, x) == 0)


def count_points(inst: CurveInstance) -> CountResult:
    ctx, d, lam = inst.ctx, inst.d, inst.lam
    aff = affine_count(ctx, d, lam)
    if (aff - 1) % (ctx.q - 1):
        raise ArithmeticError("affine count is not 1 mod q-1")  # pragma: no cover
    proj = (aff - 1) // (ctx.q - 1)
    roots = root_count(ctx, d, lam) if lam else None
    return CountResult(aff, proj, roots)


def alpha(ctx: FieldCtx, d: int, lam: int) -> int:
    """lambda^d (d-1)^(d-1)."""
    return ctx.mul(ctx.pow(lam, d), ctx.pow(ctx.from_int(d - 1), d - 1))


def _params(ctx: FieldCtx, d: int, lam: int, k: int | None = None) -> dict:
    return {"p": ctx.p, "q": ctx.q, "d": d, "lambda": lam, "x": None, "k": k}


# hypotheses -------------------------------------------------------------------------


def g_hypothesis(p: int, d: int) -> str | None:
    """Reason string when p | d(d-1), else None."""
    if (d * (d - 1)) % p == 0:
        return f"requires p ∤ d(d-1); p = {p} divides {d * (d - 1)}"
    return None


def f_hypothesis(q: int, d: int) -> str | None:
    if d < 3 or d % 2 == 0:
        return f"requires d >= 3 odd; got d = {d}"
    if (q - 1) % (d * (d - 1)):
        return f"requires q ≡ 1 (mod d(d-1)); q = {q}, d(d-1) = {d * (d - 1)}"
    return None


# layouts ------------------------------------------------------------------------------


def std_layout(d: int) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """[1/d, ..., (d-1)/d; 0, 1/(d-1), ..., (d-2)/(d-1)]."""
    a = tuple(Fraction(h, d) for h in range(1, d))
    b = (Fraction(0),) + tuple(Fraction(h, d - 1) for h in range(1, d - 1))
    return a, b


# point-count identities -------------------------------------------------------------------


def remark_check(inst: CurveInstance):
    """Projective count = number of distinct roots of x^d - d lam x + 1."""
    ctx = inst.ctx
    params = _params(ctx, inst.d, inst.lam)
    if inst.lam == 0:
        return skip_report("ROOT_COUNT", params, "requires lambda != 0")
    with Timer() as t:
        res = count_points(inst)
    return exact_report("ROOT_COUNT", params, res.projective, res.roots, ms=t.ms)


def thm_pointcount_G(inst: CurveInstance, k: int = 5):
    """N(Z_lambda) = 1 + G[std layout | lambda^d (d-1)^(d-1)] mod p^(k-1)."""
    ctx, d, lam = inst.ctx, inst.d, inst.lam
    params = _params(ctx, d, lam, k)
    if ctx.e != 1:
        return skip_report("POINT_G", params, "requires q = p (e = 1)")
    reason = g_hypothesis(ctx.p, d)
    if reason:
        return skip_report("POINT_G", params, reason)
    if lam == 0:
        return skip_report("POINT_G", params, "requires lambda != 0")
    with Timer() as t:
        a, b = std_layout(d)
        rhs = 1 + G(ctx.p, k, a, b, alpha(ctx, d, lam))
        n = count_points(inst).projective
    return padic_report("POINT_G", params, rhs, n, k, ms=t.ms)


def point_f_layout(ctx: FieldCtx, d: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Exponents of the (d-1)F(d-2) in the Greene point-count formula.

    Upper: chi^{(d-1)/2}, then chi^h for h in 1..d-1 with h != (d-1)/2.
    Lower: psi^i in slot i, except the trivial character in slot (d-1)/2.
    """
    n = ctx.q - 1
    chi, psi = n // d, n // (d - 1)
    m = (d - 1) // 2
    upper = (chi * m,) + tuple(chi * h for h in range(1, d) if h != m)
    lower = tuple(0 if i == m else psi * i for i in range(1, d - 1))
    return upper, lower


def thm_pointcount_F(inst: CurveInstance):
    """q N(Z_lambda) = q - 1 + q^{(d-1)/2} sum_t phi(1-t) F(t/alpha), exactly."""
    ctx, d, lam = inst.ctx, inst.d, inst.lam
    params = _params(ctx, d, lam)
    reason = f_hypothesis(ctx.q, d)
    if reason:
        return skip_report("POINT_F", params, reason)
    if lam == 0:
        return skip_report("POINT_F", params, "requires lambda != 0")
    with Timer() as t:
        upper, lower = point_f_layout(ctx, d)
        series = greene_series(ctx, upper, lower)
        a_inv = ctx.inv(alpha(ctx, d, lam))
        acc = CycloNum.zero(ctx.q - 1)
        for s in ctx.elements():
            sign = phi(ctx, ctx.sub(1, s))
            if sign:
                acc = acc + sign * series(ctx.mul(s, a_inv))
        rhs = (ctx.q - 1) + ctx.q ** ((d - 1) // 2) * acc
        lhs = CycloNum.rational(ctx.q - 1, ctx.q * count_points(inst).projective)
    return exact_report("POINT_F", params, lhs, rhs, ms=t.ms)

