"""Greene's Gaussian hypergeometric series n+1F_n over F_q.

  F(A_0..A_n; B_1..B_n | x) = q/(q-1) sum_chi (A_0 chi over chi) prod_i (A_i chi over B_i chi) chi(x)

Characters are exponents of T.  The x-independent products of binomials are
tabulated once per parameter set (:class:`GreeneSeries`); evaluating at any x
then only rotates those q-1 coefficients by powers of zeta_{q-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .char_sums import greene_binom
from .characters import char_exp
from .exact_arith import CycloNum
from .finite_field import FieldCtx
from .report import Timer, exact_report


@dataclass(frozen=True)
class GreeneParams:
    """Upper exponents A_0..A_n, lower exponents B_1..B_n, argument x."""

    ctx: FieldCtx
    upper: tuple[int, ...]
    lower: tuple[int, ...]
    x: int = 1

    def __post_init__(self):
        n = self.ctx.q - 1
        object.__setattr__(self, "upper", tuple(a % n for a in self.upper))
        object.__setattr__(self, "lower", tuple(b % n for b in self.lower))
        if len(self.upper) != len(self.lower) + 1:
            raise ValueError("need exactly one more upper than lower parameter")

    @property
    def n(self) -> int:
        return len(self.lower)

    def at(self, x: int) -> "GreeneParams":
        return GreeneParams(self.ctx, self.upper, self.lower, x)

    def drop_last(self) -> "GreeneParams":
        return GreeneParams(self.ctx, self.upper[:-1], self.lower[:-1], self.x)


class GreeneSeries:
    """Tabulated coefficients c_j = q/(q-1) (A_0 T^j over T^j) prod_i (A_i T^j over B_i T^j)."""

    def __init__(self, ctx: FieldCtx, upper, lower):
        self.ctx = ctx
        n = ctx.q - 1
        self.upper = tuple(a % n for a in upper)
        self.lower = tuple(b % n for b in lower)
        if len(self.upper) != len(self.lower) + 1:
            raise ValueError("need exactly one more upper than lower parameter")
        scale = Fraction(ctx.q, n)
        coeffs = []
        for j in range(n):
            c = greene_binom(ctx, (self.upper[0] + j) % n, j)
            for a, b in zip(self.upper[1:], self.lower):
                if c.is_zero():
                    break
                c = c * greene_binom(ctx, (a + j) % n, (b + j) % n)
            coeffs.append(c * scale)
        self.coeffs = tuple(coeffs)

    def __call__(self, x: int) -> CycloNum:
        n = self.ctx.q - 1
        if x == 0:
            return CycloNum.zero(n)
        lg = self.ctx.dlog(x)
        acc = CycloNum.zero(n)
        for j, c in enumerate(self.coeffs):
            if not c.is_zero():
                acc = acc + c.mul_zeta(j * lg)
        return acc


@lru_cache(maxsize=512)
def greene_series(ctx: FieldCtx, upper: tuple[int, ...], lower: tuple[int, ...]) -> GreeneSeries:
    return GreeneSeries(ctx, upper, lower)


def greene_F(params: GreeneParams) -> CycloNum:
    """Value of n+1F_n at params.x, exactly in Q(zeta_{q-1})."""
    return greene_series(params.ctx, params.upper, params.lower)(params.x)


def greene_summation_check(params: GreeneParams):
    """n+1F_n(x) = A_nB_n(-1)/q sum_y nF_{n-1}(xy) A_n(y) (conj(A_n) B_n)(1-y), exactly."""
    ctx = params.ctx
    if params.n < 1:
        raise ValueError("summation identity needs n >= 1")
    N = ctx.q - 1
    an, bn = params.upper[-1], params.lower[-1]
    rep = {"q": ctx.q, "p": ctx.p, "x": params.x, "upper": list(params.upper), "lower": list(params.lower)}
    with Timer() as t:
        lhs = greene_F(params)
        inner = greene_series(ctx, params.upper[:-1], params.lower[:-1])
        acc = CycloNum.zero(N)
        for y in ctx.units():
            u = ctx.sub(1, y)
            if u == 0:
                continue
            e = (char_exp(ctx, an, y) + char_exp(ctx, bn - an, u)) % N
            acc = acc + inner(ctx.mul(params.x, y)).mul_zeta(e)
        sign = -1 if (an + bn) % 2 else 1
        rhs = acc * Fraction(sign, ctx.q)
    return exact_report("GREENE_SUM", rep, lhs, rhs, ms=t.ms)
