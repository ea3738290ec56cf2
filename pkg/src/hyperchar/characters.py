"""Multiplicative characters T^m, the additive character theta, and orthogonality.

A multiplicative character is just its exponent m modulo q-1, where
T(g) = zeta_{q-1} for the field's fixed generator g.  Values live in
Q(zeta_{q-1}); by convention every character, the trivial one included,
vanishes at 0.
"""

from __future__ import annotations

from math import gcd

from .exact_arith import CycloNum
from .finite_field import FieldCtx
from .padic.scalar import teich_realize, teichmuller  # noqa: F401  (re-exported)
from .report import Timer, bool_report, exact_report


def char_exp(ctx: FieldCtx, m: int, x: int) -> int | None:
    """Exponent e with T^m(x) = zeta_{q-1}^e, or None when x = 0."""
    if x == 0:
        return None
    return m * ctx.dlog(x) % (ctx.q - 1)


def char_eval(ctx: FieldCtx, m: int, x: int) -> CycloNum:
    """T^m(x) in Q(zeta_{q-1}); zero at x = 0 for every m."""
    n = ctx.q - 1
    e = char_exp(ctx, m, x)
    if e is None:
        return CycloNum.zero(n)
    return CycloNum.zeta(n, e)


def sign_char(ctx: FieldCtx, m: int, x: int) -> int:
    """T^m(x) as an integer, for characters of order dividing 2 (0 at x = 0)."""
    n = ctx.q - 1
    if (2 * m) % n:
        raise ValueError("character is not real-valued")
    e = char_exp(ctx, m, x)
    if e is None:
        return 0
    return 1 if e == 0 else -1


def quadratic_exp(ctx: FieldCtx) -> int:
    return (ctx.q - 1) // 2


def phi(ctx: FieldCtx, x: int) -> int:
    """The quadratic character as -1, 0 or 1."""
    return sign_char(ctx, quadratic_exp(ctx), x)


def order(ctx: FieldCtx, m: int) -> int:
    n = ctx.q - 1
    return n // gcd(m % n, n)


def additive_char(ctx: FieldCtx, x: int) -> CycloNum:
    """theta(x) = zeta_p^{tr(x)} in Q(zeta_p)."""
    return CycloNum.zeta(ctx.p, ctx.trace(x))


def orthogonality_check(ctx: FieldCtx):
    """Both orthogonality relations for the full character group, exhaustively."""
    n = ctx.q - 1
    params = {"q": ctx.q, "p": ctx.p}
    with Timer() as t:
        bad = []
        for m in range(n):
            counts = [0] * n
            for x in ctx.units():
                counts[char_exp(ctx, m, x)] += 1
            total = CycloNum.from_counts(n, counts)
            want = n if m == 0 else 0
            if total != want:
                bad.append(("sum_x", m))
        for x in ctx.elements():
            counts = [0] * n
            if x:
                lg = ctx.dlog(x)
                for m in range(n):
                    counts[m * lg % n] += 1
            total = CycloNum.from_counts(n, counts)
            want = n if x == 1 else 0
            if total != want:
                bad.append(("sum_chi", x))
    return bool_report("ORTHOGONALITY", params, not bad, lhs=f"violations={len(bad)}", rhs="violations=0",
                       ms=t.ms)


def additive_sum_check(ctx: FieldCtx):
    """sum_x theta(x) = 0 and theta(a + b) = theta(a) theta(b), exhaustively."""
    params = {"q": ctx.q, "p": ctx.p}
    with Timer() as t:
        counts = [0] * ctx.p
        for x in ctx.elements():
            counts[ctx.trace(x)] += 1
        total = CycloNum.from_counts(ctx.p, counts)
        hom = all(additive_char(ctx, ctx.add(a, b)) == additive_char(ctx, a) * additive_char(ctx, b)
                  for a in ctx.elements() for b in ctx.elements())
    r = exact_report("THETA_SUM", params, total, CycloNum.zero(ctx.p), ms=t.ms)
    if not hom:
        r.status = "fail"
        r.exact_zero = False
    return r
