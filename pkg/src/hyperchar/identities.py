"""Every registered identity as a parameterized check, plus the sweep driver.

p-adic (G-function) identities pass when v_p(lhs - rhs) >= k - 1; Greene
(cyclotomic) identities must hold exactly.  Parameter tuples that violate an
identity's hypotheses produce skip records naming the hypothesis.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .characters import char_eval, phi
from .exact_arith import CycloNum
from .finite_field import FieldCtx, is_prime, make_field
from .gfunc import G, residue_mod
from .greene import GreeneParams, greene_series, greene_summation_check
from .report import Report, Timer, bool_report, exact_report, padic_report, skip_report
from .varieties import (
    CurveInstance,
    alpha,
    count_points,
    f_hypothesis,
    g_hypothesis,
    point_f_layout,
    remark_check,
    std_layout,
    thm_pointcount_F,
    thm_pointcount_G,
)

F = Fraction

IDENTITY_IDS = (
    "MT1", "MT2", "COR_EVEN", "COR_ODD", "EXAMPLE_D5", "EXAMPLE_D4", "MT6_EVEN", "MT6_ODD",
    "MT6_D6_EXAMPLE", "MT5_A", "MT5_B", "MT5_COR", "SV1_SUM0", "SV1_PROD0", "SV1_EX1", "SV1_EX2",
    "SV2", "MT4", "MT4_D3", "GREENE_SUM", "POINT_G", "POINT_F", "ROOT_COUNT",
)


# parameter layouts ----------------------------------------------------------------


def mt1_layout(d: int):
    """Summand of the odd-d summation: [h/d; h/(d-1) with h != (d-1)/2, then 0, 0]."""
    a = tuple(F(h, d) for h in range(1, d))
    b = tuple(F(h, d - 1) for h in range(1, d - 1) if 2 * h != d - 1) + (F(0), F(0))
    return a, b


def mt2_layout(d: int):
    """Summand of the even-d summation: [h/d with h != d/2; h/(d-1)]."""
    a = tuple(F(h, d) for h in range(1, d) if 2 * h != d)
    b = tuple(F(h, d - 1) for h in range(1, d - 1))
    return a, b


def mt6_even_layout(d: int):
    """[(2h-1)/(2(d-1)), h = 1..d-1; 0, h/d with h != d/2]."""
    a = tuple(F(2 * h - 1, 2 * (d - 1)) for h in range(1, d))
    b = (F(0),) + tuple(F(h, d) for h in range(1, d) if 2 * h != d)
    return a, b


def mt6_odd_layout(d: int):
    """[h/(d-1), h = 0..d-2; k/(2d) for odd k in 1..2d-1 with k != d]."""
    a = tuple(F(h, d - 1) for h in range(d - 1))
    b = tuple(F(k, 2 * d) for k in range(1, 2 * d, 2) if k != d)
    return a, b


# literal parameter lists of the worked examples
EXAMPLE_D5_SUMMAND = ((F(1, 5), F(2, 5), F(3, 5), F(4, 5)), (F(1, 4), F(3, 4), F(0), F(0)))
EXAMPLE_D5_RHS = ((F(1, 5), F(2, 5), F(3, 5), F(4, 5)), (F(0), F(1, 4), F(1, 2), F(3, 4)))
EXAMPLE_D4_SUMMAND = ((F(1, 4), F(3, 4)), (F(1, 3), F(2, 3)))
EXAMPLE_D4_RHS = ((F(1, 4), F(1, 2), F(3, 4)), (F(0), F(1, 3), F(2, 3)))
D6_LHS = ((F(1, 6), F(2, 6), F(3, 6), F(4, 6), F(5, 6)), (F(0), F(1, 5), F(2, 5), F(3, 5), F(4, 5)))
D6_RHS = ((F(1, 10), F(3, 10), F(5, 10), F(7, 10), F(9, 10)), (F(0), F(1, 6), F(2, 6), F(4, 6), F(5, 6)))

G2_CUBIC = ((F(1, 3), F(2, 3)), (F(0), F(1, 2)))  # 2G2[1/3, 2/3; 0, 1/2]
G2_SEXTIC = ((F(0), F(1, 2)), (F(1, 6), F(5, 6)))  # 2G2[0, 1/2; 1/6, 5/6]
G2_CUBIC_00 = ((F(1, 3), F(2, 3)), (F(0), F(0)))
G4_A = ((F(0), F(1, 4), F(1, 2), F(3, 4)), (F(1, 10), F(3, 10), F(7, 10), F(9, 10)))
G4_B = ((F(1, 5), F(2, 5), F(3, 5), F(4, 5)), (F(0), F(1, 4), F(1, 2), F(3, 4)))
G4_B_SUM = ((F(1, 5), F(2, 5), F(3, 5), F(4, 5)), (F(0), F(0), F(1, 4), F(3, 4)))
G3_SV2 = ((F(1, 4), F(1, 2), F(3, 4)), (F(0), F(1, 3), F(2, 3)))


def _gp(p: int, d=None, lam=None, x=None, k=None, **extra) -> dict:
    out = {"p": p, "q": p, "d": d, "lambda": lam, "x": x, "k": k}
    out.update(extra)
    return out


def _phi_p(p: int, x) -> int:
    r = residue_mod(p, x)
    if r == 0:
        return 0
    return 1 if pow(r, (p - 1) // 2, p) == 1 else -1


def _sum_tt1(p: int, k: int, a, b, x: int):
    """sum_t phi(t(t-1)) G[a; b | x t]."""
    acc = 0
    for t in range(2, p):
        s = _phi_p(p, t * (t - 1))
        if s:
            acc = s * G(p, k, a, b, x * t % p) + acc
    return acc


def _sum_1mt(p: int, k: int, a, b, x: int):
    """sum_t phi(1-t) G[a; b | x t]; the t = 0 term vanishes since G(0) = 0."""
    acc = 0
    for t in range(1, p):
        s = _phi_p(p, 1 - t)
        if s:
            acc = s * G(p, k, a, b, x * t % p) + acc
    return acc


def _g_pre(id_: str, p: int, d: int, parity: str | None, value, params) -> Report | None:
    """Common hypothesis checks for d-indexed G identities."""
    if not is_prime(p) or p == 2:
        return skip_report(id_, params, "requires p an odd prime")
    if parity == "odd" and (d < 3 or d % 2 == 0):
        return skip_report(id_, params, f"requires d >= 3 odd; got d = {d}")
    if parity == "even" and (d <= 2 or d % 2):
        return skip_report(id_, params, f"requires d > 2 even; got d = {d}")
    if parity == "even2" and (d < 2 or d % 2):
        return skip_report(id_, params, f"requires d >= 2 even; got d = {d}")
    reason = g_hypothesis(p, d)
    if reason:
        return skip_report(id_, params, reason)
    if value is not None and value % p == 0:
        return skip_report(id_, params, "requires a nonzero argument in F_p")
    return None


# summation identities ----------------------------------------------------------------


def check_mt1(p: int, d: int, x: int, k: int = 5, layout=None, id_: str = "MT1") -> Report:
    """sum_t phi(t(t-1)) G[mt1 layout | xt] = -1 - p G[std layout | x], d odd."""
    params = _gp(p, d=d, x=x, k=k)
    pre = _g_pre(id_, p, d, "odd", x, params)
    if pre:
        return pre
    with Timer() as t:
        (a1, b1), (a0, b0) = layout or (mt1_layout(d), std_layout(d))
        lhs = _sum_tt1(p, k, a1, b1, x)
        rhs = -1 - p * G(p, k, a0, b0, x)
    return padic_report(id_, params, lhs, rhs, k, ms=t.ms)


def check_mt2(p: int, d: int, x: int, k: int = 5, layout=None, id_: str = "MT2") -> Report:
    """sum_t phi(1-t) G[mt2 layout | xt] = -G[std layout | x], d even."""
    params = _gp(p, d=d, x=x, k=k)
    pre = _g_pre(id_, p, d, "even", x, params)
    if pre:
        return pre
    with Timer() as t:
        (a1, b1), (a0, b0) = layout or (mt2_layout(d), std_layout(d))
        lhs = _sum_1mt(p, k, a1, b1, x)
        rhs = -G(p, k, a0, b0, x)
    return padic_report(id_, params, lhs, rhs, k, ms=t.ms)


def check_cor_even(p: int, d: int, lam: int, k: int = 5) -> Report:
    """N(Z_lambda) = 1 - sum_t phi(1-t) G[mt2 layout | alpha t], d even."""
    params = _gp(p, d=d, lam=lam, k=k)
    pre = _g_pre("COR_EVEN", p, d, "even", lam, params)
    if pre:
        return pre
    with Timer() as t:
        ctx = make_field(p)
        a, b = mt2_layout(d)
        rhs = 1 - _sum_1mt(p, k, a, b, alpha(ctx, d, lam))
        n = count_points(CurveInstance(ctx, d, lam)).projective
    return padic_report("COR_EVEN", params, rhs, n, k, ms=t.ms)


def check_cor_odd(p: int, d: int, lam: int, k: int = 5) -> list[Report]:
    """p N(Z_lambda) = p - 1 - sum_t phi(t(t-1)) G[mt1 layout | alpha t], and the sum is p - 1 mod p."""
    params = _gp(p, d=d, lam=lam, k=k)
    pre = _g_pre("COR_ODD", p, d, "odd", lam, params)
    if pre:
        return [pre]
    with Timer() as t:
        ctx = make_field(p)
        a, b = mt1_layout(d)
        s = _sum_tt1(p, k, a, b, alpha(ctx, d, lam))
        n = count_points(CurveInstance(ctx, d, lam)).projective
    main = padic_report("COR_ODD", params, p - 1 - s, p * n, k, ms=t.ms, variant="count")
    modp = padic_report("COR_ODD", dict(params), s, p - 1, k, variant="mod_p", need=1)
    return [main, modp]


def _layout_report(id_: str, params, got, want) -> Report | None:
    if repr(got) != repr(want):
        return bool_report(id_, params, False, lhs=f"layout {got}", rhs=f"layout {want}", variant="layout")
    return None


def check_example_d5(p: int, x: int, k: int = 5) -> list[Report]:
    """The d = 5 instance of the odd summation with its displayed parameter lists."""
    params = _gp(p, d=5, x=x, k=k)
    bad = _layout_report("EXAMPLE_D5", params, (EXAMPLE_D5_SUMMAND, EXAMPLE_D5_RHS), (mt1_layout(5), std_layout(5)))
    if bad:
        return [bad]
    return [check_mt1(p, 5, x, k, layout=(EXAMPLE_D5_SUMMAND, EXAMPLE_D5_RHS), id_="EXAMPLE_D5")]


def check_example_d4(p: int, x: int, k: int = 5) -> list[Report]:
    """The d = 4 instance of the even summation with its displayed parameter lists."""
    params = _gp(p, d=4, x=x, k=k)
    bad = _layout_report("EXAMPLE_D4", params, (EXAMPLE_D4_SUMMAND, EXAMPLE_D4_RHS), (mt2_layout(4), std_layout(4)))
    if bad:
        return [bad]
    return [check_mt2(p, 4, x, k, layout=(EXAMPLE_D4_SUMMAND, EXAMPLE_D4_RHS), id_="EXAMPLE_D4")]


# transformations ------------------------------------------------------------------------


def check_mt6(p: int, d: int, lam: int, k: int = 5) -> Report:
    """G[std | lam] = phi(-lam(d-1)) G[even layout | 1/lam] (d even) or phi(d lam) G[odd layout | 1/lam] (d odd)."""
    even = d % 2 == 0
    id_ = "MT6_EVEN" if even else "MT6_ODD"
    params = _gp(p, d=d, lam=lam, k=k)
    pre = _g_pre(id_, p, d, "even2" if even else "odd", lam, params)
    if pre:
        return pre
    with Timer() as t:
        a0, b0 = std_layout(d)
        lhs = G(p, k, a0, b0, lam)
        inv = pow(lam, -1, p)
        if even:
            a1, b1 = mt6_even_layout(d)
            rhs = _phi_p(p, -lam * (d - 1)) * G(p, k, a1, b1, inv)
        else:
            a1, b1 = mt6_odd_layout(d)
            rhs = _phi_p(p, d * lam) * G(p, k, a1, b1, inv)
    return padic_report(id_, params, lhs, rhs, k, ms=t.ms)


def check_mt6_parity(id_: str, p: int, d: int, lam: int, k: int = 5) -> Report:
    want_even = id_ == "MT6_EVEN"
    if (d % 2 == 0) != want_even:
        return skip_report(id_, _gp(p, d=d, lam=lam, k=k), f"requires d {'even' if want_even else 'odd'}; got d = {d}")
    return check_mt6(p, d, lam, k)


def check_mt6_d6(p: int, lam: int, k: int = 5) -> list[Report]:
    """The displayed d = 6 transformation with prefactor phi(-5 lam)."""
    params = _gp(p, d=6, lam=lam, k=k)
    bad = _layout_report("MT6_D6_EXAMPLE", params, (D6_LHS, D6_RHS), (std_layout(6), mt6_even_layout(6)))
    if bad:
        return [bad]
    pre = _g_pre("MT6_D6_EXAMPLE", p, 6, "even2", lam, params)
    if pre:
        return [pre]
    with Timer() as t:
        lhs = G(p, k, *D6_LHS, lam)
        rhs = _phi_p(p, -5 * lam) * G(p, k, *D6_RHS, pow(lam, -1, p))
    return [padic_report("MT6_D6_EXAMPLE", params, lhs, rhs, k, ms=t.ms)]


def _mt5_pre(id_: str, p: int, k: int):
    if not is_prime(p) or p <= 7 or p == 23:
        return skip_report(id_, _gp(p, k=k), "requires p > 7 and p != 23")
    return None


def check_mt5_a(p: int, k: int = 5) -> list[Report]:
    """4G4[0,1/4,1/2,3/4; 1/10,3/10,7/10,9/10 | -5^5/4^4] = phi(-1) + phi(3) + phi(-1) 2G2[1/3,2/3; 0,1/2 | 4/27]."""
    pre = _mt5_pre("MT5_A", p, k)
    if pre:
        return [pre]
    with Timer() as t:
        lhs = G(p, k, *G4_A, F(-5**5, 4**4))
        rhs = _phi_p(p, -1) + _phi_p(p, 3) + _phi_p(p, -1) * G(p, k, *G2_CUBIC, F(4, 27))
    return [padic_report("MT5_A", _gp(p, k=k), lhs, rhs, k, ms=t.ms)]


def check_mt5_b(p: int, k: int = 5) -> list[Report]:
    """4G4[1/5..4/5; 0,1/4,1/2,3/4 | -4^4/5^5] in its two closed forms, and the 4/27 <-> 27/4 transform."""
    pre = _mt5_pre("MT5_B", p, k)
    if pre:
        return [pre]
    out = []
    with Timer() as t:
        lhs = G(p, k, *G4_B, F(-4**4, 5**5))
        g_sextic = G(p, k, *G2_SEXTIC, F(27, 4))
        g_cubic = G(p, k, *G2_CUBIC, F(4, 27))
        base = 1 + _phi_p(p, -3)
    out.append(padic_report("MT5_B", _gp(p, k=k), lhs, base + g_sextic, k, ms=t.ms, variant="27/4"))
    out.append(padic_report("MT5_B", _gp(p, k=k), lhs, base + g_cubic, k, variant="4/27"))
    out.append(padic_report("MT5_B", _gp(p, k=k), g_cubic, g_sextic, k, variant="transform"))
    return out


def check_mt5_cor(p: int, k: int = 5) -> list[Report]:
    """The two summation displays that combine the odd summation with the MT5 evaluations."""
    pre = _mt5_pre("MT5_COR", p, k)
    if pre:
        return [pre]
    out = []
    with Timer() as t:
        s1 = _sum_tt1(p, k, *G2_CUBIC_00, residue_mod(p, F(4, 27)))
        r1 = p - 1 + p * _phi_p(p, -3) - p * _phi_p(p, -1) * G(p, k, *G4_A, F(-5**5, 4**4))
        s2 = _sum_tt1(p, k, *G4_B_SUM, residue_mod(p, F(-4**4, 5**5)))
        base = -1 - p - p * _phi_p(p, -3)
        r2 = base - p * G(p, k, *G2_SEXTIC, F(27, 4))
        r3 = base - p * G(p, k, *G2_CUBIC, F(4, 27))
    out.append(padic_report("MT5_COR", _gp(p, k=k), s1, r1, k, ms=t.ms, variant="cubic_sum"))
    out.append(padic_report("MT5_COR", _gp(p, k=k), s2, r2, k, variant="quartic_sum_27/4"))
    out.append(padic_report("MT5_COR", _gp(p, k=k), s2, r3, k, variant="quartic_sum_4/27"))
    return out


# special values -----------------------------------------------------------------------------


def _sv_pre(id_: str, p: int, k: int):
    if not is_prime(p) or p < 5:
        return skip_report(id_, _gp(p, k=k), "requires p >= 5")
    return None


def _distinct_A(p: int, a: int, b: int, c: int) -> int:
    return 2 if len({a % p, b % p, c % p}) == 3 else 1


def sv1_sum0(p: int, a: int, b: int, c: int, k: int = 5, id_: str = "SV1_SUM0", expect: int | None = None) -> Report:
    """a + b + c = 0, ab + bc + ca != 0: 2G2[1/3,2/3; 0,1/2 | -4(ab+bc+ca)^3/(27 a^2 b^2 c^2)] = A."""
    params = _gp(p, k=k, abc=[a, b, c])
    pre = _sv_pre(id_, p, k)
    if pre:
        return pre
    a, b, c = a % p, b % p, c % p
    e2 = (a * b + b * c + c * a) % p
    if 0 in (a, b, c):
        return skip_report(id_, params, "requires a, b, c in F_p^x")
    if (a + b + c) % p or e2 == 0:
        return skip_report(id_, params, "requires a + b + c = 0 and ab + bc + ca != 0")
    A = _distinct_A(p, a, b, c) if expect is None else expect
    with Timer() as t:
        arg = -4 * pow(e2, 3, p) * pow(27 * a * a * b * b * c * c, -1, p) % p
        lhs = G(p, k, *G2_CUBIC, arg)
    return padic_report(id_, params, lhs, A, k, ms=t.ms, variant=f"A={A}")


def sv1_prod0(p: int, a: int, b: int, c: int, k: int = 5) -> Report:
    """ab + bc + ca = 0, a + b + c != 0: 2G2[1/3,2/3; 0,1/2 | -4(a+b+c)^3/(27abc)] = A."""
    params = _gp(p, k=k, abc=[a, b, c])
    pre = _sv_pre("SV1_PROD0", p, k)
    if pre:
        return pre
    a, b, c = a % p, b % p, c % p
    e1 = (a + b + c) % p
    if 0 in (a, b, c):
        return skip_report("SV1_PROD0", params, "requires a, b, c in F_p^x")
    if (a * b + b * c + c * a) % p or e1 == 0:
        return skip_report("SV1_PROD0", params, "requires ab + bc + ca = 0 and a + b + c != 0")
    A = _distinct_A(p, a, b, c)
    with Timer() as t:
        arg = -4 * pow(e1, 3, p) * pow(27 * a * b * c, -1, p) % p
        lhs = G(p, k, *G2_CUBIC, arg)
    return padic_report("SV1_PROD0", params, lhs, A, k, ms=t.ms, variant=f"A={A}")


def random_sum0_triples(p: int, n: int, seed: int) -> list[tuple[int, int, int]]:
    """Seeded triples with a + b + c = 0, ab + bc + ca != 0; about a third have a repeated entry."""
    rng = random.Random(f"sum0-{p}-{seed}")
    out = []
    while len(out) < n:
        a = rng.randrange(1, p)
        b = a if rng.random() < 1 / 3 else rng.randrange(1, p)
        c = (-a - b) % p
        if c and (a * b + b * c + c * a) % p:
            out.append((a, b, c))
    return out


def random_prod0_triples(p: int, n: int, seed: int) -> list[tuple[int, int, int]]:
    """Seeded triples with ab + bc + ca = 0, a + b + c != 0; about a third have a repeated entry."""
    rng = random.Random(f"prod0-{p}-{seed}")
    out = []
    while len(out) < n:
        a = rng.randrange(1, p)
        b = a if rng.random() < 1 / 3 else rng.randrange(1, p)
        if (a + b) % p == 0:
            continue
        c = -a * b * pow(a + b, -1, p) % p
        if c and (a + b + c) % p:
            out.append((a, b, c))
    return out


def check_sv1_sum0(p: int, k: int = 5, n: int = 50, seed: int = 0) -> list[Report]:
    pre = _sv_pre("SV1_SUM0", p, k)
    if pre:
        return [pre]
    return [sv1_sum0(p, a, b, c, k) for a, b, c in random_sum0_triples(p, n, seed)]


def check_sv1_prod0(p: int, k: int = 5, n: int = 50, seed: int = 0) -> list[Report]:
    pre = _sv_pre("SV1_PROD0", p, k)
    if pre:
        return [pre]
    return [sv1_prod0(p, a, b, c, k) for a, b, c in random_prod0_triples(p, n, seed)]


def check_sv1_ex1(p: int, k: int = 5) -> list[Report]:
    """(a, b, c) = (1, 1, -2): 2G2[1/3,2/3; 0,1/2 | 1] = 1."""
    return [sv1_sum0(p, 1, 1, -2, k, id_="SV1_EX1")]


def check_sv1_ex2(p: int, k: int = 5) -> list[Report]:
    """(a, b, c) = (1, 2, -3): argument 343/243, with A set by the reduction of the triple mod p."""
    return [sv1_sum0(p, 1, 2, -3, k, id_="SV1_EX2")]


def sv1_ex2_literal(p: int, k: int = 5) -> Report:
    """The worked example read literally: 2G2[1/3,2/3; 0,1/2 | 343/243] = 2 for every p >= 5."""
    params = _gp(p, k=k)
    pre = _sv_pre("SV1_EX2", p, k)
    if pre:
        return pre
    with Timer() as t:
        lhs = G(p, k, *G2_CUBIC, F(343, 243))
    return padic_report("SV1_EX2", params, lhs, 2, k, ms=t.ms, variant="literal")


def check_sv2(p: int, k: int = 5) -> list[Report]:
    """3G3[1/4,1/2,3/4; 0,1/3,2/3 | 1] = 1 + phi(-2)."""
    pre = _sv_pre("SV2", p, k)
    if pre:
        return [pre]
    with Timer() as t:
        lhs = G(p, k, *G3_SV2, 1)
        rhs = 1 + _phi_p(p, -2)
    return [padic_report("SV2", _gp(p, k=k), lhs, rhs, k, ms=t.ms)]


# Greene-series identities ------------------------------------------------------------------


def _fp(ctx: FieldCtx, d=None, lam=None, x=None) -> dict:
    return {"p": ctx.p, "q": ctx.q, "d": d, "lambda": lam, "x": x, "k": None}


def mt4_rhs_layout(ctx: FieldCtx, d: int):
    """dF(d-1)(phi, chi, ..., chi^{d-1}; psi, ..., psi^{(d-1)/2}, psi^{(d-1)/2}, ..., psi^{d-2})."""
    n = ctx.q - 1
    chi, psi = n // d, n // (d - 1)
    m = (d - 1) // 2
    upper = (n // 2,) + tuple(chi * h for h in range(1, d))
    lower = tuple(psi * (i if i <= m else i - 1) for i in range(1, d))
    return upper, lower


def _phi_weighted_sum(ctx: FieldCtx, series, lam: int, shift: int) -> CycloNum:
    """sum_t phi(1 + shift*t) series(lam t) with shift = -1 (phi(1-t)) or +1 (phi(1+t))."""
    acc = CycloNum.zero(ctx.q - 1)
    for t in ctx.units():
        s = phi(ctx, ctx.add(1, t) if shift > 0 else ctx.sub(1, t))
        if s:
            acc = acc + s * series(ctx.mul(lam, t))
    return acc


def _mt4_coef(ctx: FieldCtx, form: str) -> int:
    """Coefficient of the dF(d-1) term: q, or q phi(-1) as in the printed statement."""
    if form == "literal":
        return ctx.q * phi(ctx, ctx.neg(1))
    if form == "corrected":
        return ctx.q
    raise ValueError("form must be 'corrected' or 'literal'")


def check_mt4(ctx: FieldCtx, d: int, lam: int, form: str = "corrected") -> Report:
    """sum_t phi(1-t) F(lam t) = (1 - phi(-lam))/q^{(d-1)/2} + c dF(d-1)(... | lam), exactly.

    With form "corrected" c = q, which holds for every q tested.  The printed
    coefficient c = q phi(-1) (form "literal") fails whenever q = 3 mod 4.
    """
    params = _fp(ctx, d=d, lam=lam)
    reason = f_hypothesis(ctx.q, d)
    if reason:
        return skip_report("MT4", params, reason, variant=form)
    if lam == 0:
        return skip_report("MT4", params, "requires lambda in F_q^x", variant=form)
    with Timer() as t:
        lhs = _phi_weighted_sum(ctx, greene_series(ctx, *point_f_layout(ctx, d)), lam, -1)
        big = greene_series(ctx, *mt4_rhs_layout(ctx, d))(lam)
        rhs = F(1 - phi(ctx, ctx.neg(lam)), ctx.q ** ((d - 1) // 2)) + _mt4_coef(ctx, form) * big
    return exact_report("MT4", params, lhs, rhs, ms=t.ms, variant=form)


def mt4_d3_resummed(ctx: FieldCtx, c3: int) -> Report:
    """sum_t chi3^2(t) (chi3 phi)(1+t) 2F1(phi, chi3; phi | t) = q (chi3 phi)(-1) 3F2(phi, chi3, chi3^2; phi, phi | -1)."""
    n, q = ctx.q - 1, ctx.q
    h = n // 2
    minus1 = ctx.neg(1)
    f21 = greene_series(ctx, (h, c3), (h,))
    f32 = greene_series(ctx, (h, n // 3, 2 * n // 3), (h, h))
    lhs = CycloNum.zero(n)
    for t in ctx.units():
        lhs = lhs + char_eval(ctx, 2 * c3, t) * char_eval(ctx, c3 + h, ctx.add(1, t)) * f21(t)
    rhs = q * char_eval(ctx, c3 + h, minus1) * f32(minus1)
    return exact_report("MT4_D3", _fp(ctx, d=3, lam=minus1), lhs, rhs, variant="resummed_chi3" if 3 * c3 == ctx.q - 1 else "resummed_chi3^2")


def check_mt4_d3(ctx: FieldCtx, lam: int, form: str = "corrected") -> list[Report]:
    """The d = 3 specialization, its lambda = -1 instance and, at lambda = -1, the re-summed form."""
    params = _fp(ctx, d=3, lam=lam)
    reason = f_hypothesis(ctx.q, 3)
    if reason:
        return [skip_report("MT4_D3", params, reason, variant=form)]
    if lam == 0:
        return [skip_report("MT4_D3", params, "requires lambda in F_q^x", variant=form)]
    n, q = ctx.q - 1, ctx.q
    c3, h = n // 3, n // 2
    coef = _mt4_coef(ctx, form)
    out = []
    with Timer() as t:
        f21 = greene_series(ctx, (c3, 2 * c3), (0,))
        f32 = greene_series(ctx, (h, c3, 2 * c3), (h, h))
        minus1 = ctx.neg(1)
        lhs = _phi_weighted_sum(ctx, f21, lam, -1)
        rhs = F(1 - phi(ctx, ctx.neg(lam)), q) + coef * f32(lam)
    out.append(exact_report("MT4_D3", params, lhs, rhs, ms=t.ms, variant=f"d3_{form}"))
    if lam == minus1:
        lhs1 = _phi_weighted_sum(ctx, f21, 1, +1)
        out.append(exact_report("MT4_D3", dict(params), lhs1, coef * f32(minus1), variant=f"lambda=-1_{form}"))
        out.extend(mt4_d3_resummed(ctx, e) for e in (c3, 2 * c3))
    return out


def check_greene_sum(ctx: FieldCtx, n: int, trials: int = 20, seed: int = 0) -> list[Report]:
    """Greene's summation identity at seeded random exponent tuples and every x in F_q."""
    rng = random.Random(f"greene-{ctx.q}-{n}-{seed}")
    N = ctx.q - 1
    out = []
    for trial in range(trials):
        upper = tuple(rng.randrange(N) for _ in range(n + 1))
        lower = tuple(rng.randrange(N) for _ in range(n))
        for x in ctx.elements():
            r = greene_summation_check(GreeneParams(ctx, upper, lower, x))
            r.params = {**_fp(ctx, x=x), "n": n, "trial": trial, "upper": list(upper), "lower": list(lower)}
            out.append(r)
    return out


def check_point_g(p: int, d: int, lam: int, k: int = 5) -> Report:
    pre = _g_pre("POINT_G", p, d, None, lam, _gp(p, d=d, lam=lam, k=k))
    if pre:
        return pre
    return thm_pointcount_G(CurveInstance(make_field(p), d, lam), k)


def check_point_f(ctx: FieldCtx, d: int, lam: int) -> Report:
    return thm_pointcount_F(CurveInstance(ctx, d, lam))


def check_root_count(ctx: FieldCtx, d: int, lam: int) -> Report:
    r = remark_check(CurveInstance(ctx, d, lam))
    reason = g_hypothesis(ctx.p, d)
    if reason:
        return skip_report("ROOT_COUNT", r.params, reason)
    return r


# sweeping ---------------------------------------------------------------------------------------


def field_from_q(q: int) -> FieldCtx:
    """make_field for a prime power q."""
    for p in range(3, q + 1, 2):
        if is_prime(p) and q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1:
                break
            return make_field(p, e)
    raise ValueError(f"q = {q} is not a power of an odd prime")


def select_values(universe: Sequence[int], policy, seed: int, tag: str = "") -> list[int]:
    """'all', 'sample:N' (seeded, sorted) or an explicit list of values."""
    universe = list(universe)
    if policy is None or policy == "all":
        return universe
    if isinstance(policy, str) and policy.startswith("sample:"):
        n = int(policy.split(":", 1)[1])
        if n >= len(universe):
            return universe
        rng = random.Random(f"{tag}-{seed}")
        return sorted(rng.sample(universe, n))
    if isinstance(policy, (list, tuple)):
        return list(policy)
    raise ValueError(f"bad value policy {policy!r}")


@dataclass
class SweepGrid:
    """Parameter ranges.  ``ps`` drive p-adic identities, ``qs`` the Greene ones."""

    ps: Sequence[int] = ()
    qs: Sequence[int] = ()
    ds: Sequence[int] = ()
    values: object = "all"
    k: int = 5
    seed: int = 0
    ns: Sequence[int] = (1, 2)
    trials: int = 20
    sv1_count: int = 50


# (kind, value name, fixed d or None)
_SHAPES: dict[str, tuple[str, str | None, int | None]] = {
    "MT1": ("gd", "x", None), "MT2": ("gd", "x", None),
    "COR_EVEN": ("gd", "lambda", None), "COR_ODD": ("gd", "lambda", None),
    "MT6_EVEN": ("gd", "lambda", None), "MT6_ODD": ("gd", "lambda", None),
    "POINT_G": ("gd", "lambda", None),
    "EXAMPLE_D5": ("gd", "x", 5), "EXAMPLE_D4": ("gd", "x", 4), "MT6_D6_EXAMPLE": ("gd", "lambda", 6),
    "MT5_A": ("gp", None, None), "MT5_B": ("gp", None, None), "MT5_COR": ("gp", None, None),
    "SV1_SUM0": ("gp", None, None), "SV1_PROD0": ("gp", None, None), "SV1_EX1": ("gp", None, None),
    "SV1_EX2": ("gp", None, None), "SV2": ("gp", None, None),
    "MT4": ("fd", "lambda", None), "POINT_F": ("fd", "lambda", None), "MT4_D3": ("fd", "lambda", 3),
    "ROOT_COUNT": ("fd", "lambda", None),
    "GREENE_SUM": ("fq", None, None),
}


def _as_list(r) -> list[Report]:
    return r if isinstance(r, list) else [r]


def _run_task(task) -> list[Report]:
    """Evaluate one (id, field size, d, value, k, extra) task."""
    id_, size, d, value, k, extra = task
    if id_ in ("MT1", "EXAMPLE_D5"):
        return _as_list(check_mt1(size, d, value, k) if id_ == "MT1" else check_example_d5(size, value, k))
    if id_ in ("MT2", "EXAMPLE_D4"):
        return _as_list(check_mt2(size, d, value, k) if id_ == "MT2" else check_example_d4(size, value, k))
    if id_ == "COR_EVEN":
        return [check_cor_even(size, d, value, k)]
    if id_ == "COR_ODD":
        return check_cor_odd(size, d, value, k)
    if id_ in ("MT6_EVEN", "MT6_ODD"):
        return [check_mt6_parity(id_, size, d, value, k)]
    if id_ == "MT6_D6_EXAMPLE":
        return check_mt6_d6(size, value, k)
    if id_ == "POINT_G":
        return [check_point_g(size, d, value, k)]
    if id_ == "MT5_A":
        return check_mt5_a(size, k)
    if id_ == "MT5_B":
        return check_mt5_b(size, k)
    if id_ == "MT5_COR":
        return check_mt5_cor(size, k)
    if id_ == "SV1_SUM0":
        return check_sv1_sum0(size, k, extra["sv1_count"], extra["seed"])
    if id_ == "SV1_PROD0":
        return check_sv1_prod0(size, k, extra["sv1_count"], extra["seed"])
    if id_ == "SV1_EX1":
        return check_sv1_ex1(size, k)
    if id_ == "SV1_EX2":
        return check_sv1_ex2(size, k)
    if id_ == "SV2":
        return check_sv2(size, k)
    ctx = field_from_q(size)
    if id_ == "MT4":
        return [check_mt4(ctx, d, value)]
    if id_ == "MT4_D3":
        return check_mt4_d3(ctx, value)
    if id_ == "POINT_F":
        return [check_point_f(ctx, d, value)]
    if id_ == "ROOT_COUNT":
        return [check_root_count(ctx, d, value)]
    if id_ == "GREENE_SUM":
        return check_greene_sum(ctx, d, extra["trials"], extra["seed"])
    raise KeyError(id_)


def _pre_skip(id_: str, size: int, d: int | None, k: int) -> Report | None:
    """Group-level hypothesis check so a violating (p, d) yields one skip record."""
    kind = _SHAPES[id_][0]
    if kind == "gd":
        parity = {"MT1": "odd", "EXAMPLE_D5": "odd", "COR_ODD": "odd", "MT6_ODD": "odd",
                  "MT2": "even", "EXAMPLE_D4": "even", "COR_EVEN": "even",
                  "MT6_EVEN": "even2", "MT6_D6_EXAMPLE": "even2"}.get(id_)
        return _g_pre(id_, size, d, parity, None, _gp(size, d=d, k=k))
    if kind == "fd":
        params = {"p": None, "q": size, "d": d, "lambda": None, "x": None, "k": None}
        if id_ == "ROOT_COUNT":
            try:
                ctx = field_from_q(size)
            except ValueError as exc:
                return skip_report(id_, params, str(exc))
            reason = g_hypothesis(ctx.p, d)
            return skip_report(id_, params, reason) if reason else None
        reason = f_hypothesis(size, d)
        return skip_report(id_, params, reason) if reason else None
    return None


def plan(ids: Sequence[str], grid: SweepGrid) -> list:
    """Ordered task list (skip records are emitted as ready-made Reports)."""
    tasks = []
    extra = {"seed": grid.seed, "trials": grid.trials, "sv1_count": grid.sv1_count}
    for id_ in ids:
        kind, _, fixed_d = _SHAPES[id_]
        if kind == "gd":
            for p in grid.ps:
                for d in ([fixed_d] if fixed_d else grid.ds):
                    pre = _pre_skip(id_, p, d, grid.k)
                    if pre:
                        tasks.append(pre)
                        continue
                    for v in select_values(range(1, p), grid.values, grid.seed, f"{id_}-{p}-{d}"):
                        tasks.append((id_, p, d, v, grid.k, extra))
        elif kind == "gp":
            for p in grid.ps:
                tasks.append((id_, p, None, None, grid.k, extra))
        elif kind == "fd":
            for q in grid.qs:
                for d in ([fixed_d] if fixed_d else grid.ds):
                    pre = _pre_skip(id_, q, d, grid.k)
                    if pre:
                        tasks.append(pre)
                        continue
                    for v in select_values(range(1, q), grid.values, grid.seed, f"{id_}-{q}-{d}"):
                        tasks.append((id_, q, d, v, grid.k, extra))
        elif kind == "fq":
            for q in grid.qs:
                for n in grid.ns:
                    tasks.append((id_, q, n, None, grid.k, extra))
    return tasks


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("HYPERCHAR_THREADS", "1")))
    except ValueError:
        return 1


def sweep(ids: Sequence[str], grid: SweepGrid, workers: int | None = None) -> list[Report]:
    """Run every identity in ``ids`` over the grid; results are in deterministic planning order."""
    unknown = [i for i in ids if i not in _SHAPES]
    if unknown:
        raise KeyError(f"unknown identity ids: {unknown}")
    tasks = plan(ids, grid)
    workers = worker_count() if workers is None else workers
    jobs = [t for t in tasks if not isinstance(t, Report)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = iter(list(pool.map(_run_task, jobs, chunksize=max(1, len(jobs) // (4 * workers)))))
    else:
        results = (_run_task(t) for t in jobs)
    out: list[Report] = []
    for t in tasks:
        if isinstance(t, Report):
            out.append(t)
        else:
            out.extend(next(results))
    return out


def all_passed(reports: Sequence[Report]) -> bool:
    return all(r.status != "fail" for r in reports)


__all__ = [
    "IDENTITY_IDS", "SweepGrid", "sweep", "plan", "all_passed", "select_values", "field_from_q",
    "mt1_layout", "mt2_layout", "mt6_even_layout", "mt6_odd_layout", "mt4_rhs_layout",
    "check_mt1", "check_mt2", "check_cor_even", "check_cor_odd", "check_example_d5", "check_example_d4",
    "check_mt6", "check_mt6_d6", "check_mt5_a", "check_mt5_b", "check_mt5_cor", "check_sv1_sum0",
    "check_sv1_prod0", "check_sv1_ex1", "check_sv1_ex2", "sv1_ex2_literal", "check_sv2", "check_mt4",
    "check_mt4_d3", "mt4_d3_resummed", "check_greene_sum", "check_point_g", "check_point_f", "check_root_count",
    "sv1_sum0", "sv1_prod0", "random_sum0_triples", "random_prod0_triples",
]
