"""Identities for Gamma_p: reflection, multiplication, the floor identity and the
Gamma-to-character-sum bridges."""

from __future__ import annotations

from fractions import Fraction

from ..report import Timer, bool_report, padic_report
from .gamma import floor, frac, padic_gamma
from .scalar import PadicScalar, teich_realize


def _check_prime(p: int):
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd prime")


def gamma_reflection_check(p: int, k: int, l: int):
    """Gamma_p(l/(p-1)) Gamma_p(<1 - l/(p-1)>) = -omega-bar^l(-1), for 0 < l <= p-2."""
    _check_prime(p)
    if not 0 < l <= p - 2:
        raise ValueError(f"l = {l} outside 0 < l <= p - 2")
    with Timer() as t:
        x = Fraction(l, p - 1)
        lhs = padic_gamma(p, k, x) * padic_gamma(p, k, frac(1 - x))
        rhs = -teich_realize(p, -l, p - 1, k)
    return padic_report("GAMMA_REFLECTION", {"p": p, "k": k, "l": l}, lhs, rhs, k, ms=t.ms)


def gamma_multiplication_check(p: int, k: int, l: int, t: int):
    """Both product formulas for Gamma_p at <h/t + l/(p-1)> and <(1+h)/t - l/(p-1)>."""
    _check_prime(p)
    if not 0 <= l <= p - 2:
        raise ValueError(f"l = {l} outside 0 <= l <= p - 2")
    if t < 1 or t % p == 0:
        raise ValueError(f"t = {t} must be a positive integer prime to p")
    params = {"p": p, "k": k, "l": l, "t": t}
    with Timer() as tm:
        x = Fraction(l, p - 1)
        base = PadicScalar.from_int(p, 1, k)
        for h in range(1, t):
            base = base * padic_gamma(p, k, Fraction(h, t))
        lhs1 = teich_realize(p, t * l, t, k) * padic_gamma(p, k, frac(t * x)) * base
        lhs2 = teich_realize(p, -t * l, t, k) * padic_gamma(p, k, frac(-t * x)) * base
        rhs1 = PadicScalar.from_int(p, 1, k)
        rhs2 = PadicScalar.from_int(p, 1, k)
        for h in range(t):
            rhs1 = rhs1 * padic_gamma(p, k, frac(Fraction(h, t) + x))
            rhs2 = rhs2 * padic_gamma(p, k, frac(Fraction(1 + h, t) - x))
    r1 = padic_report("GAMMA_MULTIPLICATION", params, lhs1, rhs1, k)
    r2 = padic_report("GAMMA_MULTIPLICATION", params, lhs2, rhs2, k)
    r1.ms = tm.ms
    r1.lhs, r1.rhs = f"{r1.lhs} ; {r2.lhs}", f"{r1.rhs} ; {r2.rhs}"
    r1.diff_valuation = min(r1.diff_valuation, r2.diff_valuation)
    if r2.status == "fail":
        r1.status = "fail"
    return r1


def floor_identity_sides(p: int, d: int, l: int) -> tuple[Fraction, Fraction]:
    """Both sides of the floor identity at one l, in exact rationals."""
    x = Fraction(l, p - 1)
    lhs = x + frac((d - 1) * x) + frac(-d * x)
    rhs = (1 - sum(floor(Fraction(h, d) - x) for h in range(1, d))
           - sum(floor(Fraction(h, d - 1) + x) for h in range(1, d - 1)))
    return lhs, rhs


def floor_identity_check(p: int, d: int):
    """l/(p-1) + <(d-1)l/(p-1)> + <-dl/(p-1)> = 1 - sum floor(h/d - l/(p-1)) - sum floor(h/(d-1) + l/(p-1))."""
    _check_prime(p)
    if (d * (d - 1)) % p == 0:
        raise ValueError(f"p = {p} divides d(d-1) = {d * (d - 1)}; the identity assumes p ∤ d(d-1)")
    with Timer() as t:
        bad = []
        for l in range(1, p - 1):
            lhs, rhs = floor_identity_sides(p, d, l)
            if lhs != rhs:
                bad.append(l)
    return bool_report("FLOOR_IDENTITY", {"p": p, "d": d}, not bad, lhs=f"mismatches={bad}", rhs="mismatches=[]",
                       ms=t.ms)


def _phi_sign(p: int, x: int) -> int:
    x %= p
    if x == 0:
        return 0
    return 1 if pow(x, (p - 1) // 2, p) == 1 else -1


def _char_sum_tt1(p: int, l: int, k: int) -> PadicScalar:
    """sum_t omega^l(-t) phi(t(t-1)) in Z_p mod p^k."""
    acc = PadicScalar.zero(p, k)
    for t in range(2, p):
        s = _phi_sign(p, t * (t - 1))
        if s:
            acc = acc + s * teich_realize(p, l, -t % p, k)
    return acc


def gamma_bridge_sides(p: int, k: int, l: int, form: str) -> tuple[PadicScalar, PadicScalar]:
    """Gamma side and character-sum side of the two bridge lemmas.

    form "minus": (-p)^{-floor(1/2 + x)} G(<1-x>) G(<1/2+x>) / G(1/2) = (1/p) sum_t omega-bar^l(-t) phi(t(t-1)), 1 <= l <= p-2
    form "plus":  (-p)^{-floor(1/2 - x)} G(<x>) G(<1/2-x>) / G(1/2) = -sum_t omega^l(-t) phi(t(t-1)), 0 <= l <= p-2
    with x = l/(p-1).  One guard digit keeps both sides known mod p^k.
    """
    _check_prime(p)
    K = k + 1
    x = Fraction(l, p - 1)
    half = Fraction(1, 2)
    g_half = padic_gamma(p, K, half)
    if form == "minus":
        if not 1 <= l <= p - 2:
            raise ValueError(f"l = {l} outside 1 <= l <= p - 2")
        e = -floor(half + x)
        lhs = padic_gamma(p, K, frac(1 - x)) * padic_gamma(p, K, frac(half + x)) / g_half
        rhs = _char_sum_tt1(p, -l, K) / p
    elif form == "plus":
        if not 0 <= l <= p - 2:
            raise ValueError(f"l = {l} outside 0 <= l <= p - 2")
        e = -floor(half - x)
        lhs = padic_gamma(p, K, frac(x)) * padic_gamma(p, K, frac(half - x)) / g_half
        rhs = -_char_sum_tt1(p, l, K)
    else:
        raise ValueError("form must be 'minus' or 'plus'")
    lhs = lhs * PadicScalar.from_rational(p, Fraction(-p) ** e, K + 2)
    return lhs, rhs


def gamma_bridge_check(p: int, k: int, l: int, form: str):
    with Timer() as t:
        lhs, rhs = gamma_bridge_sides(p, k, l, form)
    return padic_report("GAMMA_BRIDGE", {"p": p, "k": k, "l": l}, lhs, rhs, k, ms=t.ms, variant=form)
