"""McCarthy's p-adic hypergeometric function nG_n over F_p.

  G[a; b | t] = -1/(p-1) sum_{j=0}^{p-2} (-1)^{jn} omega-bar^j(t)
                prod_i (-p)^{-floor(<a_i> - j/(p-1)) - floor(<-b_i> + j/(p-1))}
                       Gamma_p(<a_i - j/(p-1)>)/Gamma_p(<a_i>) * Gamma_p(<-b_i + j/(p-1)>)/Gamma_p(<-b_i>)

The t-independent part of each j-term is tabulated once (:class:`GSeries`).
Terms can carry p^-n, so the Gamma values are computed with enough guard
digits that the returned value is known to absolute precision >= k.
G at t = 0 is 0, extending the convention chi(0) = 0 to omega-bar^j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .padic.gamma import floor, frac, padic_gamma
from .padic.scalar import PadicScalar, teichmuller


def residue_mod(p: int, t) -> int:
    """The class of an integer or p-integral rational in F_p."""
    t = Fraction(t)
    if t.denominator % p == 0:
        raise ValueError(f"{t} is not p-integral for p = {p}")
    return t.numerator * pow(t.denominator, -1, p) % p


def _as_fracs(xs) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in xs)


@dataclass(frozen=True)
class GParams:
    """Prime p, precision k, upper a_1..a_n, lower b_1..b_n, argument t (reduced mod p)."""

    p: int
    k: int
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    t: int = 1

    def __post_init__(self):
        object.__setattr__(self, "a", _as_fracs(self.a))
        object.__setattr__(self, "b", _as_fracs(self.b))
        if len(self.a) != len(self.b):
            raise ValueError("upper and lower parameter lists must have equal length")
        p = self.p
        if p < 3 or p % 2 == 0:
            raise ValueError("p must be an odd prime")
        for x in self.a + self.b:
            if x.denominator % p == 0:
                raise ValueError(f"parameter {x} is not in Z_p for p = {p}")
        object.__setattr__(self, "t", residue_mod(p, self.t))

    @property
    def n(self) -> int:
        return len(self.a)


class GSeries:
    """Per-j terms p^{e_j} * u_j (with u_j a unit mod p^K) of nG_n for fixed parameters."""

    def __init__(self, p: int, k: int, a, b):
        self.p, self.k = p, k
        self.a, self.b = _as_fracs(a), _as_fracs(b)
        n = len(self.a)
        if n != len(self.b):
            raise ValueError("upper and lower parameter lists must have equal length")
        s = Fraction(1, p - 1)
        exps = []
        for j in range(p - 1):
            e = 0
            for ai, bi in zip(self.a, self.b):
                e -= floor(frac(ai) - j * s) + floor(frac(-bi) + j * s)
            exps.append(e)
        self.exps = tuple(exps)
        self.emin = min(exps)
        self.K = K = k + max(0, -self.emin)
        m = p**K
        units = []
        for j in range(p - 1):
            u = 1
            for ai, bi in zip(self.a, self.b):
                num = padic_gamma(p, K, frac(ai - j * s)) * padic_gamma(p, K, frac(-bi + j * s))
                den = padic_gamma(p, K, frac(ai)) * padic_gamma(p, K, frac(-bi))
                u = u * (num / den).unit % m
            sign = (-1) ** ((j * n + exps[j]) % 2)  # (-1)^{jn} and the sign of (-p)^{e_j}
            units.append(sign * u % m)
        self.units = tuple(units)

    def __call__(self, t) -> PadicScalar:
        p, K = self.p, self.K
        t = residue_mod(p, t)
        out_prec = K + self.emin
        if t == 0:
            return PadicScalar.zero(p, out_prec)
        m = p**K
        wbar = pow(teichmuller(p, t, K), -1, m)
        acc, w = 0, 1
        for e, u in zip(self.exps, self.units):
            acc += u * w * p ** (e - self.emin)
            w = w * wbar % m
        s = PadicScalar(p, 0, acc, K) * PadicScalar.from_rational(p, Fraction(-1, p - 1), K)
        if self.emin >= 0:
            return s * PadicScalar.from_int(p, p**self.emin, K + self.emin)
        return PadicScalar(p, s.val + self.emin, s.unit, s.prec + self.emin)

    def term_exponents(self) -> tuple[int, ...]:
        return self.exps


@lru_cache(maxsize=2048)
def g_series(p: int, k: int, a: tuple, b: tuple) -> GSeries:
    return GSeries(p, k, a, b)


def g_function(params: GParams) -> PadicScalar:
    """nG_n[a; b | t] as a p-adic number known mod p^k (at least)."""
    return g_series(params.p, params.k, params.a, params.b)(params.t)


def G(p: int, k: int, a, b, t) -> PadicScalar:
    """Shorthand: G(p, k, [a...], [b...], t)."""
    return g_function(GParams(p, k, tuple(a), tuple(b), t))
