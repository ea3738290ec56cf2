"""Morita's p-adic Gamma function at integers and at p-integral rationals.

Gamma_p(n) = (-1)^n * prod_{0<j<n, p∤j} j.  The product over the first B full
blocks of p consecutive integers is prod_{b<B} F(p(z+b)) at z = 0 with
F(y) = prod_{i=1}^{p-1} (y+i).  Writing the polynomial in z, the coefficient of
z^j is divisible by p^j, so modulo p^k only degrees < k survive.  That product
is assembled by binary doubling with Taylor shifts, so a single value costs
O(k^2 log n + p) instead of O(n).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .scalar import PadicScalar


def _mul_trunc(a, b, k, m):
    out = [0] * k
    for i, x in enumerate(a):
        if x:
            for j in range(min(len(b), k - i)):
                out[i + j] = (out[i + j] + x * b[j]) % m
    return out


def _shift(a, s, k, m):
    """Coefficients of a(z + s), truncated to degree < k."""
    out = [0] * k
    for i, c in enumerate(a):
        if c:
            spow = 1
            for j in range(i, -1, -1):
                # term c * C(i, j) * s^(i-j) * z^j
                out[j] = (out[j] + c * comb(i, j) * spow) % m
                spow = spow * s % m
    return out


@lru_cache(maxsize=None)
def _block_poly(p: int, k: int) -> tuple[int, ...]:
    """F(pz) = prod_{i=1}^{p-1} (pz + i) mod p^k, truncated to degree < k."""
    m = p**k
    poly = [1] + [0] * (k - 1)
    for i in range(1, p):
        poly = _mul_trunc(poly, [i, p], k, m)
    return tuple(poly)


def _blocks(p: int, k: int, nblocks: int) -> int:
    """prod_{0<j<p*nblocks, p∤j} j mod p^k."""
    if nblocks == 0:
        return 1
    m = p**k
    f = list(_block_poly(p, k))
    h = [1] + [0] * (k - 1)
    count = 0
    for bit in bin(nblocks)[2:]:
        if count:
            h = _mul_trunc(h, _shift(h, count, k, m), k, m)
            count *= 2
        if bit == "1":
            h = _mul_trunc(h, _shift(f, count, k, m), k, m)
            count += 1
    return h[0]


@lru_cache(maxsize=200_000)
def gamma_int(p: int, k: int, n: int) -> int:
    """Gamma_p(n) mod p^k for an integer n >= 0."""
    if n < 0:
        raise ValueError("gamma_int expects a non-negative integer")
    if n == 0:
        return 1
    m = p**k
    top = n - 1
    nblocks, rest = divmod(top, p)
    acc = _blocks(p, k, nblocks)
    base = nblocks * p
    for i in range(1, rest + 1):
        acc = acc * (base + i) % m
    return (-acc if n % 2 else acc) % m


def gamma_direct(p: int, k: int, n: int) -> int:
    """Gamma_p(n) mod p^k straight from the defining product (slow; reference only)."""
    m = p**k
    acc = 1
    for j in range(1, n):
        if j % p:
            acc = acc * j % m
    return (-acc if n % 2 else acc) % m


def lift(p: int, k: int, x) -> int:
    """The integer n in [0, p^k) with n = x mod p^k, for x in Z_(p)."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ValueError(f"{x} is not a {p}-adic integer")
    m = p**k
    return x.numerator * pow(x.denominator, -1, m) % m


def padic_gamma(p: int, k: int, x) -> PadicScalar:
    """Gamma_p(x) mod p^k for x = integer or rational with denominator prime to p.

    Evaluated at the integer lift of x in [0, p^k); by continuity of Gamma_p
    the value is correct mod p^k.
    """
    if p % 2 == 0:
        raise ValueError("p must be odd")
    return PadicScalar(p, 0, gamma_int(p, k, lift(p, k, x)), k)


def frac(x) -> Fraction:
    """Fractional part <x> in [0, 1)."""
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def floor(x) -> int:
    x = Fraction(x)
    return x.numerator // x.denominator
