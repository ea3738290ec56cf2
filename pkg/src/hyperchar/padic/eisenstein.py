"""The totally ramified ring Z_p[pi], pi^(p-1) = -p, and the Gross-Koblitz check.

An element is sum_{i<p-1} c_i pi^i with integer c_i mod p^C.  Its pi-adic
absolute precision N is tracked separately (at most (p-1) C); everything
below pi^N is meaningful.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..report import FAIL, PASS, Report, Timer
from .gamma import frac, padic_gamma
from .scalar import teichmuller


class EisensteinElem:
    __slots__ = ("p", "C", "N", "c")

    def __init__(self, p: int, C: int, coeffs, N: int | None = None):
        self.p, self.C = p, C
        self.N = (p - 1) * C if N is None else min(N, (p - 1) * C)
        m = p**C
        c = [int(x) % m for x in coeffs]
        if len(c) > p - 1:
            raise ValueError("too many coefficients")
        self.c = tuple(c + [0] * (p - 1 - len(c)))

    # constructors ---------------------------------------------------------------

    @classmethod
    def scalar(cls, p: int, C: int, a: int, N: int | None = None) -> "EisensteinElem":
        return cls(p, C, [a], N)

    @classmethod
    def pi(cls, p: int, C: int) -> "EisensteinElem":
        return cls(p, C, [0, 1])

    @classmethod
    def pi_power(cls, p: int, C: int, a: int) -> "EisensteinElem":
        """pi^a for 0 <= a; reduces through (-p)^(a // (p-1))."""
        q, r = divmod(a, p - 1)
        c = [0] * (p - 1)
        c[r] = (-p) ** q
        return cls(p, C, c)

    # arithmetic -------------------------------------------------------------------

    def _same(self, other):
        if not isinstance(other, EisensteinElem):
            return EisensteinElem.scalar(self.p, self.C, int(other))
        if (other.p, other.C) != (self.p, self.C):
            raise ValueError("incompatible Eisenstein rings")
        return other

    def __add__(self, other):
        other = self._same(other)
        return EisensteinElem(self.p, self.C, [a + b for a, b in zip(self.c, other.c)], min(self.N, other.N))

    __radd__ = __add__

    def __neg__(self):
        return EisensteinElem(self.p, self.C, [-a for a in self.c], self.N)

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return self._same(other) - self

    def __mul__(self, other):
        other = self._same(other)
        p, n = self.p, self.p - 1
        out = [0] * (2 * n - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    if b:
                        out[i + j] += a * b
        for i in range(2 * n - 2, n - 1, -1):
            out[i - n] -= p * out[i]
        N = min(self.N + other.valuation(), other.N + self.valuation())
        return EisensteinElem(p, self.C, out[:n], N)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.unit_inverse() ** (-e)
        result = EisensteinElem.scalar(self.p, self.C, 1, self.N)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def valuation(self) -> int:
        """pi-adic valuation, capped at the precision N."""
        best = self.N
        for i, a in enumerate(self.c):
            if a:
                v = 0
                while a % self.p == 0:
                    a //= self.p
                    v += 1
                best = min(best, (self.p - 1) * v + i)
        return best

    def is_zero(self) -> bool:
        return self.valuation() >= self.N

    def div_pi(self) -> "EisensteinElem":
        """self / pi; needs p | c_0.  Uses 1/pi = -pi^(p-2) / p."""
        p = self.p
        if self.c[0] % p:
            raise ArithmeticError("not divisible by pi")
        c = list(self.c[1:]) + [-(self.c[0] // p)]
        return EisensteinElem(p, self.C, c, self.N - 1)

    def div_pi_power(self, s: int) -> "EisensteinElem":
        out = self
        for _ in range(s):
            out = out.div_pi()
        return out

    def unit_inverse(self) -> "EisensteinElem":
        """Inverse of a unit (c_0 prime to p) by Newton iteration y -> y(2 - xy)."""
        p, m = self.p, self.p**self.C
        if self.c[0] % p == 0:
            raise ZeroDivisionError("not a unit")
        y = EisensteinElem.scalar(p, self.C, pow(self.c[0], -1, m), self.N)
        for _ in range(2 * self.N.bit_length() + 4):
            y_next = y * (2 - self * y)
            if y_next.c == y.c:
                break
            y = y_next
        return y

    def __truediv__(self, other):
        other = self._same(other)
        s = other.valuation()
        if self.valuation() < s:
            raise ArithmeticError("quotient is not integral")
        num = self.div_pi_power(s)
        den = other.div_pi_power(s)
        return num * den.unit_inverse()

    def __eq__(self, other):
        if not isinstance(other, (EisensteinElem, int)):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def render(self) -> str:
        terms = " + ".join(f"{a}*pi^{i}" for i, a in enumerate(self.c) if a) or "0"
        return f"{terms} mod pi^{self.N}"

    def __repr__(self):
        return f"EisensteinElem(p={self.p}, N={self.N}, c={self.c})"


def _f_and_df(u: EisensteinElem):
    """f(u) = ((1+u)^p - 1)/u = sum_{i=1}^p C(p,i) u^(i-1), and f'(u)."""
    p = u.p
    f = EisensteinElem.scalar(p, u.C, 0, u.N)
    df = EisensteinElem.scalar(p, u.C, 0, u.N)
    powers = [EisensteinElem.scalar(p, u.C, 1, u.N)]
    for _ in range(p - 1):
        powers.append(powers[-1] * u)
    for i in range(1, p + 1):
        f = f + comb(p, i) * powers[i - 1]
        if i >= 2:
            df = df + (comb(p, i) * (i - 1)) * powers[i - 2]
    return f, df


def zeta_p(p: int, C: int, max_iter: int = 64) -> tuple[EisensteinElem, int]:
    """zeta_p with zeta_p = 1 + pi mod pi^2, and its certified pi-adic precision.

    Newton on f(u) = ((1+u)^p - 1)/u from u = pi: the error valuation goes
    s -> 2s - 1, so it converges from s = 2.  Certified precision is
    v(f(u)) - (p - 2), since v(f'(root)) = p - 2.
    """
    u = EisensteinElem.pi(p, C)
    for _ in range(max_iter):
        f, df = _f_and_df(u)
        if f.is_zero():
            break
        u_next = u - f / df
        u_next = EisensteinElem(p, C, u_next.c)  # iterates are exact elements of the ring
        if u_next.c == u.c:
            break
        u = u_next
    else:
        raise ArithmeticError("Newton iteration for zeta_p did not converge")
    f, _ = _f_and_df(u)
    cert = f.valuation() - (p - 2)
    return EisensteinElem(p, C, [1 + u.c[0], *u.c[1:]]), cert


def gauss_sum_eisenstein(p: int, C: int, a: int, zeta: EisensteinElem | None = None) -> EisensteinElem:
    """g(omega-bar^a) = sum_{x=1}^{p-1} omega^{-a}(x) zeta_p^x."""
    if zeta is None:
        zeta, _ = zeta_p(p, C)
    m = p**C
    acc = EisensteinElem.scalar(p, C, 0)
    zx = EisensteinElem.scalar(p, C, 1)
    for x in range(1, p):
        zx = zx * zeta
        w = pow(teichmuller(p, x, C), (-a) % (p - 1), m)
        acc = acc + w * zx
    return acc


def gross_koblitz_sides(p: int, K: int, a: int) -> tuple[EisensteinElem, EisensteinElem, int]:
    """(g(omega-bar^a), -pi^{(p-1)<a/(p-1)>} Gamma_p(<a/(p-1)>)) and the certified precision."""
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    if K < 2 * (p - 1):
        raise ValueError(f"pi-precision K = {K} must be at least 2(p-1) = {2 * (p - 1)}")
    C = -(-K // (p - 1)) + 2  # two guard coefficients for the Newton divisions
    zeta, cert = zeta_p(p, C)
    if cert < K:
        raise ArithmeticError(f"zeta_p certified only to pi^{cert}, need pi^{K}")
    lhs = gauss_sum_eisenstein(p, C, a, zeta)
    x = frac(Fraction(a, p - 1))
    e = int(x * (p - 1))
    gam = padic_gamma(p, C, x).residue()
    rhs = -gam * EisensteinElem.pi_power(p, C, e)
    return lhs, rhs, cert


def gross_koblitz_check(p: int, K: int, a: int) -> Report:
    params = {"p": p, "k": K, "a": a}
    with Timer() as t:
        lhs, rhs, cert = gross_koblitz_sides(p, K, a)
        v = min((lhs - rhs).valuation(), cert)
    status = PASS if v >= K else FAIL
    return Report("GROSS_KOBLITZ", params, status, lhs.render(), rhs.render(), diff_valuation=v, ms=t.ms)
