"""Exact arithmetic: residues mod m and elements of cyclotomic fields Q(zeta_N).

A :class:`CycloNum` stores the class of a rational polynomial modulo the N-th
cyclotomic polynomial, as a tuple of integer numerators over one positive
common denominator.  Reduction modulo Phi_N (not x^N - 1) makes equality a
plain coefficient comparison.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence


# ---------------------------------------------------------------------------
# integer polynomial helpers (coefficient lists, lowest degree first)


def _poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    """Quotient of integer polynomials when ``den`` is monic and divides ``num``."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn]
        out[i] = c
        if c:
            for j in range(dn + 1):
                num[i + j] -= c * den[j]
    if any(num[:dn]):
        raise ArithmeticError("polynomial division is not exact")
    return out


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.

    Computed as (x^n - 1) divided by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError("conductor must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _poly_divexact(num, cyclotomic_poly(d))
    return tuple(num)


@lru_cache(maxsize=None)
def _zeta_powers(n: int) -> tuple[tuple[int, ...], ...]:
    """Row i holds the reduction of x^i modulo Phi_n, for 0 <= i < n."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by x and reduce the overflow with the monic relation
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(rows)


def _reduce(coeffs: Sequence[int], n: int) -> list[int]:
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    work = list(coeffs)
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c:
            base = i - deg
            for j in range(deg):
                work[base + j] -= c * phi[j]
    work = work[:deg]
    if len(work) < deg:
        work += [0] * (deg - len(work))
    return work


def _normalize(nums: Iterable[int], den: int) -> tuple[tuple[int, ...], int]:
    nums = tuple(nums)
    if den < 0:
        nums, den = tuple(-c for c in nums), -den
    g = den
    for c in nums:
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        nums = tuple(c // g for c in nums)
        den //= g
    if not any(nums):
        den = 1
    return nums, den


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Residue:
    """An integer modulo ``modulus``, stored as its representative in [0, modulus)."""

    modulus: int
    value: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _other(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError("residues with different moduli")
            return other.value
        return int(other)

    def __add__(self, other):
        return Residue(self.modulus, self.value + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return Residue(self.modulus, self.value - self._other(other))

    def __rsub__(self, other):
        return Residue(self.modulus, self._other(other) - self.value)

    def __mul__(self, other):
        return Residue(self.modulus, self.value * self._other(other))

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(self.modulus, -self.value)

    def __pow__(self, e: int):
        return Residue(self.modulus, pow(self.value, e, self.modulus))

    def inverse(self) -> "Residue":
        return Residue(self.modulus, pow(self.value, -1, self.modulus))

    def __int__(self):
        return self.value


class CycloNum:
    """Element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1).

    Instances are immutable.  ``nums[i] / den`` is the coefficient of z^i.
    """

    __slots__ = ("n", "nums", "den", "_hash")

    def __init__(self, n: int, nums: Sequence[int], den: int = 1, *, _reduced: bool = False):
        if n < 1:
            raise ValueError("conductor must be positive")
        if not _reduced:
            nums = _reduce(nums, n)
        self.n = n
        self.nums, self.den = _normalize(nums, den)
        self._hash = None

    # constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "CycloNum":
        return cls(n, [0] * degree(n), _reduced=True)

    @classmethod
    def one(cls, n: int) -> "CycloNum":
        return cls.rational(n, 1)

    @classmethod
    def rational(cls, n: int, r) -> "CycloNum":
        r = Fraction(r)
        nums = [0] * degree(n)
        nums[0] = r.numerator
        return cls(n, nums, r.denominator, _reduced=True)

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycloNum":
        """The root of unity zeta_n^k."""
        return cls(n, _zeta_powers(n)[k % n], _reduced=True)

    @classmethod
    def from_counts(cls, n: int, counts: Sequence[int], den: int = 1) -> "CycloNum":
        """The element sum_i counts[i] * zeta_n^i / den for a length-n count vector."""
        rows = _zeta_powers(n)
        acc = [0] * len(rows[0])
        for i, c in enumerate(counts):
            if c:
                row = rows[i]
                for j, v in enumerate(row):
                    if v:
                        acc[j] += c * v
        return cls(n, acc, den, _reduced=True)

    @classmethod
    def from_fractions(cls, n: int, coeffs: Sequence) -> "CycloNum":
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        return cls(n, [int(c * den) for c in fr], den)

    # accessors ---------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.nums[0], self.den)

    def to_complex(self) -> complex:
        """Image under zeta_N -> exp(2 pi i / N).  Diagnostics only."""
        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(c * z**i for i, c in enumerate(self.nums)) / self.den

    # arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            if other.n != self.n:
                raise ValueError(f"conductor mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.rational(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        den = self.den * other.den // gcd(self.den, other.den)
        a, b = den // self.den, den // other.den
        return CycloNum(self.n, [a * x + b * y for x, y in zip(self.nums, other.nums)], den, _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.n, [-x for x in self.nums], self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            r = Fraction(other)
            return CycloNum(self.n, [x * r.numerator for x in self.nums], self.den * r.denominator, _reduced=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.nums, other.nums
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycloNum(self.n, prod, self.den * other.den)

    __rmul__ = __mul__

    def mul_zeta(self, k: int) -> "CycloNum":
        """Multiply by zeta_N^k without a general product."""
        k %= self.n
        if k == 0:
            return self
        prod = [0] * k + list(self.nums)
        return CycloNum(self.n, prod, self.den)

    def inverse(self) -> "CycloNum":
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_N)")
        phi = [Fraction(c) for c in cyclotomic_poly(self.n)]
        a = _trim([Fraction(c, self.den) for c in self.nums])
        # invariant: r0 = s0 * self (mod Phi), r1 = s1 * self (mod Phi)
        r0, s0 = phi, [Fraction(0)]
        r1, s1 = a, [Fraction(1)]
        while len(r1) > 1:
            q, r = _fdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _fsub(s0, _fmul(q, s1))
        if r1[0] == 0:
            raise ArithmeticError("element not invertible")  # Phi_N is irreducible
        c = r1[0]
        return CycloNum.from_fractions(self.n, _fred([x / c for x in s1], self.n))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloNum.one(self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def conjugate(self, k: int = -1) -> "CycloNum":
        """Galois image under zeta_N -> zeta_N^k (k coprime to N); complex conjugation by default."""
        if gcd(k, self.n) != 1:
            raise ValueError("exponent must be coprime to the conductor")
        counts = [0] * self.n
        for i, c in enumerate(self.nums):
            counts[(i * k) % self.n] += c
        return CycloNum.from_counts(self.n, counts, self.den)

    # comparison ---------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.to_fraction() == other
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.n == other.n and self.den == other.den and self.nums == other.nums

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.nums, self.den))
        return self._hash

    def __repr__(self):
        return f"CycloNum({self.n}, {list(self.nums)}, {self.den})"

    def render(self) -> str:
        """Coefficient vector over zeta_N, e.g. ``zeta_12:[1, 0, -1/13, 0]``."""
        return f"zeta_{self.n}:[" + ", ".join(str(c) for c in self.coeffs) + "]"


# Fraction polynomial helpers used only by CycloNum.inverse


def _trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _fsub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _fmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _fdivmod(a, b):
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [Fraction(0)], _trim(a)
    q = [Fraction(0)] * (len(a) - db)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = a[i + db] / lead
        q[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    r = _trim(a[:db] if db else [Fraction(0)])
    return _trim(q), r


def _fred(p, n):
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    p = list(p)
    for i in range(len(p) - 1, deg - 1, -1):
        c = p[i]
        if c:
            for j in range(deg):
                p[i - deg + j] -= c * phi[j]
    p = p[:deg]
    return p + [Fraction(0)] * (deg - len(p))


# ---------------------------------------------------------------------------
# module-level operations


@lru_cache(maxsize=None)
def degree(n: int) -> int:
    """Degree of Q(zeta_n) over Q, i.e. Euler's phi(n)."""
    return len(cyclotomic_poly(n)) - 1


def cyclo_make(n: int, poly: Sequence) -> CycloNum:
    """Class of the rational polynomial ``poly`` (lowest degree first) in Q[x]/Phi_n."""
    fr = [Fraction(c) for c in poly] or [Fraction(0)]
    den = 1
    for c in fr:
        den = den * c.denominator // gcd(den, c.denominator)
    return CycloNum(n, [int(c * den) for c in fr], den)


def cyclo_embed(x: CycloNum, n: int) -> CycloNum:
    """Image of ``x`` under Q(zeta_m) -> Q(zeta_n), zeta_m -> zeta_n^(n/m)."""
    if n % x.n:
        raise ValueError(f"conductor {x.n} does not divide {n}")
    step = n // x.n
    if step == 1:
        return x
    counts = [0] * n
    for i, c in enumerate(x.nums):
        if c:
            counts[i * step] += c
    return CycloNum.from_counts(n, counts, x.den)
