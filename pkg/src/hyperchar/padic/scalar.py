"""Fixed-precision elements of Q_p and Teichmuller lifts."""

from __future__ import annotations

from fractions import Fraction


def _vp(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class PadicScalar:
    """p^val * unit, known modulo p^prec (absolute precision).

    ``unit`` is stored modulo p^(prec - val) and is prime to p, except for a
    zero value, which is represented by ``unit == 0`` and ``val == prec``.
    Arithmetic propagates the weakest absolute precision of its inputs.
    """

    __slots__ = ("p", "val", "unit", "prec")

    def __init__(self, p: int, val: int, unit: int, prec: int):
        self.p = p
        self.prec = prec
        rel = prec - val
        if rel <= 0:
            self.val, self.unit = prec, 0
            return
        unit %= p**rel
        if unit == 0:
            self.val, self.unit = prec, 0
            return
        v = _vp(unit, p)
        if v:
            val += v
            rel -= v
            unit = (unit // p**v) % p**rel
        self.val, self.unit = val, unit

    # constructors ---------------------------------------------------------------

    @classmethod
    def from_int(cls, p: int, n: int, prec: int) -> "PadicScalar":
        return cls(p, 0, n, prec)

    @classmethod
    def from_rational(cls, p: int, x, prec: int) -> "PadicScalar":
        """Rational x to absolute precision ``prec`` (valuation may be negative)."""
        x = Fraction(x)
        if x == 0:
            return cls(p, prec, 0, prec)
        v = 0
        num, den = x.numerator, x.denominator
        while num % p == 0:
            num //= p
            v += 1
        while den % p == 0:
            den //= p
            v -= 1
        rel = prec - v
        if rel <= 0:
            return cls(p, prec, 0, prec)
        m = p**rel
        return cls(p, v, num * pow(den, -1, m), prec)

    @classmethod
    def zero(cls, p: int, prec: int) -> "PadicScalar":
        return cls(p, prec, 0, prec)

    # basic queries ----------------------------------------------------------------

    def is_zero(self) -> bool:
        """True when the value is 0 to the known precision."""
        return self.unit == 0

    @property
    def valuation(self) -> int:
        return self.val

    def residue(self, m: int | None = None) -> int:
        """The value as an integer mod p^m (default: its absolute precision); needs val >= 0."""
        m = self.prec if m is None else m
        if m > self.prec:
            raise ValueError("requested more digits than are known")
        if self.val < 0:
            raise ValueError("value is not p-integral")
        if self.unit == 0:
            return 0
        return (self.unit * self.p**self.val) % self.p**m

    def as_small_int(self, bound_digits: int | None = None) -> int | None:
        """Symmetric integer representative if it lies within +-p^(k-1)/2, else None.

        ``k`` is the absolute precision unless ``bound_digits`` is given.
        """
        if self.val < 0:
            return None
        k = self.prec if bound_digits is None else bound_digits
        m = self.p**self.prec
        r = self.residue()
        if r > m // 2:
            r -= m
        if 2 * abs(r) <= self.p ** (k - 1):
            return r
        return None

    # arithmetic -------------------------------------------------------------------

    def _coerce(self, other) -> "PadicScalar":
        if isinstance(other, PadicScalar):
            if other.p != self.p:
                raise ValueError("p-adic numbers for different primes")
            return other
        if isinstance(other, (int, Fraction)):
            return PadicScalar.from_rational(self.p, other, max(self.prec, 0) + 64)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prec = min(self.prec, other.prec)
        v = min(self.val, other.val)
        if v >= prec:
            return PadicScalar.zero(self.p, prec)
        p = self.p
        a = self.unit * p ** (self.val - v) if self.unit else 0
        b = other.unit * p ** (other.val - v) if other.unit else 0
        return PadicScalar(p, v, a + b, prec)

    __radd__ = __add__

    def __neg__(self):
        return PadicScalar(self.p, self.val, -self.unit, self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prec = min(self.prec + other.val, other.prec + self.val)
        if self.unit == 0 or other.unit == 0:
            return PadicScalar.zero(self.p, prec)
        return PadicScalar(self.p, self.val + other.val, self.unit * other.unit, prec)

    __rmul__ = __mul__

    def inverse(self) -> "PadicScalar":
        if self.unit == 0:
            raise ZeroDivisionError("inverse of a p-adic zero")
        rel = self.prec - self.val
        return PadicScalar(self.p, -self.val, pow(self.unit, -1, self.p**rel), -self.val + rel)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return PadicScalar.from_int(self.p, 1, self.prec - self.val)
        result, base = None, self
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # comparison -------------------------------------------------------------------

    def diff_valuation(self, other) -> int:
        """Valuation of self - other, capped at the joint absolute precision."""
        return (self - other).val

    def congruent(self, other, digits: int) -> bool:
        """self == other mod p^digits, and both are known to that precision."""
        d = self - other
        return d.prec >= digits and d.val >= digits

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PadicScalar.from_rational(self.p, other, self.prec)
        if not isinstance(other, PadicScalar):
            return NotImplemented
        return (self.p, self.val, self.unit, self.prec) == (other.p, other.val, other.unit, other.prec)

    def __hash__(self):
        return hash((self.p, self.val, self.unit, self.prec))

    def __repr__(self):
        return f"PadicScalar(p={self.p}, val={self.val}, unit={self.unit}, prec={self.prec})"

    def render(self, k: int | None = None) -> str:
        """``p^v * u mod p^k`` plus ``(= n)`` when the value is a small rational integer."""
        if self.unit == 0:
            s = f"0 mod {self.p}^{self.prec}"
        else:
            s = f"{self.p}^{self.val} * {self.unit} mod {self.p}^{self.prec}"
        n = self.as_small_int(k)
        if n is not None:
            s += f" (= {n})"
        return s


def teichmuller(p: int, x: int, k: int) -> int:
    """omega(x) mod p^k: the (p-1)-th root of unity congruent to x mod p.

    Iterates a -> a^p, which fixes omega(x) and gains one p-adic digit per step.
    """
    x %= p
    if x == 0:
        raise ValueError("Teichmuller lift of 0")
    m = p**k
    a = x
    while True:
        b = pow(a, p, m)
        if b == a:
            return a
        a = b


def teich_realize(p: int, l: int, x: int, k: int) -> PadicScalar:
    """omega^l(x) as a unit of Z_p known mod p^k (negative l gives omega-bar powers)."""
    w = teichmuller(p, x, k)
    m = p**k
    return PadicScalar(p, 0, pow(w, l % (p - 1), m), k)
