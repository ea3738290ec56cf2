"""Finite fields F_q, q = p^e, with full discrete-log tables.

Elements are plain integers ("codes"): the polynomial a_0 + a_1 x + ... +
a_{e-1} x^{e-1} is stored as a_0 + a_1 p + ... + a_{e-1} p^{e-1}.  The prime
subfield is therefore the codes 0..p-1, and ordering elements by code is the
ordering used to pick the modulus and the generator.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

DEFAULT_CAP = 10**6


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# polynomials over F_p as coefficient lists, lowest degree first


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = _trim(list(a))
    dm = len(m) - 1
    inv = pow(m[-1], -1, p)
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for j, mj in enumerate(m):
            a[shift + j] = (a[shift + j] - c * mj) % p
        _trim(a)
    return a


def _pmulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, m, p)


def _ppowmod(a, e, m, p):
    result = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        e >>= 1
        if e:
            base = _pmulmod(base, base, m, p)
    return result


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible(f, p) -> bool:
    """Rabin's test for a monic polynomial f over F_p."""
    e = len(f) - 1
    x = [0, 1]
    if _ppowmod(x, p**e, f, p) != _pmod(x, f, p):
        return False
    for r in prime_factors(e):
        h = _ppowmod(x, p ** (e // r), f, p)
        h = h + [0] * max(0, 2 - len(h))
        h[1] = (h[1] - 1) % p
        if len(_pgcd(f, h, p)) != 1:
            return False
    return True


def _code_to_poly(c: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        c, r = divmod(c, p)
        out.append(r)
    return out


def _poly_to_code(a, p: int) -> int:
    c = 0
    for coef in reversed(a):
        c = c * p + coef
    return c


class FieldCtx:
    """The field F_{p^e} with a fixed modulus, generator and dlog table.

    Built by :func:`make_field`; immutable afterwards.
    """

    def __init__(self, p: int, e: int, modulus: tuple[int, ...], generator: int):
        self.p = p
        self.e = e
        self.q = q = p**e
        self.modulus = modulus
        self.generator = generator
        exp = [0] * (q - 1)
        log = [-1] * q
        if e == 1:
            cur = 1
            for k in range(q - 1):
                exp[k] = cur
                log[cur] = k
                cur = cur * generator % p
        else:
            g = _code_to_poly(generator, p, e)
            cur = [1]
            for k in range(q - 1):
                code = _poly_to_code(cur + [0] * (e - len(cur)), p)
                exp[k] = code
                log[code] = k
                cur = _pmulmod(cur, g, list(modulus), p)
        if len(set(exp)) != q - 1:
            raise ValueError("generator does not have order q - 1")
        self._exp = tuple(exp)
        self._log = tuple(log)
        self._trace = tuple(self._compute_trace(x) for x in range(q))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, e={self.e}, generator={self.generator})"

    def __reduce__(self):
        return (make_field, (self.p, self.e, self.generator))

    # element arithmetic on codes ------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def from_int(self, n: int) -> int:
        return n % self.p

    def coeffs(self, x: int) -> list[int]:
        return _code_to_poly(x, self.p, self.e)

    def from_coeffs(self, a) -> int:
        return _poly_to_code([c % self.p for c in a], self.p)

    def add(self, x: int, y: int) -> int:
        p = self.p
        if self.e == 1:
            return (x + y) % p
        out, place = 0, 1
        while x or y:
            x, a = divmod(x, p)
            y, b = divmod(y, p)
            out += ((a + b) % p) * place
            place *= p
        return out

    def neg(self, x: int) -> int:
        p = self.p
        if self.e == 1:
            return -x % p
        out, place = 0, 1
        while x:
            x, a = divmod(x, p)
            out += (-a % p) * place
            place *= p
        return out

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        if self.e == 1:
            return x * y % self.p
        return self._exp[(self._log[x] + self._log[y]) % (self.q - 1)]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return self._exp[-self._log[x] % (self.q - 1)]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, k: int) -> int:
        if x == 0:
            if k < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 1 if k == 0 else 0
        return self._exp[self._log[x] * k % (self.q - 1)]

    def gen_pow(self, k: int) -> int:
        """g^k for the fixed generator g."""
        return self._exp[k % (self.q - 1)]

    def dlog(self, x: int) -> int:
        """Exponent k in [0, q-2] with g^k = x."""
        if x == 0:
            raise ValueError("discrete log of 0")
        return self._log[x]

    def is_square(self, x: int) -> bool:
        return x != 0 and self._log[x] % 2 == 0

    def frobenius(self, x: int) -> int:
        return self.pow(x, self.p)

    def _compute_trace(self, x: int) -> int:
        acc, cur = 0, x
        for _ in range(self.e):
            acc = self.add(acc, cur)
            cur = self.frobenius(cur) if self.e > 1 else cur
        if acc >= self.p:
            raise ArithmeticError("trace left the prime subfield")  # pragma: no cover
        return acc

    def trace(self, x: int) -> int:
        """Absolute trace x + x^p + ... + x^(p^(e-1)), as an integer in [0, p)."""
        return self._trace[x]

    def eval_poly(self, coeffs, x: int) -> int:
        """Horner evaluation of a polynomial with F_q-code coefficients (lowest first)."""
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), c)
        return acc


def _smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    if e == 1:
        return (0, 1)
    for code in range(p**e):
        f = _code_to_poly(code, p, e) + [1]
        if f[0] == 0:
            continue
        if _is_irreducible(f, p):
            return tuple(f)
    raise ArithmeticError("no irreducible polynomial found")  # pragma: no cover


def _element_order_is_full(code: int, p: int, e: int, modulus) -> bool:
    q = p**e
    if code == 0:
        return False
    if e == 1:
        return all(pow(code, (q - 1) // r, p) != 1 for r in prime_factors(q - 1))
    g = _code_to_poly(code, p, e)
    return all(_ppowmod(g, (q - 1) // r, list(modulus), p) != [1] for r in prime_factors(q - 1))


@lru_cache(maxsize=64)
def make_field(p: int, e: int = 1, generator: int | None = None, cap: int = DEFAULT_CAP) -> FieldCtx:
    """Construct F_{p^e}.

    The modulus is the smallest monic irreducible polynomial of degree ``e``
    by code; the generator defaults to the smallest element of order q - 1.
    Passing ``generator`` picks a different primitive element (used to check
    that identities do not depend on the choice).
    """
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if e < 1:
        raise ValueError("extension degree must be positive")
    if p**e > cap:
        raise ValueError(f"q = {p}^{e} exceeds the table cap {cap}")
    modulus = _smallest_irreducible(p, e)
    if generator is None:
        generator = next(c for c in range(1, p**e) if _element_order_is_full(c, p, e, modulus))
    elif not _element_order_is_full(generator, p, e, modulus):
        raise ValueError(f"{generator} is not a primitive element of F_{p**e}")
    return FieldCtx(p, e, modulus, generator)


def primitive_elements(ctx: FieldCtx) -> list[int]:
    """All generators of F_q^x, in code order."""
    return sorted(ctx.gen_pow(k) for k in range(1, ctx.q - 1) if gcd(k, ctx.q - 1) == 1)
