"""Arithmetic in GF(p^h) for odd primes p.

Field elements are plain integers.  The element ``c_0 + c_1 t + ... +
c_{h-1} t^{h-1}`` (polynomial basis modulo a monic irreducible of degree
``h``) is encoded as ``c_0 + c_1 p + ... + c_{h-1} p^{h-1}``, so ``0`` and
``1`` encode themselves and the encoding is a bijection onto ``[0, q-1]``.

Multiplication goes through log/antilog tables of size ``q``; addition is
digit-wise mod ``p``.  Every scalar operation has a vectorised twin
(``vadd``, ``vmul``, ...) acting elementwise on integer numpy arrays.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .errors import CompositeP, DivisionByZero, EvenP, FieldTooLarge, Reducible

MAX_ORDER = 2**16
TABLE_ORDER = 1024  # full q x q add/mul tables only up to this order


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def split_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, h)`` with ``q == p**h``; raise CompositeP otherwise."""
    if q < 2:
        raise CompositeP(f"q={q} is not a prime power")
    factors = prime_factors(q)
    if len(factors) != 1:
        raise CompositeP(f"q={q} is not a prime power")
    p = factors[0]
    h = 0
    while q > 1:
        q //= p
        h += 1
    return p, h


# --- polynomials over GF(p), coefficient lists low degree first -------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``mod``."""
    a = _trim([c % p for c in a])
    d = len(mod) - 1
    while len(a) - 1 >= d:
        lead = a[-1]
        shift = len(a) - 1 - d
        for i, c in enumerate(mod):
            a[shift + i] = (a[shift + i] - lead * c) % p
        _trim(a)
    return a


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = list(poly)
    h = len(poly) - 1
    if h < 1 or poly[-1] != 1:
        return False
    for d in range(1, h // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not poly_mod(poly, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, h: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree h.

    Comparison is on ``(c_0, c_1, ..., c_{h-1})`` with the constant term
    most significant, which is exactly ``itertools.product`` order.
    """
    for low in itertools.product(range(p), repeat=h):
        poly = list(low) + [1]
        if is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError(f"no irreducible polynomial of degree {h} over GF({p})")


# --- field context -----------------------------------------------------------

@dataclass(frozen=True)
class FieldContext:
    """GF(p^h).  Immutable; safe to share between workers."""

    p: int
    h: int
    irreducible: Optional[tuple[int, ...]] = None
    q: int = field(init=False)
    exp: np.ndarray = field(init=False, repr=False, compare=False)
    log: np.ndarray = field(init=False, repr=False, compare=False)
    inv_table: np.ndarray = field(init=False, repr=False, compare=False)
    add_flat: Optional[np.ndarray] = field(init=False, repr=False, compare=False, default=None)
    mul_flat: Optional[np.ndarray] = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self):
        q = self.p**self.h
        object.__setattr__(self, "q", q)
        g = self._find_generator()
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, g)
        inv_table = np.zeros(q, dtype=np.int64)
        nz = np.arange(1, q)
        inv_table[1:] = exp[(-log[nz]) % (q - 1)]
        for name, arr in (("exp", exp), ("log", log), ("inv_table", inv_table)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        if self.h > 1 and q <= TABLE_ORDER:
            a, b = np.divmod(np.arange(q * q, dtype=np.int64), q)
            add = self._vadd_digits(a, b)
            mul = np.where((a == 0) | (b == 0), 0, exp[(log[a] + log[b]) % (q - 1)])
            for name, arr in (("add_flat", add), ("mul_flat", mul)):
                arr.setflags(write=False)
                object.__setattr__(self, name, arr)

    def __hash__(self):
        return hash((self.p, self.h, self.irreducible))

    # -- encoding --
    def decode(self, a: int) -> list[int]:
        """Coefficient list (low degree first, length h) of element ``a``."""
        out = []
        for _ in range(self.h):
            a, c = divmod(a, self.p)
            out.append(c)
        return out

    def encode(self, coeffs: Sequence[int]) -> int:
        a = 0
        for c in reversed(list(coeffs)):
            a = a * self.p + (c % self.p)
        return a

    def _raw_mul(self, a: int, b: int) -> int:
        if self.h == 1:
            return a * b % self.p
        prod = poly_mul(self.decode(a), self.decode(b), self.p)
        return self.encode(poly_mod(prod, self.irreducible, self.p))

    def _raw_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return r

    def _find_generator(self) -> int:
        n = self.q - 1
        cofactors = [n // r for r in prime_factors(n)]
        for g in range(2, self.q):
            if all(self._raw_pow(g, c) != 1 for c in cofactors):
                return g
        return 1  # q == 2 only; unreachable through make_field

    # -- scalar arithmetic --
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        if self.h == 1:
            return (a + b) % self.p
        r, scale = 0, 1
        for _ in range(self.h):
            a, x = divmod(a, self.p)
            b, y = divmod(b, self.p)
            r += ((x + y) % self.p) * scale
            scale *= self.p
        return r

    def neg(self, a: int) -> int:
        if self.h == 1:
            return (-a) % self.p
        r, scale = 0, 1
        for _ in range(self.h):
            a, x = divmod(a, self.p)
            r += ((-x) % self.p) * scale
            scale *= self.p
        return r

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.h == 1:
            return a * b % self.p
        return int(self.exp[(self.log[a] + self.log[b]) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise DivisionByZero("inverse of 0")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e > 0 else 1
        return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])

    # -- vectorised arithmetic on integer arrays --
    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.h == 1:
            return (a + b) % self.p
        if self.add_flat is not None:
            return self.add_flat[a * self.q + b]
        return self._vadd_digits(a, b)

    def _vadd_digits(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        p = self.p
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
        scale = 1
        for _ in range(self.h):
            out += (((a // scale) % p + (b // scale) % p) % p) * scale
            scale *= p
        return out

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.h == 1:
            return (-a) % self.p
        p = self.p
        out = np.zeros_like(a)
        scale = 1
        for _ in range(self.h):
            out += ((-((a // scale) % p)) % p) * scale
            scale *= p
        return out

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.h == 1:
            return (a * b) % self.p
        if self.mul_flat is not None:
            return self.mul_flat[a * self.q + b]
        prod = self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, prod)

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of 0")
        return self.inv_table[a]

    def to_json(self) -> dict:
        out = {"p": self.p, "h": self.h}
        if self.h > 1:
            out["irreducible"] = list(self.irreducible)
        return out


def make_field(p: int, h: int = 1, irreducible: Optional[Sequence[int]] = None) -> FieldContext:
    """Build GF(p^h) for an odd prime ``p``.

    Without an explicit ``irreducible`` the lexicographically smallest monic
    irreducible of degree ``h`` is used.
    """
    if not is_prime(p):
        raise CompositeP(f"p={p} is not prime")
    if p == 2:
        raise EvenP("characteristic 2 is not supported; p must be odd")
    if h < 1:
        raise ValueError(f"extension degree h={h} must be >= 1")
    if p**h > MAX_ORDER:
        raise FieldTooLarge(f"q={p}^{h} exceeds {MAX_ORDER}")
    return _make_field(p, h, None if irreducible is None else tuple(int(c) for c in irreducible))


@lru_cache(maxsize=None)
def _make_field(p: int, h: int, irreducible: Optional[tuple[int, ...]]) -> FieldContext:
    if h == 1:
        if irreducible is not None and (len(irreducible) != 2 or irreducible[1] != 1):
            raise Reducible(f"{list(irreducible)} is not a monic degree-1 polynomial")
        return FieldContext(p, 1, None)
    if irreducible is None:
        irreducible = smallest_irreducible(p, h)
    elif any(not 0 <= c < p for c in irreducible) or len(irreducible) != h + 1 or not is_irreducible(irreducible, p):
        raise Reducible(f"{list(irreducible)} is not a monic irreducible of degree {h} over GF({p})")
    return FieldContext(p, h, irreducible)


def field_of_order(q: int) -> FieldContext:
    p, h = split_prime_power(q)
    return make_field(p, h)
