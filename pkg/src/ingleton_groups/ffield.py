"""Finite fields F_q with q = p^m in a polynomial basis.

Elements are stored as integers 0..q-1. The integer's base-p digits, lowest
first, are the coefficients of the polynomial representative, so index 7 in
F_9 is the polynomial 2x + 1 and prints as ``"21"``. The prime subfield is
indexed 0..p-1, which lets small integers stand for themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from . import config
from .errors import FieldError, FieldMismatchError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m, or raise FieldError."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = 2
    while q % p:
        p += 1
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1 or not is_prime(p):
        raise FieldError(f"{q} is not a prime power")
    return p, m


# -- polynomials over Z_p as coefficient lists, lowest degree first --------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _poly_trim(list(a))
    lead_inv = pow(f[-1], p - 2, p)
    while len(a) >= len(f):
        c = (a[-1] * lead_inv) % p
        shift = len(a) - len(f)
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _poly_trim(a)
    return a


def _monic_polys(degree: int, p: int):
    """Monic polynomials of a degree, in increasing c0 + c1*p + ... order."""
    for digits in product(range(p), repeat=degree):
        yield list(reversed(digits)) + [1]


def _is_irreducible(f: list[int], p: int) -> bool:
    m = len(f) - 1
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for g in _monic_polys(d, p):
            if not _poly_mod(f, g, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest irreducible monic polynomial of degree m.

    Candidates are ranked by c0 + c1*p + ... + c_{m-1}*p^{m-1}.
    """
    if m == 1:
        return (0, 1)
    for f in _monic_polys(m, p):
        if f[0] != 0 and _is_irreducible(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {m} over F_{p}")


class Field:
    """The field F_q with a fixed modulus and a fixed primitive element."""

    def __init__(self, p: int, m: int = 1):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError("extension degree must be positive")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = smallest_irreducible(p, m)

    def __repr__(self) -> str:
        return f"Field({self.q})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("Field", self.q))

    # digit conversion
    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_digits(self, ds) -> int:
        a = 0
        for d in reversed(list(ds)):
            a = a * self.p + d
        return a

    def _poly_mul(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        r = _poly_mod(prod, list(self.modulus), self.p)
        return self.from_digits(r + [0] * (self.m - len(r)))

    @cached_property
    def add_table(self) -> list[list[int]]:
        q, digs = self.q, [self.digits(a) for a in range(self.q)]
        p = self.p
        return [
            [self.from_digits((x + y) % p for x, y in zip(digs[a], digs[b])) for b in range(q)]
            for a in range(q)
        ]

    @cached_property
    def neg_table(self) -> list[int]:
        return [self.from_digits((-x) % self.p for x in self.digits(a)) for a in range(self.q)]

    @cached_property
    def primitive(self) -> int:
        """Smallest element index of multiplicative order q - 1."""
        for a in range(1, self.q):
            x, k = a, 1
            while x != 1:
                x = self._poly_mul(x, a)
                k += 1
            if k == self.q - 1:
                return a
        raise FieldError("no primitive element")  # pragma: no cover

    @cached_property
    def _exp_log(self) -> tuple[list[int], list[int]]:
        t = self.primitive
        exp = [1] * (self.q - 1)
        for i in range(1, self.q - 1):
            exp[i] = self._poly_mul(exp[i - 1], t)
        log = [0] * self.q
        for i, x in enumerate(exp):
            log[x] = i
        return exp, log

    @cached_property
    def mul_table(self) -> list[list[int]]:
        exp, log = self._exp_log
        n = self.q - 1
        rows = [[0] * self.q]
        for a in range(1, self.q):
            la = log[a]
            rows.append([0] + [exp[(la + log[b]) % n] for b in range(1, self.q)])
        return rows

    @cached_property
    def inv_table(self) -> list[int]:
        exp, log = self._exp_log
        n = self.q - 1
        return [0] + [exp[(-log[a]) % n] for a in range(1, self.q)]

    # scalar arithmetic on indices
    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.inv_table[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if k == 0 else 0
        exp, log = self._exp_log
        return exp[(log[a] * k) % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise FieldError("log of zero")
        return self._exp_log[1][a]

    def order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        from math import gcd

        return (self.q - 1) // gcd(self.log(a), self.q - 1)

    def from_int(self, k: int) -> int:
        """The integer k read in the prime subfield."""
        return k % self.p

    def basis(self) -> list[int]:
        """Indices of 1, x, ..., x^{m-1}."""
        return [self.p**i for i in range(self.m)]

    def fmt(self, a: int) -> str:
        return "".join(str(d) for d in reversed(self.digits(a))) if self.m > 1 else str(a)

    def parse(self, s: str) -> int:
        s = s.strip()
        if s.startswith("-"):
            return self.neg(self.parse(s[1:]))
        if not s or not s.isdigit():
            raise FieldError(f"bad field element {s!r}")
        if self.m == 1:
            return int(s) % self.p
        if len(s) > self.m or any(int(c) >= self.p for c in s):
            raise FieldError(f"bad digit string {s!r} for F_{self.q}")
        return self.from_digits(int(c) for c in reversed(s))

    def element(self, a: int) -> "FieldElement":
        if not 0 <= a < self.q:
            raise FieldError(f"index {a} out of range for F_{self.q}")
        return FieldElement(self, a)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, a) for a in range(self.q)]

    def primitive_element(self) -> "FieldElement":
        return FieldElement(self, self.primitive)


@dataclass(frozen=True)
class FieldElement:
    field: Field
    index: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"F_{self.field.q} and F_{other.field.q}")
            return other.index
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        return FieldElement(self.field, self.field.add(self.index, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return FieldElement(self.field, self.field.sub(self.index, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return FieldElement(self.field, self.field.sub(b, self.index))

    def __mul__(self, other):
        b = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.index, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        return FieldElement(self.field, self.field.div(self.index, b))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.power(self.index, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.index))

    def order(self) -> int:
        return self.field.order(self.index)

    def __str__(self) -> str:
        return self.field.fmt(self.index)

    def __repr__(self) -> str:
        return f"F{self.field.q}({self.field.fmt(self.index)})"


_FIELDS: dict[int, Field] = {}


def field_make(p: int, m: int = 1, cap: int | None = None) -> Field:
    """Return the (cached) field of order p^m."""
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    q = p**m
    cap = config.FIELD_CAP if cap is None else cap
    if q > cap:
        raise FieldError(f"field order {q} exceeds cap {cap}")
    if q not in _FIELDS:
        _FIELDS[q] = Field(p, m)
    return _FIELDS[q]


def field_of_order(q: int, cap: int | None = None) -> Field:
    p, m = prime_power(q)
    return field_make(p, m, cap=cap)
