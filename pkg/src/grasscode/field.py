"""Table-driven arithmetic over F_q for prime powers q <= 256.

Elements are the integers 0..q-1. For q = p^e with e > 1, element ``i``
stands for the polynomial whose coefficients are the base-p digits of ``i``
(least significant digit = constant term), reduced modulo the least monic
irreducible polynomial of degree e over F_p, where "least" means smallest
integer encoding under the same digit convention. For q = 4 that is
x^2 + x + 1, for q = 8 x^3 + x + 1, for q = 256 x^8 + x^4 + x^3 + x + 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Tuple

from .errors import GrasscodeError, OutOfRangeError

MAX_Q = 256


def _factor_prime_power(q: int) -> Optional[Tuple[int, int]]:
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    return (p, e) if rest == 1 else None


def _digits(value: int, p: int, length: int) -> list:
    out = []
    for _ in range(length):
        value, r = divmod(value, p)
        out.append(r)
    return out


def _from_digits(digits, p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


def _poly_mod(a: list, m: list, p: int) -> list:
    """Remainder of a modulo monic m, coefficient lists lowest degree first."""
    a = a[:]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return a[:dm] if dm else []


def _is_irreducible(poly: list, p: int) -> bool:
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        # every monic polynomial of degree d
        for low in range(p ** d):
            divisor = _digits(low, p, d) + [1]
            if not any(_poly_mod(poly, divisor, p)):
                return False
    return True


def least_irreducible(p: int, e: int) -> Tuple[int, ...]:
    """Coefficients (constant term first) of the least monic irreducible of degree e."""
    for low in range(p ** e):
        poly = _digits(low, p, e) + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True)
class FieldTable:
    q: int
    p: int
    e: int
    modulus: Tuple[int, ...]
    add_table: Tuple[Tuple[int, ...], ...] = field(repr=False)
    mul_table: Tuple[Tuple[int, ...], ...] = field(repr=False)
    neg_table: Tuple[int, ...] = field(repr=False)
    inv_table: Tuple[int, ...] = field(repr=False)

    def _check(self, *xs: int) -> None:
        for x in xs:
            if not 0 <= x < self.q:
                raise OutOfRangeError(f"{x} is not an element of F_{self.q}")

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        self._check(a, b)
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        self._check(a)
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.inv_table[a]

    def pow(self, a: int, exponent: int) -> int:
        self._check(a)
        result = 1
        for _ in range(exponent):
            result = self.mul_table[result][a]
        return result


@lru_cache(maxsize=None)
def build_field(q: int) -> FieldTable:
    """Return the arithmetic tables of F_q (cached per q)."""
    if not isinstance(q, int) or isinstance(q, bool):
        raise GrasscodeError(f"field order must be an integer, got {q!r}")
    if not 2 <= q <= MAX_Q:
        raise OutOfRangeError(f"field order {q} outside 2..{MAX_Q}")
    pe = _factor_prime_power(q)
    if pe is None:
        raise GrasscodeError(f"{q} is not a prime power")
    p, e = pe

    if e == 1:
        modulus: Tuple[int, ...] = (0, 1)
        add = tuple(tuple((a + b) % p for b in range(q)) for a in range(q))
        mul = tuple(tuple((a * b) % p for b in range(q)) for a in range(q))
    else:
        modulus = least_irreducible(p, e)
        digits = [_digits(a, p, e) for a in range(q)]
        add = tuple(
            tuple(_from_digits([(x + y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(q))
            for a in range(q)
        )
        rows = []
        for a in range(q):
            row = []
            for b in range(q):
                prod = [0] * (2 * e - 1)
                for i, x in enumerate(digits[a]):
                    if x:
                        for j, y in enumerate(digits[b]):
                            prod[i + j] = (prod[i + j] + x * y) % p
                row.append(_from_digits(_poly_mod(prod, list(modulus), p), p))
            rows.append(tuple(row))
        mul = tuple(rows)

    neg = tuple(next(b for b in range(q) if add[a][b] == 0) for a in range(q))
    inv = (0,) + tuple(next(b for b in range(1, q) if mul[a][b] == 1) for a in range(1, q))
    return FieldTable(q, p, e, modulus, add, mul, neg, inv)


_OPS = {"add", "sub", "mul", "inv", "neg"}


def arith(t: FieldTable, op: str, a: int, b: Optional[int] = None) -> int:
    """Dispatch a named field operation; ``b`` is required for binary ops."""
    if op not in _OPS:
        raise GrasscodeError(f"unknown field operation {op!r}")
    if op in ("inv", "neg"):
        return getattr(t, op)(a)
    if b is None:
        raise GrasscodeError(f"{op} needs two operands")
    return getattr(t, op)(a, b)
