"""Arithmetic in GF(2^m) over a pinned primitive polynomial.

Elements are plain ints: bit i is the coefficient of x^i in the polynomial
basis {1, x, ..., x^(m-1)}.  The class of x is the primitive element alpha.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

# bit i = coefficient of x^i
PINNED_POLYS = {
    3: 0b1011,       # x^3 + x + 1
    4: 0b10011,      # x^4 + x + 1
    5: 0b100101,     # x^5 + x^2 + 1
    6: 0b1011011,    # x^6 + x^4 + x^3 + x + 1
    7: 0b10000011,   # x^7 + x + 1
}

TABLE_LIMIT = 20


class FieldError(ValueError):
    pass


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division (n < 2^32 here)."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2) polynomials packed as ints."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    out = 0
    while b:
        low = b & -b
        out ^= a << (low.bit_length() - 1)
        b ^= low
    return out


def clmod(a: int, p: int) -> int:
    dp = p.bit_length()
    while a.bit_length() >= dp:
        a ^= p << (a.bit_length() - dp)
    return a


def _polymulmod(a: int, b: int, p: int) -> int:
    return clmod(clmul(a, b), p)


def _polypowmod(a: int, e: int, p: int) -> int:
    out = 1
    a = clmod(a, p)
    while e:
        if e & 1:
            out = _polymulmod(out, a, p)
        a = _polymulmod(a, a, p)
        e >>= 1
    return out


def _polygcd(a: int, b: int) -> int:
    while b:
        a, b = b, clmod(a, b)
    return a


def is_irreducible(p: int) -> bool:
    """Ben-Or test: p has no factor of degree <= deg(p)/2."""
    m = p.bit_length() - 1
    if m < 1:
        return False
    x_pow = 0b10
    for _ in range(m // 2):
        x_pow = _polymulmod(x_pow, x_pow, p)
        if _polygcd(p, x_pow ^ 0b10) != 1:
            return False
    return True


def x_order_is_full(p: int) -> bool:
    """True iff x has multiplicative order exactly 2^m - 1 modulo p."""
    m = p.bit_length() - 1
    n = (1 << m) - 1
    if _polypowmod(0b10, n, p) != 1:
        return False
    return all(_polypowmod(0b10, n // q, p) != 1 for q in prime_factors(n))


def check_primitive(p: int, m: int) -> None:
    """Raise FieldError naming the first check p fails."""
    if p.bit_length() - 1 != m:
        raise FieldError(f"degree check failed: polynomial has degree {p.bit_length() - 1}, expected {m}")
    if not p & 1:
        raise FieldError("constant-term check failed: x divides the polynomial")
    if not is_irreducible(p):
        raise FieldError("irreducibility check failed: polynomial is reducible")
    if not x_order_is_full(p):
        raise FieldError(f"primitivity check failed: order of x is not {(1 << m) - 1}")


@lru_cache(maxsize=None)
def smallest_primitive(m: int) -> int:
    """Smallest primitive polynomial of degree m, ordered by packed integer value."""
    for p in range((1 << m) | 1, 1 << (m + 1), 2):
        if is_irreducible(p) and x_order_is_full(p):
            return p
    raise FieldError(f"no primitive polynomial of degree {m}")  # unreachable


@dataclass(frozen=True)
class FieldSpec:
    m: int
    primitive_poly: int
    n: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "n", (1 << self.m) - 1)

    @property
    def poly_bits(self) -> tuple[int, ...]:
        return tuple((self.primitive_poly >> i) & 1 for i in range(self.m + 1))

    @cached_property
    def _tables(self) -> tuple[list[int], list[int]]:
        exp = [0] * (2 * self.n)
        log = [-1] * (self.n + 1)
        a = 1
        for i in range(self.n):
            exp[i] = a
            log[a] = i
            a <<= 1
            if a >> self.m:
                a ^= self.primitive_poly
        exp[self.n:] = exp[: self.n]
        return exp, log

    @property
    def has_tables(self) -> bool:
        return self.m <= TABLE_LIMIT

    def antilog(self, j: int) -> int:
        """alpha^j."""
        if self.has_tables:
            return self._tables[0][j % self.n]
        return _polypowmod(0b10, j % self.n, self.primitive_poly)

    def log(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("log of zero")
        if not self.has_tables:
            raise FieldError(f"log tables are not built for m > {TABLE_LIMIT}")
        return self._tables[1][a]

    def __repr__(self):
        return f"FieldSpec(m={self.m}, primitive_poly={self.primitive_poly:#b})"


def make_field(m: int, poly=None) -> FieldSpec:
    """Build GF(2^m).

    ``poly`` may be an int (bit i = coefficient of x^i) or a bit sequence of
    length m+1 in the same order.  Without it, the pinned catalog is used
    for 3 <= m <= 7 and the smallest primitive polynomial otherwise.
    """
    if not 2 <= m <= 32:
        raise FieldError(f"m must be in [2, 32], got {m}")
    if poly is None:
        p = PINNED_POLYS.get(m) or smallest_primitive(m)
    elif isinstance(poly, int):
        p = poly
    else:
        bits = list(poly)
        p = sum(int(b) << i for i, b in enumerate(bits))
    check_primitive(p, m)
    return FieldSpec(m, p)


def mul(a: int, b: int, f: FieldSpec) -> int:
    if a == 0 or b == 0:
        return 0
    if f.has_tables:
        exp, log = f._tables
        return exp[log[a] + log[b]]
    return _polymulmod(a, b, f.primitive_poly)


def pow(a: int, e: int, f: FieldSpec) -> int:  # noqa: A001
    if a == 0:
        if e == 0:
            return 1
        if e < 0:
            raise ZeroDivisionError("zero has no inverse")
        return 0
    if f.has_tables:
        return f.antilog(f.log(a) * e)
    return _polypowmod(a, e % f.n, f.primitive_poly)


def inv(a: int, f: FieldSpec) -> int:
    if a == 0:
        raise ZeroDivisionError("zero has no inverse in GF(2^m)")
    return pow(a, f.n - 1, f)


def element_order(a: int, f: FieldSpec) -> int:
    if a == 0:
        raise ZeroDivisionError("zero has no multiplicative order")
    order = f.n
    for q in prime_factors(f.n):
        while order % q == 0 and pow(a, order // q, f) == 1:
            order //= q
    return order


def alpha(f: FieldSpec) -> int:
    return 0b10
