"""Dense polynomials over GF(2), packed into Python ints (bit i = x^i)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import field as gf
from .field import FieldSpec, clmod, clmul


class PolynomialError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class BinaryPolynomial:
    bits: int = 0

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "BinaryPolynomial":
        return cls(sum((int(c) & 1) << i for i, c in enumerate(coeffs)))

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> "BinaryPolynomial":
        bits = 0
        for e in exps:
            bits ^= 1 << e
        return cls(bits)

    @classmethod
    def xn_plus_1(cls, n: int) -> "BinaryPolynomial":
        return cls((1 << n) | 1)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return self.bits.bit_length() - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Ascending coefficients; empty for zero."""
        return tuple((self.bits >> i) & 1 for i in range(self.bits.bit_length()))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __bool__(self):
        return self.bits != 0

    def __add__(self, other):
        return BinaryPolynomial(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other):
        return BinaryPolynomial(clmul(self.bits, other.bits))

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def to_bitstring(self) -> str:
        """Canonical text form: ascending-degree coefficients, "0" for zero."""
        return "".join(map(str, self.coeffs)) or "0"

    def __str__(self):
        if not self.bits:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            if (self.bits >> i) & 1:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return "+".join(terms)


ZERO = BinaryPolynomial(0)
ONE = BinaryPolynomial(1)


def add(p: BinaryPolynomial, q: BinaryPolynomial) -> BinaryPolynomial:
    return p + q


def mul(p: BinaryPolynomial, q: BinaryPolynomial) -> BinaryPolynomial:
    return p * q


def poly_divmod(p: BinaryPolynomial, q: BinaryPolynomial) -> tuple[BinaryPolynomial, BinaryPolynomial]:
    if not q.bits:
        raise ZeroDivisionError("division by the zero polynomial")
    a, b = p.bits, q.bits
    db = b.bit_length()
    quot = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        quot |= 1 << shift
        a ^= b << shift
    return BinaryPolynomial(quot), BinaryPolynomial(a)


def gcd(p: BinaryPolynomial, q: BinaryPolynomial) -> BinaryPolynomial:
    a, b = p.bits, q.bits
    while b:
        a, b = b, clmod(a, b)
    return BinaryPolynomial(a)


def minimal_polynomial(coset, f: FieldSpec) -> BinaryPolynomial:
    """prod_{j in coset} (x - alpha^j), expanded in GF(2^m) then projected to GF(2).

    Raises PolynomialError when a coefficient falls outside {0, 1}, which is
    exactly the case of a set that is not closed under doubling.
    """
    members = sorted({j % f.n for j in coset})
    if not members:
        raise PolynomialError("empty coset")
    # ascending field coefficients
    c = [1]
    for j in members:
        root = f.antilog(j)
        nxt = [0] * (len(c) + 1)
        for i, a in enumerate(c):
            nxt[i + 1] ^= a
            nxt[i] ^= gf.mul(a, root, f)
        c = nxt
    if any(a not in (0, 1) for a in c):
        raise PolynomialError(f"set {members} is not closed under doubling mod {f.n}")
    return BinaryPolynomial.from_coeffs(c)


def generator_from_defining_set(T, f: FieldSpec) -> BinaryPolynomial:
    """Product of the minimal polynomials of the cosets making up T."""
    from .znsets import DefiningSet, coset_decomposition

    if not isinstance(T, DefiningSet):
        T = DefiningSet.from_members(f.n, T, check=False)
    if T.n != f.n:
        raise PolynomialError(f"defining set modulus {T.n} does not match field n = {f.n}")
    g = 1
    for coset in coset_decomposition(T):
        g = clmul(g, minimal_polynomial(coset, f).bits)
    return BinaryPolynomial(g)


def check_polynomial(g: BinaryPolynomial, n: int) -> BinaryPolynomial:
    h, r = poly_divmod(BinaryPolynomial.xn_plus_1(n), g)
    if r.bits:
        raise PolynomialError(f"{g} does not divide x^{n}+1")
    return h


def reciprocal(p: BinaryPolynomial) -> BinaryPolynomial:
    """x^deg(p) * p(1/x)."""
    d = p.degree
    return BinaryPolynomial.from_exponents(d - i for i in range(d + 1) if (p.bits >> i) & 1)
