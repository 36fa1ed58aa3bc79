"""Binary cyclic codes of length n = 2^m - 1 built from defining sets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

import numpy as np

from .bitpoly import (
    BinaryPolynomial,
    check_polynomial,
    generator_from_defining_set,
    reciprocal,
)
from .field import FieldSpec
from .gf2linalg import BitMatrix
from .znsets import (
    DefiningSet,
    DefiningSetError,
    complement,
    longest_run_in_mask,
    negate_set,
    scale_set,
)


class CodeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class CyclicCode:
    T: DefiningSet
    field: FieldSpec

    @property
    def n(self) -> int:
        return self.T.n

    @cached_property
    def k(self) -> int:
        return self.n - len(self.T)

    @cached_property
    def g(self) -> BinaryPolynomial:
        return generator_from_defining_set(self.T, self.field)

    @cached_property
    def h(self) -> BinaryPolynomial:
        return check_polynomial(self.g, self.n)

    @cached_property
    def generator_matrix(self) -> BitMatrix:
        g = self.g.bits
        return BitMatrix(tuple(g << i for i in range(self.k)), self.n)

    @cached_property
    def parity_check_matrix(self) -> BitMatrix:
        hr = reciprocal(self.h).bits
        return BitMatrix(tuple(hr << i for i in range(self.n - self.k)), self.n)

    def __eq__(self, other):
        if not isinstance(other, CyclicCode):
            return NotImplemented
        return self.T == other.T and self.field == other.field

    def __hash__(self):
        return hash((self.T, self.field))

    def __repr__(self):
        return f"CyclicCode([{self.n},{self.k}], |T|={len(self.T)}, m={self.field.m})"


def from_defining_set(T: DefiningSet, f: FieldSpec) -> CyclicCode:
    if T.n != f.n:
        raise CodeError(f"defining set lives in Z_{T.n}, field has n = {f.n}")
    if not T.is_coset_closed():
        raise DefiningSetError(f"defining set is not closed under doubling mod {T.n}")
    return CyclicCode(T, f)


def dual(c: CyclicCode) -> CyclicCode:
    """Dual code; its defining set is Z_n minus (-T)."""
    return CyclicCode(complement(negate_set(c.T)), c.field)


def even_like_subcode(c: CyclicCode) -> CyclicCode:
    if 0 in c.T:
        raise CodeError("0 is already in the defining set; the code is already even-like")
    mask = c.T.mask.copy()
    mask[0] = True
    return CyclicCode(DefiningSet(c.n, mask, check=False), c.field)


def extend(c: CyclicCode) -> BitMatrix:
    """Generator of the extended code: each row gets an overall parity bit at position n."""
    n = c.n
    rows = tuple(r | ((r.bit_count() & 1) << n) for r in c.generator_matrix.rows)
    return BitMatrix(rows, n + 1)


@dataclass(frozen=True)
class BchCertificate:
    """Run {start, ..., start+length-1} (mod n) inside scale_set(T, u); proves d >= length + 1."""

    u: int
    start: int
    length: int

    @property
    def bound(self) -> int:
        return self.length + 1

    def to_dict(self) -> dict:
        return {"u": self.u, "start": self.start, "length": self.length}


def verify_certificate(cert: BchCertificate, c: CyclicCode) -> bool:
    n = c.n
    if gcd(cert.u, n) != 1 or not 0 <= cert.length <= n:
        return False
    scaled = scale_set(c.T, cert.u)
    run = (cert.start + np.arange(cert.length)) % n
    return bool(scaled.mask[run].all())


def _unit_orbit_reps(n: int):
    """One unit per orbit of multiplication by {+-2^j}, with the orbit's smallest element."""
    seen = np.zeros(n, dtype=bool)
    for u in range(1, n):
        if seen[u] or gcd(u, n) != 1:
            continue
        orbit = []
        t = u
        while True:
            for s in (t, n - t):
                if not seen[s]:
                    seen[s] = True
                    orbit.append(s)
            t = (2 * t) % n
            if t == u:
                break
        yield u, min(orbit)


def best_bch_certificate(c: CyclicCode) -> BchCertificate:
    """Longest cyclic run over all rescalings of T by units of Z_n.

    Multiplying by 2 fixes T, and -1 mirrors runs, so one representative per
    orbit of {+-2^j} is scanned.  Ties go to the smallest u, then smallest start.
    """
    n = c.n
    mask = c.T.mask
    if not mask.any():
        return BchCertificate(1, 0, 0)
    idx = np.arange(n, dtype=np.int64)
    best_len, best_u = -1, None
    for rep, smallest in _unit_orbit_reps(n):
        _, length = longest_run_in_mask(mask[(idx * pow(rep, -1, n)) % n])
        if length > best_len or (length == best_len and smallest < best_u):
            best_len, best_u = length, smallest
    start, length = longest_run_in_mask(mask[(idx * pow(best_u, -1, n)) % n])
    return BchCertificate(best_u, start, length)


_ENGINES = {
    "min_distance_exhaustive", "min_distance_mitm", "low_weight_search",
    "min_odd_weight", "weight_distribution", "EngineLimitError", "NoOddWeightError",
}


def __getattr__(name):
    # the engines live in .distance, which itself imports this module
    if name in _ENGINES:
        from . import distance

        return getattr(distance, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
