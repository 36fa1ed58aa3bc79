"""Subsets of Z_n (n = 2^m - 1): 2-adic weights, cyclotomic cosets, defining sets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable

import numpy as np


class DefiningSetError(ValueError):
    pass


def w2(i: int, m: int | None = None) -> int:
    """Number of ones in the binary expansion of i."""
    if i < 0 or (m is not None and i >= 1 << m):
        raise ValueError(f"{i} is not an {m}-bit integer")
    return i.bit_count()


def weights_table(n: int) -> np.ndarray:
    """w2(j) for j in [0, n)."""
    return np.bitwise_count(np.arange(n, dtype=np.uint64)).astype(np.int64)


def cyclotomic_coset(s: int, n: int) -> frozenset[int]:
    s %= n
    out = {s}
    t = (2 * s) % n
    while t != s:
        out.add(t)
        t = (2 * t) % n
    return frozenset(out)


def cyclotomic_cosets(n: int) -> list[frozenset[int]]:
    """All 2-cyclotomic cosets mod n, ordered by coset leader."""
    seen = np.zeros(n, dtype=bool)
    out = []
    for s in range(n):
        if not seen[s]:
            c = cyclotomic_coset(s, n)
            seen[list(c)] = True
            out.append(c)
    return out


def units(n: int) -> list[int]:
    return [u for u in range(1, n) if gcd(u, n) == 1]


class DefiningSet:
    """A subset of Z_n held as a membership mask; normally closed under doubling."""

    def __init__(self, n: int, mask: np.ndarray, check: bool = True):
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (n,):
            raise DefiningSetError(f"mask has shape {mask.shape}, expected ({n},)")
        mask.flags.writeable = False
        self.n = n
        self.mask = mask
        if check and not self.is_coset_closed():
            bad = int(np.flatnonzero(mask & ~mask[(2 * np.arange(n)) % n])[0]) if n else 0
            raise DefiningSetError(f"not closed under doubling mod {n}: {bad} is a member but {2 * bad % n} is not")

    @classmethod
    def from_members(cls, n: int, members: Iterable[int], check: bool = True) -> "DefiningSet":
        mask = np.zeros(n, dtype=bool)
        idx = np.fromiter((int(t) % n for t in members), dtype=np.int64) if n else np.zeros(0, np.int64)
        mask[idx] = True
        return cls(n, mask, check=check)

    @classmethod
    def empty(cls, n: int) -> "DefiningSet":
        return cls(n, np.zeros(n, dtype=bool))

    @classmethod
    def full(cls, n: int) -> "DefiningSet":
        return cls(n, np.ones(n, dtype=bool))

    @cached_property
    def members(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    def __len__(self):
        return int(self.mask.sum())

    def __contains__(self, t: int) -> bool:
        return bool(self.mask[int(t) % self.n])

    def __iter__(self):
        return iter(self.members.tolist())

    def __eq__(self, other):
        if not isinstance(other, DefiningSet):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.mask, other.mask)

    def __hash__(self):
        return hash((self.n, np.packbits(self.mask).tobytes()))

    def __repr__(self):
        body = self.members.tolist()
        if len(body) > 12:
            body = body[:12] + ["..."]
        return f"DefiningSet(n={self.n}, size={len(self)}, members={body})"

    def to_set(self) -> set[int]:
        return set(self.members.tolist())

    def is_coset_closed(self) -> bool:
        if self.n == 0:
            return True
        return bool(np.array_equal(self.mask, self.mask[(2 * np.arange(self.n)) % self.n]))

    def __or__(self, other):
        _same_modulus(self, other)
        return DefiningSet(self.n, self.mask | other.mask, check=False)

    def __and__(self, other):
        _same_modulus(self, other)
        return DefiningSet(self.n, self.mask & other.mask, check=False)

    def __sub__(self, other):
        _same_modulus(self, other)
        return DefiningSet(self.n, self.mask & ~other.mask, check=False)


def _same_modulus(a: DefiningSet, b: DefiningSet):
    if a.n != b.n:
        raise DefiningSetError(f"moduli differ: {a.n} vs {b.n}")


def coset_decomposition(T: DefiningSet) -> list[list[int]]:
    """Split a doubling-closed set into its cosets (sorted, by leader)."""
    seen = np.zeros(T.n, dtype=bool)
    out = []
    for s in T.members.tolist():
        if not seen[s]:
            c = sorted(cyclotomic_coset(s, T.n))
            seen[c] = True
            out.append(c)
    return out


@dataclass(frozen=True)
class WeightClassSpec:
    r: int
    S: frozenset
    m: int

    def __post_init__(self):
        object.__setattr__(self, "S", frozenset(int(s) % self.r for s in self.S) if self.r else frozenset())
        if self.r < 2:
            raise ValueError(f"r must be >= 2, got {self.r}")
        if not self.S or len(self.S) == self.r:
            raise ValueError(f"S must be a nonempty proper subset of Z_{self.r}, got {sorted(self.S)}")
        if self.m < 2:
            raise ValueError(f"m must be >= 2, got {self.m}")


def weight_class_set(spec: WeightClassSpec) -> DefiningSet:
    """{1 <= j <= n-1 : w2(j) mod r in S}."""
    n = (1 << spec.m) - 1
    w = weights_table(n) % spec.r
    mask = np.isin(w, sorted(spec.S))
    mask[0] = False
    return DefiningSet(n, mask, check=False)


def weight_class_count(spec: WeightClassSpec) -> int:
    """|weight_class_set(spec)| by binomial counting (no set is built)."""
    from math import comb

    return sum(comb(spec.m, w) for w in range(1, spec.m) if w % spec.r in spec.S)


def mod3_set(i: int, m: int) -> DefiningSet:
    return weight_class_set(WeightClassSpec(3, frozenset({i}), m))


def mod4_set(i1: int, i2: int, m: int) -> DefiningSet:
    return weight_class_set(WeightClassSpec(4, frozenset({i1, i2}), m))


def prm_defining_set(r: int, m: int) -> DefiningSet:
    """Defining set of the punctured Reed-Muller code of order r: {j != 0 : w2(j) <= m-r-1}."""
    if not 0 <= r < m:
        raise ValueError(f"order r must satisfy 0 <= r < m, got r={r}, m={m}")
    n = (1 << m) - 1
    mask = weights_table(n) <= m - r - 1
    mask[0] = False
    return DefiningSet(n, mask, check=False)


def negate_set(T: DefiningSet) -> DefiningSet:
    """{(n - t) mod n : t in T}."""
    n = T.n
    return DefiningSet(n, T.mask[(-np.arange(n)) % n] if n else T.mask, check=False)


def scale_set(T: DefiningSet, u: int) -> DefiningSet:
    """{u*t mod n : t in T}; u must be a unit."""
    n = T.n
    if gcd(u, n) != 1:
        raise DefiningSetError(f"{u} is not a unit mod {n}")
    uinv = pow(u, -1, n) if n > 1 else 0
    # s in uT  <=>  uinv*s in T
    return DefiningSet(n, T.mask[(np.arange(n, dtype=np.int64) * uinv) % n], check=False)


def complement(T: DefiningSet) -> DefiningSet:
    return DefiningSet(T.n, ~T.mask, check=False)


def longest_run_in_mask(mask: np.ndarray) -> tuple[int, int]:
    """Longest cyclic run of True entries as (start, length); smallest start on ties.

    Length 0 gives start 0; an all-True mask gives (0, len(mask)).
    """
    n = mask.shape[0]
    holes = np.flatnonzero(~mask)
    if holes.size == 0:
        return 0, n
    if holes.size == n:
        return 0, 0
    # run after hole h_k ends at hole h_{k+1} (cyclically)
    nxt = np.empty_like(holes)
    nxt[:-1] = holes[1:]
    nxt[-1] = holes[0] + n
    lengths = nxt - holes - 1
    best = int(lengths.max())
    starts = (holes[lengths == best] + 1) % n
    return int(starts.min()), best


def longest_cyclic_run(T: DefiningSet) -> tuple[int, int]:
    return longest_run_in_mask(T.mask)


@dataclass(frozen=True)
class SplittingSpec:
    S1: DefiningSet
    S2: DefiningSet
    mu: int


def is_splitting(s: SplittingSpec) -> bool:
    S1, S2, n = s.S1, s.S2, s.S1.n
    if S2.n != n or gcd(s.mu, n) != 1:
        return False
    if not (S1.is_coset_closed() and S2.is_coset_closed()):
        return False
    if (S1.mask & S2.mask).any():
        return False
    union = S1.mask | S2.mask
    if union[0] or not union[1:].all():
        return False
    return scale_set(S1, s.mu) == S2 and scale_set(S2, s.mu) == S1
