"""Minimum-distance engines: exhaustive enumeration, meet-in-the-middle, Lee-Brickell."""

from __future__ import annotations

import random
from itertools import combinations
from math import comb

import numpy as np

from .cycliccode import CyclicCode
from .gf2linalg import BitMatrix

EXHAUSTIVE_K_LIMIT = 26
MITM_MEMORY_LIMIT = 2 << 30  # bytes
_LOW_BLOCK = 16
_MITM_CHUNK = 1 << 18


class EngineLimitError(RuntimeError):
    """A distance engine was asked to go beyond its configured limit."""


class NoOddWeightError(ValueError):
    pass


def _generator(code) -> BitMatrix:
    if isinstance(code, BitMatrix):
        return code
    return code.generator_matrix


def _to_words(values, nbits: int) -> np.ndarray:
    """Pack Python ints into an (len(values), nwords) uint64 array."""
    nwords = max(1, -(-nbits // 64))
    out = np.zeros((len(values), nwords), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, v in enumerate(values):
        for w in range(nwords):
            out[i, w] = (v >> (64 * w)) & mask
    return out


def weight_distribution(code, k_limit: int = EXHAUSTIVE_K_LIMIT) -> list[int]:
    """Counts A_0..A_n over all 2^k codewords (Gray-code walk over a 2^16 table)."""
    G = _generator(code)
    k, n = G.nrows, G.cols
    if k > k_limit:
        raise EngineLimitError(f"exhaustive enumeration limited to k <= {k_limit}, code has k = {k}")
    words = _to_words(G.rows, n)
    b = min(k, _LOW_BLOCK)
    table = np.zeros((1 << b, words.shape[1]), dtype=np.uint64)
    for i in range(b):
        table[1 << i: 2 << i] = table[: 1 << i] ^ words[i]
    high = words[b:]
    cols = [np.ascontiguousarray(table[:, w]) for w in range(table.shape[1])]
    offset = np.zeros(table.shape[1], dtype=np.uint64)
    hist = np.zeros(n + 1, dtype=np.int64)
    for step in range(1 << (k - b)):
        if step:
            offset ^= high[(step & -step).bit_length() - 1]
        weight = np.bitwise_count(cols[0] ^ offset[0]).astype(np.int64)
        for w in range(1, len(cols)):
            weight += np.bitwise_count(cols[w] ^ offset[w])
        hist += np.bincount(weight, minlength=n + 1)
    return hist.tolist()


def min_distance_exhaustive(code, k_limit: int = EXHAUSTIVE_K_LIMIT) -> int | None:
    """Exact minimum distance; None for the zero code."""
    dist = weight_distribution(code, k_limit)
    return next((w for w, a in enumerate(dist) if w and a), None)


def min_odd_weight(code, k_limit: int = EXHAUSTIVE_K_LIMIT) -> int:
    dist = weight_distribution(code, k_limit)
    w = next((w for w in range(1, len(dist), 2) if dist[w]), None)
    if w is None:
        raise NoOddWeightError("code has no odd-weight codewords")
    return w


def _subsets(pool_size: int, r: int, offset: int = 0) -> np.ndarray:
    if r == 0:
        return np.zeros((1, 0), dtype=np.int32)
    flat = np.fromiter(
        (x + offset for c in combinations(range(pool_size), r) for x in c),
        dtype=np.int32,
        count=comb(pool_size, r) * r,
    )
    return flat.reshape(-1, r)


def _syndromes(columns: np.ndarray, subsets: np.ndarray) -> np.ndarray:
    out = np.zeros((subsets.shape[0], columns.shape[1]), dtype=np.uint64)
    for j in range(subsets.shape[1]):
        out ^= columns[subsets[:, j]]
    return out


def min_distance_mitm(code, w_max: int, memory_limit: int = MITM_MEMORY_LIMIT, cyclic: bool | None = None) -> int | None:
    """Smallest w <= w_max such that some w columns of H sum to zero, else None.

    Each weight-w word is split into its ceil(w/2) smallest support positions
    and the rest; syndromes of both halves are matched by sorting on the first
    syndrome word, and candidate pairs are confirmed by exact comparison.  For
    cyclic codes the smallest position is pinned to 0.
    """
    if isinstance(code, CyclicCode):
        H = code.parity_check_matrix
        cyclic = True if cyclic is None else cyclic
    else:
        from .gf2linalg import null_space

        H = null_space(_generator(code))
        cyclic = bool(cyclic)
    n, r = H.cols, H.nrows
    if w_max < 1:
        return None
    col_ints = [sum(((row >> j) & 1) << i for i, row in enumerate(H.rows)) for j in range(n)]
    columns = _to_words(col_ints, max(r, 1))
    row_bytes = 8 * columns.shape[1] + 4 * ((w_max + 1) // 2)
    for w in range(1, min(w_max, n) + 1):
        b = (w + 1) // 2
        a = w - b
        if cyclic:
            n1 = comb(n - 1, b - 1)
        else:
            n1 = comb(n, b)
        n2 = comb(n - 1, a) if cyclic else comb(n, a)
        need = (n1 + n2) * row_bytes
        if need > memory_limit:
            raise EngineLimitError(
                f"meet-in-the-middle at w={w} needs {n1 + n2} half-subsets "
                f"(~{need / 2**30:.2f} GiB) over the {memory_limit / 2**30:.2f} GiB budget"
            )
        if cyclic:
            first = np.hstack([np.zeros((n1, 1), dtype=np.int32), _subsets(n - 1, b - 1, 1)])
            second = _subsets(n - 1, a, 1)
        else:
            first = _subsets(n, b)
            second = _subsets(n, a)
        s1 = _syndromes(columns, first)
        if a == 0:
            if not s1.any(axis=1).all():
                return w
            continue
        max1 = first[:, -1]
        order = np.argsort(s1[:, 0], kind="stable")
        keys = s1[order, 0]
        for lo_row in range(0, len(second), _MITM_CHUNK):
            block = second[lo_row: lo_row + _MITM_CHUNK]
            s2 = _syndromes(columns, block)
            lo = np.searchsorted(keys, s2[:, 0], side="left")
            counts = np.searchsorted(keys, s2[:, 0], side="right") - lo
            total = int(counts.sum())
            if not total:
                continue
            j2 = np.repeat(np.arange(len(s2)), counts)
            pos = np.repeat(lo - (np.cumsum(counts) - counts), counts) + np.arange(total)
            j1 = order[pos]
            ok = np.all(s1[j1] == s2[j2], axis=1) & (max1[j1] < block[j2, 0])
            if ok.any():
                return w
    return None


def _lee_brickell(G: BitMatrix, target_w: int, iterations: int, seed: int, p: int = 2):
    """Returns (codeword, iteration of the hit) or (None, iterations)."""
    if p not in (1, 2):
        raise ValueError("window p must be 1 or 2")
    rng = random.Random(seed)
    n = G.cols
    base = [r for r in G.rows if r]
    if not base:
        return None, 0
    cols = list(range(n))
    for it in range(1, iterations + 1):
        rng.shuffle(cols)
        work = list(base)
        r = 0
        for c in cols:
            bit = 1 << c
            piv = next((i for i in range(r, len(work)) if work[i] & bit), None)
            if piv is None:
                continue
            work[r], work[piv] = work[piv], work[r]
            pr = work[r]
            for i in range(len(work)):
                if i != r and work[i] & bit:
                    work[i] ^= pr
            r += 1
            if r == len(work):
                break
        work = work[:r]
        for v in work:
            if v.bit_count() <= target_w:
                return v, it
        if p == 2:
            for x, y in combinations(work, 2):
                v = x ^ y
                if v.bit_count() <= target_w:
                    return v, it
    return None, iterations


def low_weight_search(code, target_w: int, iterations: int, seed: int, p: int = 2) -> int | None:
    """Random information-set search (Lee-Brickell, window p <= 2).

    Returns a nonzero codeword (bit j = position j) of weight <= target_w, or
    None.  Deterministic for a given seed; a miss proves nothing.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    word, _ = _lee_brickell(_generator(code), target_w, iterations, seed, p)
    return word


def low_weight_search_with_stats(code, target_w: int, iterations: int, seed: int, p: int = 2):
    """Like low_weight_search but also returns the iteration of the hit."""
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    return _lee_brickell(_generator(code), target_w, iterations, seed, p)


def is_codeword(word: int, code) -> bool:
    if isinstance(code, CyclicCode):
        H = code.parity_check_matrix
        return not any((row & word).bit_count() & 1 for row in H.rows)
    from .gf2linalg import in_row_space

    return in_row_space(word, _generator(code))
