"""GF(2) linear algebra and minimum distance of lifted codes.

Bit vectors are Python ints (bit j is coordinate j) during elimination and
packed ``uint64`` words during exhaustive enumeration.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .core import ExponentMatrix, lift

EXHAUSTIVE_MAX_DIM = 28
_TABLE_BITS = 20


def parity_check_rows(B: ExponentMatrix) -> tuple[list[int], int]:
    """Rows of the lifted parity-check matrix as ints, plus the code length."""
    G = lift(B)
    rows = [0] * G.num_checks
    for c, v in zip(G.checks.tolist(), G.variables.tolist()):
        rows[c] ^= 1 << v
    return rows, G.num_vars


def rref(rows: list[int], ncols: int, order: list[int] | None = None) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns) in pivot order.

    ``order`` sets the column priority for pivot selection.
    """
    rows = [r for r in rows if r]
    pivots = []
    rank = 0
    for col in (range(ncols) if order is None else order):
        bit = 1 << col
        sel = next((i for i in range(rank, len(rows)) if rows[i] & bit), None)
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        piv = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & bit:
                rows[i] ^= piv
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def gf2_rank(rows: list[int], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: list[int], ncols: int) -> list[int]:
    """Basis of {x : H x = 0} for H given by ``rows``."""
    R, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        vec = 1 << f
        for r, p in zip(R, pivots):
            if r >> f & 1:
                vec |= 1 << p
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class MinDistance:
    value: int | None  # best weight found (upper bound unless exact)
    exact: bool
    dimension: int
    length: int
    lower_bound: int
    method: str
    stats: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"d_min": self.value, "exact": self.exact, "dimension": self.dimension,
                "length": self.length, "lower_bound": self.lower_bound, "method": self.method,
                "stats": dict(self.stats)}


def _pack(vecs: list[int], words: int) -> np.ndarray:
    out = np.zeros((len(vecs), words), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, v in enumerate(vecs):
        for w in range(words):
            out[i, w] = (v >> (64 * w)) & mask
    return out


def _exhaustive(basis: list[int], length: int) -> tuple[int, int]:
    """Minimum nonzero weight over all 2^k combinations; returns (weight, count)."""
    k = len(basis)
    words = max(1, (length + 63) // 64)
    gens = _pack(basis, words)
    a = min(k, _TABLE_BITS)
    table = np.zeros((1, words), dtype=np.uint64)
    for g in gens[:a]:
        table = np.concatenate([table, table ^ g])
    weights = np.bitwise_count(table).sum(axis=1, dtype=np.int64)
    best = int(weights[1:].min()) if len(weights) > 1 else length + 1
    outer = gens[a:]
    acc = np.zeros(words, dtype=np.uint64)
    # Gray code over the remaining generators
    for step in range(1, 1 << len(outer)):
        acc ^= outer[(step & -step).bit_length() - 1]
        w = int(np.bitwise_count(table ^ acc).sum(axis=1, dtype=np.int64).min())
        best = min(best, w)
    return best, 1 << k


def _information_sets(basis: list[int], length: int) -> list[tuple[list[int], int]]:
    """Systematic generator matrices on greedy disjoint information sets.

    Each item is (rows, r) where r counts pivots outside earlier sets.
    """
    k = len(basis)
    used: set[int] = set()
    out = []
    while len(used) < length:
        fresh = [c for c in range(length) if c not in used]
        order = fresh + [c for c in range(length) if c in used]
        rows, pivots = rref(list(basis), length, order)
        r = sum(1 for p in pivots if p not in used)
        if r == 0:
            break
        out.append((rows, r))
        used.update(p for p in pivots if p not in used)
        if r < k:
            break
    return out


_TABLE_LIMIT = 1 << 21


def _combo_table(gens: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """XORs of all p-subsets of ``gens`` sorted by largest index, plus that index."""
    k, words = gens.shape
    if p == 0:
        return np.zeros((1, words), dtype=np.uint64), np.full(1, -1)
    sums, tops = [], []
    prev, prev_top = _combo_table(gens, p - 1)
    for i in range(k):
        sel = prev_top < i
        if sel.any():
            sums.append(prev[sel] ^ gens[i])
            tops.append(np.full(int(sel.sum()), i))
    if not sums:
        return np.zeros((0, words), dtype=np.uint64), np.zeros(0, dtype=np.int64)
    return np.concatenate(sums), np.concatenate(tops)


def _min_weight_of_size(gens: np.ndarray, w: int, limit: int | None, deadline: float | None) -> tuple[int, int, bool]:
    """Least weight of a sum of exactly w generators; returns (weight, visited, complete)."""
    k = len(gens)
    p = w
    while p > 1 and comb(k, p) > _TABLE_LIMIT:
        p -= 1
    table, tops = _combo_table(gens, p)
    # table rows with top < s form a prefix
    cut = np.searchsorted(tops, np.arange(k + 1), side="left")
    best = 1 << 30
    visited = 0
    for rest in combinations(range(k), w - p):
        lo = rest[0] if rest else k
        n_rows = int(cut[lo])
        if n_rows == 0:
            continue
        acc = np.zeros(gens.shape[1], dtype=np.uint64)
        for i in rest:
            acc ^= gens[i]
        wt = np.bitwise_count(table[:n_rows] ^ acc).sum(axis=1, dtype=np.int64)
        best = min(best, int(wt.min()))
        visited += n_rows
        if limit is not None and visited >= limit:
            return best, visited, False
        if deadline is not None and time.monotonic() > deadline:
            return best, visited, False
    return best, visited, True


def _brouwer_zimmermann(basis: list[int], length: int, budget: int | None,
                        deadline: float | None) -> tuple[int, int, int, bool]:
    k = len(basis)
    words = max(1, (length + 63) // 64)
    sets = [(_pack(rows, words), r) for rows, r in _information_sets(basis, length)]
    upper = min(v.bit_count() for v in basis)
    lower = 1
    visited = 0
    for w in range(1, k + 1):
        for gens, _ in sets:
            limit = None if budget is None else budget - visited
            best, seen, complete = _min_weight_of_size(gens, w, limit, deadline)
            visited += seen
            upper = min(upper, best)
            if not complete:
                return upper, lower, visited, False
        lower = max(lower, sum(max(0, w + 1 - (k - r)) for _, r in sets))
        if lower >= upper:
            return upper, upper, visited, True
    return upper, upper, visited, True


def min_distance(B: ExponentMatrix, budget: int | None = None, time_limit: float | None = None) -> MinDistance:
    """Minimum Hamming weight of a nonzero codeword of the lifted code.

    Dimensions up to 28 are enumerated exhaustively. Larger codes use an
    information-set search with lower and upper envelopes; when ``budget``
    (codewords) or ``time_limit`` (seconds) runs out first, the result is the
    best upper bound with ``exact=False``.
    """
    rows, length = parity_check_rows(B)
    basis = nullspace(rows, length)
    k = len(basis)
    if k == 0:
        raise ValueError("the lifted code has dimension 0")
    t0 = time.monotonic()
    if k <= EXHAUSTIVE_MAX_DIM:
        best, count = _exhaustive(basis, length)
        return MinDistance(best, True, k, length, best, "exhaustive",
                           {"codewords": count, "seconds": time.monotonic() - t0})
    deadline = None if time_limit is None else t0 + time_limit
    upper, lower, visited, done = _brouwer_zimmermann(basis, length, budget, deadline)
    return MinDistance(upper, done, k, length, lower, "information-set",
                       {"codewords": visited, "seconds": time.monotonic() - t0})
