"""First- and second-order difference matrices of an exponent matrix.

Single-edge form: D has one row per row pair (a, b), a < b, holding
``b[a][j] - b[b][j]``; DD has one entry per (row pair, column pair (u, v)),
holding the pair ``(D[u] - D[v], D[v] - D[u])``.

Multiple-edge form: D is m x n, each entry the list of within-entry shift
differences; DD is (row pair) x n, each entry the list of cross-row
differences ``s - t`` for s in B[a][j], t in B[b][j].

Every residue lives in [0, N). Absent values are -1 in the array forms and
None in the list forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Literal

import numpy as np

from .core import ExponentMatrix

UNUSED = -1


def pair_list(k: int) -> list[tuple[int, int]]:
    """All pairs (a, b), a < b < k, in the order (0,1), (0,2), ..., (k-2,k-1)."""
    return list(combinations(range(k), 2))


def row_pair_index(i1: int, i2: int, m: int) -> int:
    if not 0 <= i1 < i2 < m:
        raise ValueError(f"need 0 <= i1 < i2 < m, got ({i1}, {i2}) with m={m}")
    return comb(m, 2) - comb(m - i1, 2) + (i2 - i1 - 1)


@dataclass(frozen=True, eq=False)
class DiffD:
    N: int
    m: int
    n: int
    single_edge: bool
    values: np.ndarray | None = None  # (C(m,2), n) residues, -1 where absent
    vectors: tuple | None = None  # m x n grid of tuples (None where absent)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return pair_list(self.m)

    def signed(self, a: int, b: int) -> np.ndarray:
        """Row ``b[a] - b[b]`` for any ordered pair of distinct rows (-1 stays absent)."""
        if a < b:
            return self.values[row_pair_index(a, b, self.m)]
        row = self.values[row_pair_index(b, a, self.m)]
        return np.where(row < 0, UNUSED, (-row) % self.N)

    def rows_as_lists(self) -> list[list]:
        if self.single_edge:
            return [[None if v < 0 else int(v) for v in row] for row in self.values]
        return [list(row) for row in self.vectors]


@dataclass(frozen=True, eq=False)
class DiffDD:
    N: int
    m: int
    n: int
    single_edge: bool
    values: np.ndarray | None = None  # (C(m,2), C(n,2), 2), -1 where absent
    vectors: tuple | None = None  # C(m,2) x n grid of tuples (None where absent)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return pair_list(self.m)

    @property
    def column_pairs(self) -> list[tuple[int, int]]:
        return pair_list(self.n)

    def rows_as_lists(self) -> list[list]:
        if self.single_edge:
            return [[None if c[0] < 0 else (int(c[0]), int(c[1])) for c in row] for row in self.values]
        return [list(row) for row in self.vectors]


Form = Literal["auto", "single", "multi"]


def _resolve(B: ExponentMatrix, form: Form) -> bool:
    if form == "auto":
        return B.is_single_edge
    if form == "single":
        if not B.is_single_edge:
            raise ValueError("single-edge form requested for a multiple-edge matrix")
        return True
    return False


def build_D(B: ExponentMatrix, form: Form = "auto") -> DiffD:
    N = B.N
    if _resolve(B, form):
        arr = B.to_array()
        rows = []
        for a, b in pair_list(B.m):
            diff = (arr[a] - arr[b]) % N
            rows.append(np.where((arr[a] < 0) | (arr[b] < 0), UNUSED, diff))
        values = np.array(rows, dtype=np.int64).reshape(len(rows), B.n)
        return DiffD(N, B.m, B.n, True, values=values)
    grid = []
    for row in B.entries:
        out = []
        for e in row:
            if e is None:
                out.append(None)
                continue
            vec = []
            for r, r2 in combinations(range(len(e)), 2):
                vec += [(e[r] - e[r2]) % N, (e[r2] - e[r]) % N]
            out.append(tuple(vec))
        grid.append(tuple(out))
    return DiffD(N, B.m, B.n, False, vectors=tuple(grid))


def build_DD(B: ExponentMatrix, form: Form = "auto") -> DiffDD:
    N = B.N
    if _resolve(B, form):
        D = build_D(B, "single").values
        cps = pair_list(B.n)
        out = np.full((D.shape[0], len(cps), 2), UNUSED, dtype=np.int64)
        if cps:
            u = np.array([c[0] for c in cps])
            v = np.array([c[1] for c in cps])
            du, dv = D[:, u], D[:, v]
            ok = (du >= 0) & (dv >= 0)
            out[..., 0] = np.where(ok, (du - dv) % N, UNUSED)
            out[..., 1] = np.where(ok, (dv - du) % N, UNUSED)
        return DiffDD(N, B.m, B.n, True, values=out)
    grid = []
    for a, b in pair_list(B.m):
        out = []
        for j in range(B.n):
            ea, eb = B.entries[a][j], B.entries[b][j]
            if ea is None or eb is None:
                out.append(None)
            else:
                out.append(tuple((s - t) % N for s in ea for t in eb))
        grid.append(tuple(out))
    return DiffDD(N, B.m, B.n, False, vectors=tuple(grid))


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, tuple):
        return "(" + ",".join(str(x) for x in v) + ")"
    return str(v)


def _table(rows: list[list], labels: list[str]) -> str:
    cells = [[_cell(v) for v in row] for row in rows]
    if not cells:
        return ""
    width = max(len(c) for row in cells for c in row)
    lw = max(len(s) for s in labels)
    return "\n".join(f"{lab.ljust(lw)} | " + " ".join(c.rjust(width) for c in row)
                     for lab, row in zip(labels, cells))


def format_D(D: DiffD) -> str:
    if D.single_edge:
        labels = [f"({a},{b})" for a, b in D.pairs]
    else:
        labels = [f"row {i}" for i in range(D.m)]
    return _table(D.rows_as_lists(), labels)


def format_DD(DD: DiffDD) -> str:
    return _table(DD.rows_as_lists(), [f"({a},{b})" for a, b in DD.pairs])
