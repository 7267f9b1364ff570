"""Exponent matrices, their text format, and the lifted Tanner graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

# An entry is either None (no circulant block) or a sorted tuple of distinct shifts.
Entry = Union[tuple[int, ...], None]


class FormatError(ValueError):
    """Raised for malformed matrix text; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _normalize_entry(raw, N: int, reduce: bool) -> Entry:
    if raw is None or raw == "-":
        return None
    if isinstance(raw, (int, np.integer)):
        raw = (int(raw),)
    shifts = [int(s) for s in raw]
    if reduce:
        shifts = [s % N for s in shifts]
    if not shifts:
        raise ValueError("empty shift list")
    for s in shifts:
        if not 0 <= s < N:
            raise ValueError(f"shift {s} outside [0, {N})")
    if len(set(shifts)) != len(shifts):
        raise ValueError(f"duplicate shift in entry {tuple(shifts)}")
    return tuple(sorted(shifts))


@dataclass(frozen=True)
class ExponentMatrix:
    """An m x n grid of shift sets over Z_N.

    Build instances with :meth:`from_rows`, which validates and sorts entries.
    """

    entries: tuple[tuple[Entry, ...], ...]
    N: int

    def __post_init__(self):
        if int(self.N) < 2:
            raise ValueError(f"lifting degree must be >= 2, got {self.N}")
        if not self.entries or not self.entries[0]:
            raise ValueError("matrix needs at least one row and one column")
        n = len(self.entries[0])
        for row in self.entries:
            if len(row) != n:
                raise ValueError("ragged rows")
            for e in row:
                if e is None:
                    continue
                if not e or list(e) != sorted(set(e)) or not all(0 <= s < self.N for s in e):
                    raise ValueError(f"invalid entry {e!r} for N={self.N}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], N: int, *, reduce: bool = False) -> ExponentMatrix:
        """Accepts ints, iterables of ints, None or "-" per entry.

        With ``reduce=True`` shifts are taken mod N instead of being rejected.
        """
        grid = tuple(tuple(_normalize_entry(e, N, reduce) for e in row) for row in rows)
        return cls(grid, int(N))

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    @property
    def is_single_edge(self) -> bool:
        return all(e is None or len(e) == 1 for row in self.entries for e in row)

    @property
    def is_fully_connected(self) -> bool:
        return all(e is not None for row in self.entries for e in row)

    def __getitem__(self, ij: tuple[int, int]) -> Entry:
        i, j = ij
        return self.entries[i][j]

    def weights(self) -> np.ndarray:
        return np.array([[0 if e is None else len(e) for e in row] for row in self.entries], dtype=np.int64)

    def to_array(self) -> np.ndarray:
        """Single-edge matrix as an int array, with -1 marking absent blocks."""
        if not self.is_single_edge:
            raise ValueError("to_array needs a single-edge matrix")
        return np.array([[-1 if e is None else e[0] for e in row] for row in self.entries], dtype=np.int64)

    @classmethod
    def from_array(cls, arr, N: int) -> ExponentMatrix:
        arr = np.asarray(arr)
        return cls.from_rows([[None if v < 0 else int(v) for v in row] for row in arr], N)

    def with_N(self, N: int) -> ExponentMatrix:
        return ExponentMatrix(self.entries, int(N))

    def map_shifts(self, fn, N: int | None = None) -> ExponentMatrix:
        """Apply ``fn(i, j, shift)`` to every shift, reducing mod the (new) N."""
        N = self.N if N is None else N
        rows = [[None if e is None else [fn(i, j, s) % N for s in e] for j, e in enumerate(row)]
                for i, row in enumerate(self.entries)]
        return ExponentMatrix.from_rows(rows, N)

    def negated(self) -> ExponentMatrix:
        return self.map_shifts(lambda i, j, s: -s)

    def num_shifts(self) -> int:
        return int(self.weights().sum())

    def __str__(self) -> str:
        return format_matrix(self)


def hstack(*blocks: ExponentMatrix) -> ExponentMatrix:
    """Place matrices with equal row count and lifting degree side by side."""
    N = blocks[0].N
    if any(b.N != N or b.m != blocks[0].m for b in blocks):
        raise ValueError("hstack needs equal m and N")
    rows = tuple(sum((b.entries[i] for b in blocks), ()) for i in range(blocks[0].m))
    return ExponentMatrix(rows, N)


def _format_entry(e: Entry) -> str:
    return "-" if e is None else ",".join(str(s) for s in e)


def format_matrix(B: ExponentMatrix) -> str:
    cells = [[_format_entry(e) for e in row] for row in B.entries]
    width = max(len(c) for row in cells for c in row)
    lines = [f"{B.m} {B.n} {B.N}"]
    lines += [" ".join(c.rjust(width) for c in row) for row in cells]
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line.split()))
    return out


def parse_matrix(text: str) -> ExponentMatrix:
    """Parse the whitespace-separated matrix format ("m n N" header, then m rows)."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty input")
    lineno, header = lines[0]
    if len(header) != 3:
        raise FormatError(f"header must be 'm n N', got {' '.join(header)!r}", lineno)
    try:
        m, n, N = (int(t) for t in header)
    except ValueError:
        raise FormatError(f"non-integer header {' '.join(header)!r}", lineno) from None
    if m < 1 or n < 1:
        raise FormatError("m and n must be positive", lineno)
    if N < 2:
        raise FormatError("N must be at least 2", lineno)
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"expected {m} rows, found {len(body)}", body[-1][0] if body else lineno)
    rows = []
    for lineno, tokens in body:
        if len(tokens) != n:
            raise FormatError(f"expected {n} entries, found {len(tokens)}", lineno)
        row = []
        for tok in tokens:
            if tok == "-":
                row.append(None)
                continue
            parts = tok.split(",")
            if any(p == "" for p in parts):
                raise FormatError(f"empty shift in {tok!r}", lineno)
            try:
                shifts = [int(p) for p in parts]
            except ValueError:
                raise FormatError(f"bad entry {tok!r}", lineno) from None
            try:
                row.append(_normalize_entry(shifts, N, reduce=False))
            except ValueError as exc:
                raise FormatError(str(exc), lineno) from None
        rows.append(tuple(row))
    return ExponentMatrix(tuple(rows), N)


def read_matrix(path) -> ExponentMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


@dataclass(frozen=True)
class LiftedGraph:
    """Tanner graph of the lifted code.

    Check node ``i*N + s`` is vertex ``i*N + s``; variable node ``j*N + t`` is
    vertex ``num_checks + j*N + t``. Edge arrays are parallel: edge ``e`` joins
    ``checks[e]`` and ``variables[e]`` (both in their own numbering).
    """

    m: int
    n: int
    N: int
    checks: np.ndarray
    variables: np.ndarray
    _csr: tuple = field(default=None, repr=False, compare=False)

    @property
    def num_checks(self) -> int:
        return self.m * self.N

    @property
    def num_vars(self) -> int:
        return self.n * self.N

    @property
    def num_vertices(self) -> int:
        return self.num_checks + self.num_vars

    @property
    def num_edges(self) -> int:
        return len(self.checks)

    def adjacency(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """CSR arrays ``(indptr, neighbour, edge_id)`` over the joint vertex numbering."""
        if self._csr is None:
            src = np.concatenate([self.checks, self.variables + self.num_checks])
            dst = np.concatenate([self.variables + self.num_checks, self.checks])
            eid = np.concatenate([np.arange(self.num_edges)] * 2)
            order = np.lexsort((dst, src))
            indptr = np.zeros(self.num_vertices + 1, dtype=np.int64)
            np.add.at(indptr, src + 1, 1)
            object.__setattr__(self, "_csr", (np.cumsum(indptr), dst[order], eid[order]))
        return self._csr

    def degrees(self) -> np.ndarray:
        indptr = self.adjacency()[0]
        return np.diff(indptr)

    def parity_check(self) -> np.ndarray:
        H = np.zeros((self.num_checks, self.num_vars), dtype=np.uint8)
        H[self.checks, self.variables] = 1
        return H


def lift(B: ExponentMatrix) -> LiftedGraph:
    N = B.N
    s = np.arange(N, dtype=np.int64)
    checks, variables = [], []
    for i, row in enumerate(B.entries):
        for j, e in enumerate(row):
            for b in e or ():
                checks.append(i * N + s)
                variables.append(j * N + (b + s) % N)
    if checks:
        c, v = np.concatenate(checks), np.concatenate(variables)
    else:
        c = v = np.zeros(0, dtype=np.int64)
    return LiftedGraph(B.m, B.n, N, c, v)
