"""Random matrix generators and corpus access shared by the tests."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from girthlab.core import ExponentMatrix, lift
from girthlab.corpus import load_corpus
from girthlab.oracle import girth_bfs

_CORPUS = {e.id: e for e in load_corpus()}


def corpus(entry_id: str) -> ExponentMatrix:
    return _CORPUS[entry_id].matrix


def corpus_group(group: str) -> list:
    return [e for e in _CORPUS.values() if e.group == group]


def random_single(rng: random.Random, m: int, n: int, N: int, puncture: float = 0.0) -> ExponentMatrix:
    rows = [[None if rng.random() < puncture else rng.randrange(N) for _ in range(n)] for _ in range(m)]
    return ExponentMatrix.from_rows(rows, N)


def zero_first(rng: random.Random, m: int, n: int, N: int) -> ExponentMatrix:
    rows = [[0] * n] + [[0] + [rng.randrange(N) for _ in range(n - 1)] for _ in range(m - 1)]
    return ExponentMatrix.from_rows(rows, N)


def zero_row(rng: random.Random, m: int, n: int, N: int) -> ExponentMatrix:
    """First row 0, everything else uniform."""
    rows = [[0] * n] + [[rng.randrange(N) for _ in range(n)] for _ in range(m - 1)]
    return ExponentMatrix.from_rows(rows, N)


def greedy(rng: random.Random, m: int, n: int, N: int, target: int, tries: int = 200,
           zero_first: bool = False) -> ExponentMatrix:
    """Fill column by column, keeping the BFS girth of the prefix at least ``target`` when possible.

    With ``zero_first`` the first row and column stay 0.
    """
    rows = [[0] * n for _ in range(m)]
    for j in range(1 if zero_first else 0, n):
        for _ in range(tries):
            col = [rng.randrange(N) for _ in range(m)]
            if zero_first:
                col[0] = 0
            for i in range(m):
                rows[i][j] = col[i]
            g = girth_bfs(lift(ExponentMatrix.from_rows([r[:j + 1] for r in rows], N)))
            if g is None or g >= target:
                break
    return ExponentMatrix.from_rows(rows, N)


def random_me(rng: random.Random, max_m: int = 4, max_n: int = 4, max_N: int = 64) -> ExponentMatrix:
    m, n, N = rng.randint(1, max_m), rng.randint(1, max_n), rng.randint(2, max_N)
    rows = []
    for _ in range(m):
        row = []
        for _ in range(n):
            w = min(rng.choice([0, 1, 1, 2, 2, 3]), N)
            row.append(None if w == 0 else rng.sample(range(N), w))
        rows.append(row)
    return ExponentMatrix.from_rows(rows, N)


@st.composite
def single_edge(draw, max_m: int = 6, max_n: int = 6, max_N: int = 64, min_m: int = 1, min_n: int = 1,
                punctured: bool = False):
    m = draw(st.integers(min_m, max_m))
    n = draw(st.integers(min_n, max_n))
    N = draw(st.integers(2, max_N))
    cell = st.integers(0, N - 1)
    if punctured:
        cell = st.one_of(st.none(), cell)
    rows = draw(st.lists(st.lists(cell, min_size=n, max_size=n), min_size=m, max_size=m))
    return ExponentMatrix.from_rows(rows, N)


@st.composite
def multi_edge(draw, max_m: int = 3, max_n: int = 3, max_N: int = 24, max_w: int = 3):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    N = draw(st.integers(3, max_N))
    entry = st.one_of(st.none(), st.sets(st.integers(0, N - 1), min_size=1, max_size=min(max_w, N)))
    rows = draw(st.lists(st.lists(entry, min_size=n, max_size=n), min_size=m, max_size=m))
    return ExponentMatrix.from_rows([[None if e is None else sorted(e) for e in row] for row in rows], N)
