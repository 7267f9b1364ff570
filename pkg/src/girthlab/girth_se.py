"""Girth conditions for single-edge exponent matrices, phrased on D and DD.

Every check returns ``None`` when the matrix passes and a
:class:`ConditionViolation` otherwise. Each violation carries the colliding
D/DD coordinates and, whenever the collision is a genuine closed walk, the
walk itself as a :class:`~girthlab.oracle.CycleWitness`.

Notation used below: for an ordered row pair (x, y) let
``Z_xy(u, v) = (b_x - b_y)[u] - (b_x - b_y)[v]``. The first DD component at
row pair p = (a, b) and column pair (u, v) is ``Z_ab(u, v)``, the second is
``Z_ab(v, u)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .core import ExponentMatrix, lift
from .diffmat import DiffD, DiffDD, build_D, build_DD, pair_list, row_pair_index
from .oracle import CycleWitness, Outcome, girth_bfs, has_cycle_fossorier, witness_from_terms


@dataclass(frozen=True)
class ConditionViolation:
    cycle_length: int
    condition_id: str
    witness: dict
    walk: CycleWitness | None = None

    def to_json(self) -> dict:
        out = {"cycle_length": self.cycle_length, "condition": self.condition_id,
               "witness": _jsonable(self.witness)}
        if self.walk is not None:
            out["walk"] = self.walk.to_json()
        return out


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    return obj


def _require_single(D: DiffD):
    if not D.single_edge:
        raise ValueError("single-edge difference matrix required; use girth_me for multiple edges")


def enumerate_row_triples(m: int) -> list[tuple[int, int, int]]:
    """D-row indices of (a,b), (a,c), (b,c) for every row triple a < b < c."""
    return [(row_pair_index(a, b, m), row_pair_index(a, c, m), row_pair_index(b, c, m))
            for a, b, c in combinations(range(m), 3)]


# ------------------------------------------------------------------ 4-cycles

def check_4cycles(D: DiffD) -> ConditionViolation | None:
    _require_single(D)
    for p, (a, b) in enumerate(D.pairs):
        seen: dict[int, int] = {}
        for j, v in enumerate(D.values[p].tolist()):
            if v < 0:
                continue
            if v in seen:
                j1 = seen[v]
                return ConditionViolation(4, "4.D-row-repeat",
                                          {"row_pair": (a, b), "columns": (j1, j), "value": v},
                                          witness_from_terms([a, b], [j1, j]))
            seen[v] = j
    return None


# ------------------------------------------------------------------ 6-cycles

@dataclass(frozen=True)
class SixCycleValueSet:
    values: frozenset[int]
    per_triple: dict[tuple[int, int, int], frozenset[int]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.values)

    def sorted(self) -> list[int]:
        return sorted(self.values)


@lru_cache(maxsize=64)
def _distinct_mask(n: int, k: int) -> np.ndarray:
    """Boolean array over k label axes: all labels pairwise distinct."""
    grids = np.meshgrid(*[np.arange(n)] * k, indexing="ij")
    ok = np.ones((n,) * k, dtype=bool)
    for x, y in combinations(range(k), 2):
        ok &= grids[x] != grids[y]
    return ok


@lru_cache(maxsize=64)
def _cyclic_mask(n: int, k: int) -> np.ndarray:
    """Boolean array over k label axes: cyclically consecutive labels differ."""
    grids = np.meshgrid(*[np.arange(n)] * k, indexing="ij")
    ok = np.ones((n,) * k, dtype=bool)
    for t in range(k):
        ok &= grids[t] != grids[(t + 1) % k]
    return ok


def _outer_sum(vectors: list[np.ndarray], N: int) -> tuple[np.ndarray, np.ndarray]:
    """Sum over a k-dim label grid and the mask of all-present terms."""
    k = len(vectors)
    total = np.zeros((1,) * k, dtype=np.int64)
    present = np.ones((1,) * k, dtype=bool)
    for t, vec in enumerate(vectors):
        shape = [1] * k
        shape[t] = -1
        v = vec.reshape(shape)
        total = total + v
        present = present & (v >= 0)
    return total % N, present


def _triangle_values(D: DiffD, triple: tuple[int, int, int]) -> tuple[np.ndarray, np.ndarray]:
    t1, t2, t3 = triple
    N = D.N
    d1, d2, d3 = D.values[t1], D.values[t2], D.values[t3]
    present = (d1[:, None, None] >= 0) & (d2[None, :, None] >= 0) & (d3[None, None, :] >= 0)
    vals = (-d1[:, None, None] + d2[None, :, None] - d3[None, None, :]) % N
    return vals, present & _distinct_mask(D.n, 3)


def _pair_rows(m: int) -> dict[int, tuple[int, int]]:
    return dict(enumerate(pair_list(m)))


def check_6cycles(D: DiffD, m: int | None = None) -> ConditionViolation | None:
    _require_single(D)
    m = D.m if m is None else m
    pairs = _pair_rows(m)
    for triple in enumerate_row_triples(m):
        vals, ok = _triangle_values(D, triple)
        hits = np.argwhere(ok & (vals == 0))
        if len(hits):
            j1, j2, j3 = (int(x) for x in hits[0])
            a, b = pairs[triple[0]]
            c = pairs[triple[1]][1]
            return ConditionViolation(
                6, "6.row-triple",
                {"rows": (a, b, c), "d_rows": triple, "columns": (j1, j2, j3),
                 "terms": [int(D.values[triple[0]][j1]), int(D.values[triple[1]][j2]),
                           int(D.values[triple[2]][j3])]},
                witness_from_terms([a, b, c], [j2, j1, j3]))
    return None


def six_cycle_values(D: DiffD, m: int | None = None) -> SixCycleValueSet:
    """All residues -D[t1][j1] + D[t2][j2] - D[t3][j3] over row triples and distinct columns."""
    _require_single(D)
    m = D.m if m is None else m
    per = {}
    for triple in enumerate_row_triples(m):
        vals, ok = _triangle_values(D, triple)
        per[triple] = frozenset(int(v) for v in np.unique(vals[ok]))
    union = frozenset().union(*per.values()) if per else frozenset()
    return SixCycleValueSet(union, per)


# ------------------------------------------------------------------ 8-cycles

def _dd_components(DD: DiffDD):
    """Yield (value, (a, b), first col, second col, position) in storage order."""
    for p, (a, b) in enumerate(DD.pairs):
        for q, (u, v) in enumerate(DD.column_pairs):
            c0, c1 = DD.values[p, q]
            if c0 < 0:
                continue
            yield int(c0), (a, b), u, v, (p, q, 0)
            yield int(c1), (a, b), v, u, (p, q, 1)


def _realize_8(x1, x2) -> CycleWitness | None:
    """Closed 8-walk whose sum is Z_{x1} - Z_{x2}, if the index pattern allows one."""
    (a, b), u, v = x1
    (c, d), u2, v2 = x2
    if (a, b) == (c, d):
        if u != u2 and v != v2:
            return witness_from_terms([a, b, a, b], [u, v, v2, u2])
        return None
    shared = {a, b} & {c, d}
    if shared:
        r = shared.pop()
        # orient both so the shared row comes first: Z_xy(u, v) = Z_yx(v, u)
        s1, p1, q1 = (b, u, v) if a == r else (a, v, u)
        s2, p2, q2 = (d, u2, v2) if c == r else (c, v2, u2)
        if p1 != p2 and q1 != q2:
            return witness_from_terms([r, s1, r, s2], [q2, q1, p1, p2])
        return None
    for (x, y, p1, q1) in ((a, b, u, v), (b, a, v, u)):
        for (z, w, p2, q2) in ((c, d, u2, v2), (d, c, v2, u2)):
            if p1 == p2:
                return witness_from_terms([x, y, w, z], [p1, q1, p1, q2])
    return None


def _four_row_cycles(m: int):
    for quad in combinations(range(m), 4):
        a, b, c, d = quad
        for order in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            yield order


def _row_walk_hit(D: DiffD, rows: tuple[int, ...], mask: np.ndarray):
    """First label tuple where the row walk's sum vanishes, or None.

    Step t enters row rows[t] from rows[t-1] at label t, contributing
    (b[rows[t]] - b[rows[t-1]])[label].
    """
    k = len(rows)
    vecs = [D.signed(rows[t], rows[t - 1]) for t in range(k)]
    total, present = _outer_sum(vecs, D.N)
    hits = np.argwhere(present & mask & (total == 0))
    if len(hits):
        return tuple(int(x) for x in hits[0])
    return None


def check_8cycles(D: DiffD, DD: DiffDD, N: int | None = None, *, exact: bool = False) -> ConditionViolation | None:
    """Clauses: (a) 2*DD component is 0; (b) repeated DD components; (c) four-row cycles.

    Clause (b) is tested first, so a matrix violating both reports the repetition.

    With ``exact=False`` clause (b) flags any two equal components at distinct
    DD positions. With ``exact=True`` only collisions whose indices form a
    closed 8-walk are flagged, so PASS coincides with the absence of zero
    8-walks.
    """
    _require_single(D)
    N = D.N if N is None else N
    comps = list(_dd_components(DD))
    seen: dict[int, list] = {}
    for val, pair, u, v, pos in comps:
        for prev in seen.get(val, ()):
            walk = _realize_8((prev[0], prev[1], prev[2]), (pair, u, v))
            if walk is None and exact:
                continue
            return ConditionViolation(
                8, "8b.DD-repeat",
                {"value": val,
                 "first": {"row_pair": prev[0], "columns": (prev[1], prev[2]), "position": prev[3]},
                 "second": {"row_pair": pair, "columns": (u, v), "position": pos}},
                walk)
        seen.setdefault(val, []).append((pair, u, v, pos))
    for val, pair, u, v, pos in comps:
        if (2 * val) % N == 0:
            a, b = pair
            return ConditionViolation(8, "8a.2DD-zero",
                                      {"row_pair": pair, "column_pair": (min(u, v), max(u, v)),
                                       "component": pos[2], "value": val},
                                      witness_from_terms([a, b, a, b], [u, v, u, v]))
    if D.n >= 4:
        mask = _distinct_mask(D.n, 4)
        for rows in _four_row_cycles(D.m):
            hit = _row_walk_hit(D, rows, mask)
            if hit is not None:
                return ConditionViolation(8, "8c.four-row",
                                          {"rows": rows, "columns": hit},
                                          witness_from_terms(list(rows), list(hit)))
    return None


# ----------------------------------------------------------------- 10-cycles

def _ten_cycle_row_walks(m: int):
    """Row sequences of closed 5-step row walks, grouped by clause.

    Three or four rows: a triangle x -> y -> z -> x plus a detour x -> d -> x.
    Five rows: every cyclic order of a 5-subset (up to rotation and reversal).
    """
    for tri in combinations(range(m), 3):
        for x, y, z in permutations(tri):
            for d in (y, z):
                yield "10a.three-row", (x, y, z, x, d)
    for x in range(m):
        others = [r for r in range(m) if r != x]
        for y, z in permutations(others, 2):
            for d in others:
                if d not in (y, z):
                    yield "10b.four-row", (x, y, z, x, d)
    for five in combinations(range(m), 5):
        a = five[0]
        for rest in permutations(five[1:]):
            if rest[0] < rest[-1]:
                yield "10c.five-row", (a,) + rest


def check_10cycles(B: ExponentMatrix | None, D: DiffD, DD: DiffDD | None = None) -> ConditionViolation | None:
    """Closed 10-walks grouped by how many matrix rows they visit.

    Three- and four-row walks split into a triangle part (a 6-cycle value
    over three labels) and a detour part (a DD component of the detour row
    pair); a violation is a triangle value that cancels a DD component.
    Five-row walks are sums of five D entries along a row cycle.
    """
    _require_single(D)
    if D.n < 2 or D.m < 3:
        return None
    mask = _cyclic_mask(D.n, 5)
    for clause, rows in _ten_cycle_row_walks(D.m):
        hit = _row_walk_hit(D, rows, mask)
        if hit is not None:
            x, y, z, _, d = rows
            info = {"rows": rows, "columns": hit}
            if clause != "10c.five-row":
                tri = [D.signed(rows[t], rows[t - 1])[hit[t]] for t in (1, 2, 3)]
                info["triangle_value"] = int(sum(int(v) for v in tri) % D.N)
                info["detour_pair"] = (x, d)
                info["detour_columns"] = (hit[0], hit[4])
            return ConditionViolation(10, clause, info, witness_from_terms(list(rows), list(hit)))
    return None


# -------------------------------------------------------------------- girth

@dataclass(frozen=True)
class GirthReport:
    girth: int | None  # None: no cycle at all
    at_least: bool  # only a lower bound is known
    detected_by: str
    violation: ConditionViolation | None = None
    witness: CycleWitness | None = None
    bfs_girth: int | None = None

    @property
    def label(self) -> str:
        if self.girth is None:
            return "acyclic"
        return f">={self.girth}" if self.at_least else str(self.girth)

    def to_json(self) -> dict:
        out = {"girth": self.girth, "at_least": self.at_least, "label": self.label,
               "detected_by": self.detected_by}
        if self.violation is not None:
            out["violation"] = self.violation.to_json()
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


DEFAULT_BUDGET = 3_000_000


def _finish_with_oracle(B: ExponentMatrix, start: int, budget: int | None) -> GirthReport:
    for L in range(start, 13, 2):
        res = has_cycle_fossorier(B, L, budget)
        if res.outcome is Outcome.YES:
            return GirthReport(L, False, f"oracle-{L}", witness=res.witness)
        if res.outcome is Outcome.BUDGET:
            return GirthReport(L, True, "oracle-budget")
    g = girth_bfs(lift(B))
    return GirthReport(g, False, "bfs", bfs_girth=g)


def girth(B: ExponentMatrix, budget: int | None = DEFAULT_BUDGET) -> GirthReport:
    """Girth via the D/DD condition chain, finishing longer lengths with the oracles."""
    if not B.is_single_edge:
        from .girth_me import girth_me
        return girth_me(B, budget)
    D, DD = build_D(B), build_DD(B)
    steps = (
        (4, lambda: check_4cycles(D)),
        (6, lambda: check_6cycles(D)),
        (8, lambda: check_8cycles(D, DD, exact=True)),
        (10, lambda: check_10cycles(B, D, DD)),
    )
    for length, fn in steps:
        v = fn()
        if v is not None:
            return GirthReport(length, False, v.condition_id, violation=v, witness=v.walk)
    return _finish_with_oracle(B, 12, budget)
