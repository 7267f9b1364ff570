"""Girth conditions for multiple-edge exponent matrices.

Walks are described by rows m_t, columns n_t and shift indices: check m_t is
entered from variable n_t with shift index r_t and left towards n_{t+1} with
shift index r'_t. A walk is backtrackless when r_t != r'_t wherever
n_t == n_{t+1}, and r'_{t-1} != r_t wherever m_{t-1} == m_t.

A "D component" of entry (i, j) is s[r] - s[r'] for shift indices r != r';
a "DD component" of row pair (a, b) at column j is B[a][j][r] - B[b][j][s].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from .core import ExponentMatrix
from .diffmat import DiffD, DiffDD, build_D, build_DD, pair_list
from .girth_se import ConditionViolation, GirthReport, DEFAULT_BUDGET
from .oracle import CycleWitness, formally_zero, symbolic_zero_walk, witness_from_terms


def _components(B: ExponentMatrix, i: int, j: int):
    """(value, r, r') for every ordered pair of distinct shift indices of entry (i, j)."""
    e = B.entries[i][j]
    if e is None:
        return []
    N = B.N
    return [((e[r] - e[r2]) % N, r, r2) for r in range(len(e)) for r2 in range(len(e)) if r != r2]


def walk_is_valid(B: ExponentMatrix, rows, cols, r_in, r_out) -> bool:
    k = len(rows)
    for t in range(k):
        if B.entries[rows[t]][cols[t]] is None or B.entries[rows[t]][cols[(t + 1) % k]] is None:
            return False
        if cols[t] == cols[(t + 1) % k] and r_in[t] == r_out[t]:
            return False
        if rows[t - 1] == rows[t] and r_out[t - 1] == r_in[t]:
            return False
    return True


def walk_sum(B: ExponentMatrix, rows, cols, r_in, r_out) -> int:
    k = len(rows)
    return sum(B.entries[rows[t]][cols[t]][r_in[t]] - B.entries[rows[t]][cols[(t + 1) % k]][r_out[t]]
               for t in range(k))


def _violation(B, length, cid, info, rows, cols, r_in, r_out):
    return ConditionViolation(length, cid, info, witness_from_terms(rows, cols, r_in, r_out))


# ------------------------------------------------------------------ 4-cycles

def check_me_4cycles(B: ExponentMatrix, D: DiffD | None = None, DD: DiffDD | None = None) -> ConditionViolation | None:
    """Zero 2*D component, repeated D components in a row or column, repeated DD components in a row."""
    N = B.N
    comps = {(i, j): _components(B, i, j) for i in range(B.m) for j in range(B.n)}
    for (i, j), cs in comps.items():
        for val, r, r2 in cs:
            if (2 * val) % N == 0:
                return _violation(B, 4, "me4.2D-zero", {"entry": (i, j), "shifts": (r, r2), "value": val},
                                  [i, i], [j, j], [r, r], [r2, r2])
    for i in range(B.m):
        seen: dict[int, tuple] = {}
        for j in range(B.n):
            for val, r, r2 in comps[(i, j)]:
                if val in seen:
                    j1, p, q = seen[val]
                    return _violation(B, 4, "me4.D-row-repeat",
                                      {"row": i, "first": (j1, p, q), "second": (j, r, r2), "value": val},
                                      [i, i], [j1, j], [p, r2], [r, q])
                seen[val] = (j, r, r2)
    for j in range(B.n):
        seen = {}
        for i in range(B.m):
            for val, r, r2 in comps[(i, j)]:
                if val in seen and seen[val][0] != i:
                    i1, p, q = seen[val]
                    return _violation(B, 4, "me4.D-col-repeat",
                                      {"column": j, "first": (i1, p, q), "second": (i, r, r2), "value": val},
                                      [i1, i], [j, j], [p, r2], [q, r])
                seen.setdefault(val, (i, r, r2))
    for a, b in pair_list(B.m):
        seen = {}
        for j in range(B.n):
            ea, eb = B.entries[a][j], B.entries[b][j]
            if ea is None or eb is None:
                continue
            for r, s_a in enumerate(ea):
                for s, s_b in enumerate(eb):
                    val = (s_a - s_b) % N
                    if val in seen:
                        j1, r1, s1 = seen[val]
                        return _violation(B, 4, "me4.DD-row-repeat",
                                          {"row_pair": (a, b), "first": (j1, r1, s1), "second": (j, r, s),
                                           "value": val},
                                          [a, b], [j1, j], [r1, s], [r, s1])
                    seen[val] = (j, r, s)
    return None


# ------------------------------------------------------------------ 6-cycles

def _row_component_index(B: ExponentMatrix, i: int) -> dict[int, list[tuple[int, int, int]]]:
    idx: dict[int, list] = {}
    for j in range(B.n):
        for val, r, r2 in _components(B, i, j):
            idx.setdefault(val, []).append((j, r, r2))
    return idx


def _shape_uncovered(rows, cols) -> bool:
    """Six-walk shapes that the set-based clauses do not decide on their own."""
    moves = [t for t in range(3) if rows[t - 1] != rows[t]]
    if not moves:
        return len(set(cols)) < 3
    if len(moves) == 2:
        return cols[moves[0]] == cols[moves[1]]
    return True


def _direct_six(B: ExponentMatrix):
    """Enumerate the uncovered six-walk shapes with every shift choice."""
    N = B.N
    for rows in product(range(B.m), repeat=3):
        for cols in product(range(B.n), repeat=3):
            if not _shape_uncovered(rows, cols):
                continue
            ins = [B.entries[rows[t]][cols[t]] for t in range(3)]
            outs = [B.entries[rows[t]][cols[(t + 1) % 3]] for t in range(3)]
            if any(e is None for e in ins + outs):
                continue
            for r_in in product(*[range(len(e)) for e in ins]):
                for r_out in product(*[range(len(e)) for e in outs]):
                    if not walk_is_valid(B, rows, cols, r_in, r_out):
                        continue
                    if walk_sum(B, rows, cols, r_in, r_out) % N == 0:
                        return list(rows), list(cols), list(r_in), list(r_out)
    return None


def check_me_6cycles(B: ExponentMatrix, D: DiffD | None = None, DD: DiffDD | None = None) -> ConditionViolation | None:
    N = B.N
    # (1) 3*D component vanishes: three laps inside one entry
    for i in range(B.m):
        for j in range(B.n):
            for val, r, r2 in _components(B, i, j):
                if (3 * val) % N == 0:
                    return _violation(B, 6, "me6.3D-zero", {"entry": (i, j), "shifts": (r, r2), "value": val},
                                      [i, i, i], [j, j, j], [r, r, r], [r2, r2, r2])
    # (2) row version: 2d = d' in one row
    for i in range(B.m):
        idx = _row_component_index(B, i)
        for j in range(B.n):
            for val, p, q in _components(B, i, j):
                for (y, p2, q2) in idx.get((2 * val) % N, ()):
                    rows, cols = [i, i, i], [j, j, y]
                    r_in, r_out = [p, p, q2], [q, p2, q]
                    if walk_is_valid(B, rows, cols, r_in, r_out):
                        return _violation(B, 6, "me6.D-2D-row",
                                          {"row": i, "doubled": (j, p, q), "single": (y, p2, q2)},
                                          rows, cols, r_in, r_out)
    # (2) column version: 2d = d' in one column, different rows
    for j in range(B.n):
        for i1 in range(B.m):
            for val, p, q in _components(B, i1, j):
                for i2 in range(B.m):
                    if i2 == i1:
                        continue
                    for val2, p2, q2 in _components(B, i2, j):
                        if val2 == (2 * val) % N:
                            rows, cols = [i1, i1, i2], [j, j, j]
                            r_in, r_out = [p, p, q2], [q, q, p2]
                            return _violation(B, 6, "me6.D-2D-col",
                                              {"column": j, "doubled": (i1, p, q), "single": (i2, p2, q2)},
                                              rows, cols, r_in, r_out)
    # (3) d + d' + d'' = 0 over three distinct columns of one row
    for i in range(B.m):
        per_col = [(j, _components(B, i, j)) for j in range(B.n)]
        per_col = [(j, cs) for j, cs in per_col if cs]
        for (x, cx), (y, cy), (z, cz) in combinations(per_col, 3):
            vx = np.array([c[0] for c in cx])
            vy = np.array([c[0] for c in cy])
            vz = np.array([c[0] for c in cz])
            tot = (vx[:, None, None] + vy[None, :, None] + vz[None, None, :]) % N
            hits = np.argwhere(tot == 0)
            if len(hits):
                a, b, c = (int(h) for h in hits[0])
                (_, p, q), (_, p1, q1), (_, p2, q2) = cx[a], cy[b], cz[c]
                return _violation(B, 6, "me6.D-triple",
                                  {"row": i, "columns": (x, y, z), "components": (cx[a], cy[b], cz[c])},
                                  [i, i, i], [x, y, z], [p, p1, p2], [q1, q2, q])
    # (4) differences of DD components across two columns meet a D row
    for a, b in pair_list(B.m):
        idx_a, idx_b = _row_component_index(B, a), _row_component_index(B, b)
        cells = {}
        for j in range(B.n):
            ea, eb = B.entries[a][j], B.entries[b][j]
            if ea is not None and eb is not None:
                cells[j] = [((sa - sb) % N, r, s) for r, sa in enumerate(ea) for s, sb in enumerate(eb)]
        for j in cells:
            for j2 in cells:
                if j == j2:
                    continue
                for e1, r, s in cells[j]:
                    for e2, r2, s2 in cells[j2]:
                        diff = (e1 - e2) % N
                        # stay in row a at column x
                        for (x, p, q) in idx_a.get(diff, ()):
                            rows, cols = [a, a, b], [j, x, j2]
                            r_in, r_out = [r, q, s2], [p, r2, s]
                            if walk_is_valid(B, rows, cols, r_in, r_out):
                                return _violation(B, 6, "me6.DD-diff",
                                                  {"row_pair": (a, b), "columns": (j, j2), "stay": (a, x, p, q)},
                                                  rows, cols, r_in, r_out)
                        # stay in row b at column x
                        for (x, p, q) in idx_b.get(diff, ()):
                            rows, cols = [a, b, b], [j, j2, x]
                            r_in, r_out = [r, s2, q], [r2, p, s]
                            if walk_is_valid(B, rows, cols, r_in, r_out):
                                return _violation(B, 6, "me6.DD-diff",
                                                  {"row_pair": (a, b), "columns": (j, j2), "stay": (b, x, p, q)},
                                                  rows, cols, r_in, r_out)
    # (5) remaining shapes by direct evaluation
    hit = _direct_six(B)
    if hit is not None:
        rows, cols, r_in, r_out = hit
        return _violation(B, 6, "me6.direct", {"rows": rows, "columns": cols, "r": r_in, "r_prime": r_out},
                          rows, cols, r_in, r_out)
    return None


# ------------------------------------------------------------ inevitable cycles

@dataclass(frozen=True)
class InevitableCycleReport:
    present: bool
    length: int | None = None
    pattern: str | None = None
    rows: tuple[int, ...] = ()
    cols: tuple[int, ...] = ()
    witness: CycleWitness | None = None
    checked_N: tuple[int, ...] = field(default=())

    def to_json(self) -> dict:
        out = {"present": self.present, "length": self.length, "pattern": self.pattern,
               "rows": list(self.rows), "cols": list(self.cols), "checked_N": list(self.checked_N)}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def _submatrix(B: ExponentMatrix, rows, cols) -> ExponentMatrix:
    return ExponentMatrix(tuple(tuple(B.entries[i][j] for j in cols) for i in rows), B.N)


def _lift_witness(w: CycleWitness, rows, cols) -> CycleWitness:
    return CycleWitness(w.length, tuple((rows[i], cols[j], r) for i, j, r in w.path))


def _pattern_hits(B: ExponentMatrix):
    W = B.weights()
    for i, j in zip(*np.nonzero(W >= 3)):
        yield 6, "weight>=3", (int(i),), (int(j),)
        break
    for i in range(B.m):
        two = [j for j in range(B.n) if W[i, j] == 2]
        if len(two) >= 2:
            yield 8, "[2 2]", (i,), (two[0], two[1])
            break
    for a, b in combinations(range(B.m), 2):
        for j, k in combinations(range(B.n), 2):
            block = sorted([W[a, j], W[a, k], W[b, j], W[b, k]])
            if block == [1, 1, 1, 2]:
                yield 10, "[[2,1],[1,1]]", (a, b), (j, k)
                return


def detect_inevitable_cycles(B: ExponentMatrix, max_length: int = 10,
                             budget: int | None = 2_000_000) -> InevitableCycleReport:
    """Cycles present at every lifting degree.

    Structural patterns are tried first; a symbolic scan then looks for a
    shorter walk whose shift symbols cancel formally.
    """
    found = None
    for length, name, rows, cols in _pattern_hits(B):
        sub = _submatrix(B, rows, cols)
        res = symbolic_zero_walk(sub, length)
        if res.found:
            found = (length, name, rows, cols, _lift_witness(res.witness, rows, cols))
            break
    limit = found[0] - 2 if found else max_length
    for L in range(4, limit + 1, 2):
        res = symbolic_zero_walk(B, L, budget)
        if res.found:
            found = (L, "symbolic", (), (), res.witness)
            break
    if found is None:
        return InevitableCycleReport(False)
    length, name, rows, cols, w = found
    if not rows:
        rows = tuple(sorted({p[0] for p in w.path}))
        cols = tuple(sorted({p[1] for p in w.path}))
    checks = (B.N, B.N + 1, 2 * B.N + 3)
    assert formally_zero(w) and all(w.shift_sum(B) % n == 0 for n in checks)
    return InevitableCycleReport(True, length, name, rows, cols, w, checks)


# -------------------------------------------------------------------- girth

def girth_me(B: ExponentMatrix, budget: int | None = DEFAULT_BUDGET) -> GirthReport:
    from .girth_se import _finish_with_oracle
    D, DD = build_D(B, "multi"), build_DD(B, "multi")
    for length, fn in ((4, check_me_4cycles), (6, check_me_6cycles)):
        v = fn(B, D, DD)
        if v is not None:
            return GirthReport(length, False, v.condition_id, violation=v, witness=v.walk)
    return _finish_with_oracle(B, 8, budget)
