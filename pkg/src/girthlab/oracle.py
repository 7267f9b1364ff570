"""Independent ground truth for cycle questions.

Two unrelated methods decide cycles:

* ``has_cycle_fossorier`` enumerates tailless, backtrackless closed walks in
  the base (multi)graph and tests whether their alternating shift sum vanishes
  mod N. It meets in the middle: both halves of a walk of length 2k are
  half-walks of length k from the same check node.
* ``girth_bfs`` runs breadth-first search on the lifted Tanner graph.

The module also carries closed-form equation and computation counts.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .core import ExponentMatrix, LiftedGraph, lift

SUPPORTED_LENGTHS = (4, 6, 8, 10, 12)


@dataclass(frozen=True)
class CycleWitness:
    """A closed walk in the base graph with zero shift sum.

    ``path`` lists base edges as (row, col, shift index). It starts at a
    variable node: path[0] goes variable -> check, path[1] check -> variable,
    and so on, closing at the variable of path[0]. Edges entering a check count
    +shift, edges leaving a check count -shift.
    """

    length: int
    path: tuple[tuple[int, int, int], ...]

    def terms(self) -> list[tuple[int, int, int, int, int]]:
        """Per visited check: (m_i, n_i, r_i, n_{i+1}, r'_i)."""
        out = []
        for t in range(0, self.length, 2):
            (mi, ni, ri), (_, nj, rj) = self.path[t], self.path[t + 1]
            out.append((mi, ni, ri, nj, rj))
        return out

    def shift_sum(self, B: ExponentMatrix) -> int:
        total = 0
        for t, (i, j, r) in enumerate(self.path):
            b = B.entries[i][j][r]
            total += b if t % 2 == 0 else -b
        return total

    def is_valid_walk(self) -> bool:
        """Closed, alternating and free of immediate edge reversals."""
        L = self.length
        if len(self.path) != L or L % 2:
            return False
        for t in range(L):
            a, b = self.path[t], self.path[(t + 1) % L]
            if a == b:
                return False
            if t % 2 == 0 and a[0] != b[0]:  # both touch the same check
                return False
            if t % 2 == 1 and a[1] != b[1]:  # both touch the same variable
                return False
        return True

    def replay(self, B: ExponentMatrix, start: int = 0) -> list[tuple[str, int]]:
        """Walk the lifted graph from variable (n_0, start); returns visited nodes.

        Nodes are ("v", j*N + t) or ("c", i*N + s). The walk closes iff the
        shift sum is 0 mod N.
        """
        N = B.N
        j0 = self.path[0][1]
        t = start % N
        nodes = [("v", j0 * N + t)]
        for step, (i, j, r) in enumerate(self.path):
            b = B.entries[i][j][r]
            if step % 2 == 0:
                t = (t - b) % N
                nodes.append(("c", i * N + t))
            else:
                t = (t + b) % N
                nodes.append(("v", j * N + t))
        return nodes

    def to_json(self) -> dict:
        return {"length": self.length, "path": [list(p) for p in self.path]}


def witness_from_terms(rows: Sequence[int], cols: Sequence[int],
                       r_in: Sequence[int] | None = None,
                       r_out: Sequence[int] | None = None) -> CycleWitness:
    """Build a witness from index sequences m_i, n_i and shift indices r_i, r'_i.

    Check m_i is entered from variable n_i using shift r_i and left towards
    variable n_{i+1} using shift r'_i (indices are cyclic).
    """
    k = len(rows)
    r_in = r_in or [0] * k
    r_out = r_out or [0] * k
    path = []
    for i in range(k):
        path.append((rows[i], cols[i], r_in[i]))
        path.append((rows[i], cols[(i + 1) % k], r_out[i]))
    return CycleWitness(2 * k, tuple(path))


class Outcome(enum.Enum):
    NO = "no"
    YES = "yes"
    BUDGET = "budget"


@dataclass(frozen=True)
class CycleSearch:
    outcome: Outcome
    length: int
    witness: CycleWitness | None = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.outcome is Outcome.YES


class _Budget(Exception):
    pass


def _base_edges(B: ExponentMatrix):
    rows, cols, ridx, shifts = [], [], [], []
    by_check = [[] for _ in range(B.m)]
    by_var = [[] for _ in range(B.n)]
    for i, row in enumerate(B.entries):
        for j, e in enumerate(row):
            for r, b in enumerate(e or ()):
                eid = len(rows)
                rows.append(i)
                cols.append(j)
                ridx.append(r)
                shifts.append(b)
                by_check[i].append(eid)
                by_var[j].append(eid)
    return rows, cols, ridx, shifts, by_check, by_var


def _run(B: ExponentMatrix, length: int, values: list[tuple[int, ...]], modulus: int | None,
         budget: int | None) -> CycleSearch:
    rows, cols, ridx, _, by_check, by_var = _base_edges(B)
    if modulus is not None:
        values = [tuple(x % modulus for x in v) for v in values]
    try:
        found, nodes = _search_mod(B, length, rows, cols, values, by_check, by_var, modulus, budget)
    except _Budget as exc:
        return CycleSearch(Outcome.BUDGET, length, None, exc.args[0])
    if found is None:
        return CycleSearch(Outcome.NO, length, None, nodes)
    # found is an edge-id walk starting at a check; rotate to start at a variable
    walk = (found[-1],) + found[:-1]
    path = tuple((rows[e], cols[e], ridx[e]) for e in walk)
    return CycleSearch(Outcome.YES, length, CycleWitness(length, path), nodes)


def _search_mod(B, length, rows, cols, values, by_check, by_var, modulus, budget):
    if length % 2 or length < 4:
        raise ValueError(f"unsupported cycle length {length}")
    k = length // 2
    dim = len(values[0]) if values else 1
    zero = (0,) * dim
    nodes = 0

    def add(a, b, sign):
        if modulus is None:
            return tuple(x + sign * y for x, y in zip(a, b))
        return tuple((x + sign * y) % modulus for x, y in zip(a, b))

    for c in range(B.m):
        if not by_check[c]:
            continue
        groups: dict = {}
        stack = [(c, True, zero, ())]
        while stack:
            vert, at_check, sigma, path = stack.pop()
            if len(path) == k:
                bucket = groups.setdefault((vert, sigma), {})
                first, last = path[0], path[-1]
                if (first, last) in bucket:
                    continue
                for (f2, l2), p2 in bucket.items():
                    if f2 != first and l2 != last:
                        return path + tuple(reversed(p2)), nodes
                bucket[(first, last)] = path
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise _Budget(nodes)
            prev = path[-1] if path else -1
            if at_check:
                for e in reversed(by_check[vert]):
                    if e != prev:
                        stack.append((cols[e], False, add(sigma, values[e], -1), path + (e,)))
            else:
                for e in reversed(by_var[vert]):
                    if e != prev and rows[e] >= c:
                        stack.append((rows[e], True, add(sigma, values[e], 1), path + (e,)))
    return None, nodes


def has_cycle_fossorier(B: ExponentMatrix, length: int, budget: int | None = None) -> CycleSearch:
    """Is there a closed backtrackless walk of exactly ``length`` edges with zero shift sum mod N?"""
    if length not in SUPPORTED_LENGTHS:
        raise ValueError(f"unsupported cycle length {length}; choose from {SUPPORTED_LENGTHS}")
    _, _, _, shifts, _, _ = _base_edges(B)
    return _run(B, length, [(s,) for s in shifts], B.N, budget)


def fossorier_girth(B: ExponentMatrix, max_length: int = 12, budget: int | None = None) -> tuple[int | None, CycleSearch | None]:
    """Smallest length with a zero walk, or None if none up to ``max_length``.

    Returns the deciding search too; its outcome is BUDGET if a level ran out.
    """
    last = None
    for L in range(4, max_length + 1, 2):
        res = has_cycle_fossorier(B, L, budget)
        if res.outcome is Outcome.YES:
            return L, res
        if res.outcome is Outcome.BUDGET:
            return None, res
        last = res
    return None, last


def _big_primes(count: int, start: int) -> list[int]:
    out = []
    p = start | 1
    while len(out) < count:
        if all(p % d for d in range(3, int(p ** 0.5) + 1, 2)):
            out.append(p)
        p += 2
    return out


def symbolic_zero_walk(B: ExponentMatrix, length: int, budget: int | None = None) -> CycleSearch:
    """Search for a walk whose shift sum cancels formally, for every N.

    Each shift symbol gets two unrelated large primes; a walk qualifies when
    both integer sums vanish and the signed symbol multiset is empty.
    """
    _, _, _, shifts, _, _ = _base_edges(B)
    p1 = _big_primes(len(shifts), 1_000_003)
    p2 = _big_primes(len(shifts), 7_000_003)
    res = _run(B, length, list(zip(p1, p2)), None, budget)
    if res.found and not formally_zero(res.witness):
        return CycleSearch(Outcome.NO, length, None, res.nodes)
    return res


def formally_zero(w: CycleWitness) -> bool:
    counts: dict = {}
    for t, e in enumerate(w.path):
        counts[e] = counts.get(e, 0) + (1 if t % 2 == 0 else -1)
    return all(v == 0 for v in counts.values())


def girth_bfs(G: LiftedGraph, all_roots: bool = False) -> int | None:
    """Exact girth of the lifted graph, or None when it has no cycle.

    By default BFS starts only from check nodes (i, 0): cyclic shifts of the
    lift map every check node of block row i onto (i, 0), and every cycle
    passes through a check node. ``all_roots`` starts from every vertex.
    """
    indptr, nbr, eid = G.adjacency()
    indptr, nbr, eid = indptr.tolist(), nbr.tolist(), eid.tolist()
    V = G.num_vertices
    roots = range(V) if all_roots else [i * G.N for i in range(G.m)]
    best = None
    dist = [-1] * V
    pedge = [-1] * V
    for root in roots:
        touched = [root]
        dist[root] = 0
        pedge[root] = -1
        q = deque([root])
        while q:
            u = q.popleft()
            du = dist[u]
            if best is not None and 2 * du + 1 >= best:
                break
            pe = pedge[u]
            for idx in range(indptr[u], indptr[u + 1]):
                e = eid[idx]
                if e == pe:
                    continue
                w = nbr[idx]
                if dist[w] < 0:
                    dist[w] = du + 1
                    pedge[w] = e
                    touched.append(w)
                    q.append(w)
                else:
                    cand = du + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
        for v in touched:
            dist[v] = -1
    return best


def bfs_girth_of(B: ExponentMatrix, all_roots: bool = False) -> int | None:
    return girth_bfs(lift(B), all_roots=all_roots)


# ---------------------------------------------------------------- counting

# Per-shape equation counts: coefficient of C(m, rows) * C(n, cols).
EIGHT_CYCLE_SHAPES = {
    (2, 2): 1, (2, 3): 3, (2, 4): 6,
    (3, 2): 3, (3, 3): 18, (3, 4): 6,
    (4, 2): 6, (4, 3): 12, (4, 4): 8,
}
TEN_CYCLE_SHAPES = {
    (3, 3): 54, (3, 4): 216, (3, 5): 180,
    (4, 3): 72, (4, 4): 864, (4, 5): 960,
    (5, 3): 540, (5, 4): 720, (5, 5): 10,
}
# Closed forms in n for fixed m: coefficients of C(n,2), C(n,3), C(n,4).
EIGHT_CYCLE_CLOSED_FORMS = {
    3: (6, 27, 24),
    4: (24, 102, 68),
    5: (70, 270, 160),
    6: (165, 585, 330),
}


@dataclass(frozen=True)
class EquationCount:
    girth_target: int
    m: int
    n: int
    shapes: dict[str, int]
    total: int
    closed_form_total: int | None = None
    fossorier_computations: int | None = None
    dd_computations_odd: int | None = None
    dd_computations_even: int | None = None

    def to_json(self) -> dict:
        return {k: getattr(self, k) for k in (
            "girth_target", "m", "n", "shapes", "total", "closed_form_total",
            "fossorier_computations", "dd_computations_odd", "dd_computations_even")}


def fossorier_computations(m: int, n: int) -> int:
    """Arithmetic operations to test all 8-cycle equations directly."""
    c2 = comb(m - 2, 2)
    # 2/9 and 2/3 multiply C(m-2,2); scale by 9 to stay in integers
    inner9 = (comb(n - 2, 2) * (2 * c2 + 9 * (3 * m - 4))
              + comb(n - 2, 1) * (6 * c2 + 9 * (2 * m - 3)) + 9 * m)
    return comb(n, 2) * comb(m, 2) * inner9


def dd_computations(m: int, n: int, parity: str) -> int:
    """Operations for the difference-matrix 8-cycle test; ``parity`` of N."""
    cells = comb(n, 2) * comb(m, 2)
    lead = 3 if parity == "odd" else 5
    return n * comb(m, 2) + lead * cells + comb(cells, 2) + 5 * comb(n, 4) * comb(m, 4)


def count_fossorier_equations(girth_target: int, m: int, n: int) -> EquationCount:
    if girth_target not in (8, 10):
        raise ValueError("girth_target must be 8 or 10")
    if m < 2 or n < 2:
        raise ValueError("need m >= 2 and n >= 2")
    table = EIGHT_CYCLE_SHAPES if girth_target == 8 else TEN_CYCLE_SHAPES
    shapes = {f"{a}x{b}": coef * comb(m, a) * comb(n, b) for (a, b), coef in table.items()}
    total = sum(shapes.values())
    if girth_target == 10:
        return EquationCount(10, m, n, shapes, total)
    closed = None
    if m in EIGHT_CYCLE_CLOSED_FORMS:
        a, b, c = EIGHT_CYCLE_CLOSED_FORMS[m]
        closed = a * comb(n, 2) + b * comb(n, 3) + c * comb(n, 4)
    return EquationCount(8, m, n, shapes, total, closed,
                         fossorier_computations(m, n),
                         dd_computations(m, n, "odd"),
                         dd_computations(m, n, "even"))
