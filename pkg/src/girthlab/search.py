"""Minimum lifting degree search, canonical forms and class counting.

The search is a depth-first assignment of shifts in row-major order. Row 0
and column 0 are normalized (pinned to 0 for fully connected single-edge
matrices, required to contain 0 otherwise), and partial matrices are pruned
as soon as a cycle shorter than the target appears among the assigned
entries. For single-edge matrices the cycles through a new cell are found once
per parent node as a set of forbidden shift values.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations, permutations
from math import gcd

from .bounds import bound_girth10, bound_me_girth6, legacy_bounds
from .core import ExponentMatrix
from .diffmat import build_D, build_DD
from .girth_me import check_me_4cycles, check_me_6cycles
from .girth_se import check_4cycles, check_6cycles, check_8cycles, check_10cycles, girth
from .oracle import Outcome, bfs_girth_of, has_cycle_fossorier

EQUIVALENCE_GROUP = "row/column permutations, row/column translations, unit scaling"
ME_EQUIVALENCE_GROUP = "row/column permutations, row/column translations"


# ----------------------------------------------------------- canonical forms

def _units(N: int) -> list[int]:
    return [u for u in range(1, N) if gcd(u, N) == 1] or [1]


def _canonical_fully_connected(B: ExponentMatrix) -> ExponentMatrix:
    m, n, N = B.m, B.n, B.N
    a = [[e[0] for e in row] for row in B.entries]
    best = None
    for r0 in range(m):
        rest = [i for i in range(m) if i != r0]
        for c0 in range(n):
            base = [[(a[i][j] - a[r0][j] - a[i][c0] + a[r0][c0]) % N for j in range(n)] for i in range(m)]
            for u in _units(N):
                scaled = [[(u * x) % N for x in row] for row in base]
                for order in permutations(rest):
                    cols = sorted(tuple(scaled[i][j] for i in (r0,) + order) for j in range(n))
                    flat = tuple(cols[j][i] for i in range(m) for j in range(n))
                    if best is None or flat < best:
                        best = flat
    rows = [best[i * n:(i + 1) * n] for i in range(m)]
    return ExponentMatrix.from_rows(rows, N)


def _spanning_tree(entries) -> tuple[list[int], list[tuple[int, int, bool]]]:
    """BFS forest of the base graph over present entries.

    Returns the root rows and the tree edges (i, j, row_is_new) in BFS order.
    """
    m, n = len(entries), len(entries[0])
    seen_r, seen_c = set(), set()
    roots, edges = [], []
    for root in range(m):
        if root in seen_r:
            continue
        seen_r.add(root)
        roots.append(root)
        queue = [("r", root)]
        while queue:
            kind, x = queue.pop(0)
            if kind == "r":
                for j in range(n):
                    if entries[x][j] is not None and j not in seen_c:
                        seen_c.add(j)
                        edges.append((x, j, False))
                        queue.append(("c", j))
            else:
                for i in range(m):
                    if entries[i][x] is not None and i not in seen_r:
                        seen_r.add(i)
                        edges.append((i, x, True))
                        queue.append(("r", i))
    return roots, edges


def _translation_images(entries, N: int):
    """Every translate of ``entries`` in which each spanning-tree entry contains 0."""
    m, n = len(entries), len(entries[0])
    roots, edges = _spanning_tree(entries)
    r = [0 if i in roots else None for i in range(m)]
    t = [0] * n

    def rec(k):
        if k == len(edges):
            yield tuple(tuple(None if e is None else tuple(sorted((s + r[i] + t[j]) % N for s in e))
                              for j, e in enumerate(row)) for i, row in enumerate(entries))
            return
        i, j, row_is_new = edges[k]
        for s in entries[i][j]:
            if row_is_new:
                r[i] = (-s - t[j]) % N
            else:
                t[j] = (-s - r[i]) % N
            yield from rec(k + 1)

    yield from rec(0)


def _flatten(entries) -> tuple:
    return tuple((-1,) if e is None else e for row in entries for e in row)


def _canonical_general(B: ExponentMatrix, use_units: bool) -> ExponentMatrix:
    N = B.N
    best = None
    best_key = None
    units = _units(N) if use_units else [1]
    for rp in permutations(range(B.m)):
        for cp in permutations(range(B.n)):
            permuted = tuple(tuple(B.entries[i][j] for j in cp) for i in rp)
            for u in units:
                scaled = tuple(tuple(None if e is None else tuple(sorted((u * s) % N for s in e)) for e in row)
                               for row in permuted)
                for img in _translation_images(scaled, N):
                    key = _flatten(img)
                    if best_key is None or key < best_key:
                        best_key, best = key, img
    return ExponentMatrix(best, N)


def canonical_form(B: ExponentMatrix) -> ExponentMatrix:
    """Lexicographically least equivalent matrix with normalized first row and column.

    Single-edge matrices use :data:`EQUIVALENCE_GROUP`; multiple-edge matrices
    use :data:`ME_EQUIVALENCE_GROUP` (no scaling).
    """
    if B.is_single_edge and B.is_fully_connected:
        return _canonical_fully_connected(B)
    return _canonical_general(B, use_units=B.is_single_edge)


def canonical_key(B: ExponentMatrix) -> tuple:
    C = canonical_form(B)
    return (C.N,) + _flatten(C.entries)


# -------------------------------------------------------------------- search

@dataclass(frozen=True)
class SearchConfig:
    m: int
    n: int
    target_girth: int
    weights: tuple[tuple[int, ...], ...] | None = None  # None: fully connected single-edge
    N_lo: int | None = None
    N_hi: int | None = None
    normalize: bool = True
    symmetry: bool = True
    prune: bool = True
    count_classes: bool = True
    threads: int | None = None
    node_budget: int | None = None
    time_limit: float | None = None
    debug: bool = False

    def __post_init__(self):
        if self.target_girth not in (6, 8, 10, 12):
            raise ValueError("target girth must be 6, 8, 10 or 12")
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be positive")
        if self.weights is not None:
            w = tuple(tuple(int(x) for x in row) for row in self.weights)
            if len(w) != self.m or any(len(row) != self.n for row in w) or any(x < 0 for row in w for x in row):
                raise ValueError("weights must be an m x n grid of non-negative integers")
            object.__setattr__(self, "weights", w)

    @property
    def weight_grid(self) -> tuple[tuple[int, ...], ...]:
        return self.weights or tuple((1,) * self.n for _ in range(self.m))

    @property
    def single_edge(self) -> bool:
        return all(x <= 1 for row in self.weight_grid for x in row)

    @property
    def fully_connected_single(self) -> bool:
        return all(x == 1 for row in self.weight_grid for x in row)

    def default_N_lo(self) -> int:
        if not self.single_edge:
            rows = [[tuple(range(w)) if w else None for w in row] for row in self.weight_grid]
            size = max(max(w for row in self.weight_grid for w in row), 2)
            return max(2, bound_me_girth6(ExponentMatrix.from_rows(rows, size + 1)).bound)
        if not self.fully_connected_single or self.m < 2 or self.n < 2:
            return 2
        if self.target_girth == 6:
            return legacy_bounds(self.m, self.n)["girth6"]
        if self.target_girth == 8:
            return legacy_bounds(self.m, self.n)["girth8"]
        return bound_girth10(self.m, self.n).bound

    def key(self) -> str:
        d = asdict(self)
        for k in ("threads", "node_budget", "time_limit", "debug"):
            d.pop(k)
        return hashlib.sha256(json.dumps(d, sort_keys=True).encode()).hexdigest()[:16]


@dataclass
class SearchResult:
    minimal_N: int | None  # None: not found in range
    representatives: list[ExponentMatrix]
    class_count: int
    partial: bool
    stats: dict = field(default_factory=dict)
    group: str = EQUIVALENCE_GROUP

    def to_json(self) -> dict:
        return {"minimal_N": self.minimal_N if self.minimal_N is not None else "not found in range",
                "class_count": self.class_count, "partial": self.partial, "equivalence_group": self.group,
                "representatives": [[list(map(_entry_json, row)) for row in R.entries] for R in self.representatives],
                "stats": self.stats}


def _entry_json(e):
    return None if e is None else (e[0] if len(e) == 1 else list(e))


class _BudgetExhausted(Exception):
    pass


def _cycle_below(B: ExponentMatrix, target: int) -> int | None:
    """Length of some cycle shorter than ``target`` in B, or None."""
    if B.is_single_edge:
        D = build_D(B)
        if check_4cycles(D) is not None:
            return 4
        if target > 6 and B.m >= 3 and check_6cycles(D) is not None:
            return 6
        if target > 8:
            if check_8cycles(D, build_DD(B), exact=True) is not None:
                return 8
        if target > 10 and check_10cycles(B, D) is not None:
            return 10
        return None
    if check_me_4cycles(B) is not None:
        return 4
    if target > 6 and check_me_6cycles(B) is not None:
        return 6
    for L in (8, 10):
        if target > L and has_cycle_fossorier(B, L).outcome is not Outcome.NO:
            return L
    return None


class _DFS:
    def __init__(self, cfg: SearchConfig, N: int, node_budget: int | None, deadline: float | None):
        self.cfg, self.N = cfg, N
        self.m, self.n = cfg.m, cfg.n
        self.node_budget, self.deadline = node_budget, deadline
        self.nodes = 0
        self.prunes: dict[str, int] = {}
        self.survivors: list[ExponentMatrix] = []
        self.grid = [[None] * self.n for _ in range(self.m)]
        self.single = cfg.single_edge
        self.sym = cfg.symmetry and cfg.normalize and cfg.fully_connected_single
        self.units = _units(N)[1:] if self.sym else []
        self.cells = []
        W = cfg.weight_grid
        for i in range(self.m):
            for j in range(self.n):
                if W[i][j] == 0:
                    continue
                anchored = cfg.normalize and (i == 0 or j == 0)
                if anchored and cfg.fully_connected_single:
                    self.grid[i][j] = (0,)
                    continue
                self.cells.append((i, j, self._domain(W[i][j], anchored)))
        self.dom_masks = [sum(1 << e[0] for e in d) for _, _, d in self.cells] if self.single else []
        # D values per row pair for incremental 4-cycle checks (single-edge)
        self.used = {(a, b): set() for a in range(self.m) for b in range(a + 1, self.m)}
        if self.single:
            for j in range(self.n):
                for i in range(self.m):
                    if self.grid[i][j] is not None:
                        self._add_d(i, j)

    def _domain(self, w: int, anchored: bool) -> list[tuple[int, ...]]:
        if anchored:
            return [(0,) + c for c in combinations(range(1, self.N), w - 1)]
        return list(combinations(range(self.N), w))

    def _d_conflict(self, i: int, j: int) -> bool:
        for a in range(self.m):
            if a == i or self.grid[a][j] is None:
                continue
            lo, hi = (a, i) if a < i else (i, a)
            d = (self.grid[lo][j][0] - self.grid[hi][j][0]) % self.N
            if d in self.used[(lo, hi)]:
                return True
        return False

    def _add_d(self, i: int, j: int, sign: int = 1):
        for a in range(self.m):
            if a == i or self.grid[a][j] is None:
                continue
            lo, hi = (a, i) if a < i else (i, a)
            d = (self.grid[lo][j][0] - self.grid[hi][j][0]) % self.N
            if sign > 0:
                self.used[(lo, hi)].add(d)
            else:
                self.used[(lo, hi)].discard(d)

    def _prune(self, reason: str):
        self.prunes[reason] = self.prunes.get(reason, 0) + 1

    def _sym_ok(self, i: int, j: int, e: tuple[int, ...]) -> bool:
        v = e[0]
        if i == 1 and j >= 2 and v <= self.grid[1][j - 1][0]:
            return False
        if i == 1 and v > self.N - (self.n - j):
            return False
        if i == 1 and j == self.n - 1 and self.units:
            # row 1 must be the smallest sorted row over all unit multiples
            row = [self.grid[1][c][0] for c in range(1, j)] + [v]
            key = tuple(row)
            for u in self.units:
                if tuple(sorted(u * x % self.N for x in row)) < key:
                    return False
        if i >= 3 and self._tied(i, j) and self.grid[i - 1][j][0] > v:
            return False
        return True

    def _tied(self, i: int, j: int) -> bool:
        return all(self.grid[i - 1][c] == self.grid[i][c] for c in range(j))

    def run(self, first: tuple | None = None):
        if first is None:
            self._rec(0)
        else:
            self._place(0, first, self._forbidden(0))

    def _forbidden(self, k: int) -> int | None:
        """Bitmask of shifts for cell k that close a short zero-sum walk with assigned entries."""
        if not (self.single and self.cfg.prune):
            return None
        if self.cfg.target_girth <= 10:
            return self._forbidden_paths(k)
        forb = self._forbidden_walks(k)
        return sum(1 << v for v in forb)

    def _forbidden_paths(self, k: int) -> int:
        """Bitset version for target girth <= 10.

        A closed walk of length <= 8 through the new edge e = (i, j) either uses
        e once, closing a path from var j to check i that avoids e, or uses it
        twice in the same direction around two 4-cycles. Path sums are kept as
        N-bit integers and rotated along each edge.
        """
        i, j, _ = self.cells[k]
        N, grid, m, n = self.N, self.grid, self.m, self.n
        full = (1 << N) - 1
        max_path = self.cfg.target_girth - 3
        var_nb = [[r for r in range(m) if grid[r][c] is not None] for c in range(n)]
        chk_nb = [[c for c in range(n) if grid[r][c] is not None] for r in range(m)]

        def rot(x: int, b: int) -> int:
            b %= N
            return ((x << b) | (x >> (N - b))) & full if b else x

        # t tracks minus the path sum: var->check adds the shift, check->var subtracts it
        at_var = {(j, i): 1}
        forb = 0
        three = 0
        for length in range(1, max_path + 1, 2):
            at_chk: dict[tuple[int, int], int] = {}
            for (c, r_prev), x in at_var.items():
                for r in var_nb[c]:
                    if r != r_prev:
                        key = (r, c)
                        at_chk[key] = at_chk.get(key, 0) | rot(x, grid[r][c][0])
            if length >= 3:
                hit = 0
                for (r, c), x in at_chk.items():
                    if r == i:
                        hit |= x
                forb |= hit
                if length == 3:
                    three = hit
            if length == max_path:
                break
            at_var = {}
            for (r, c_prev), x in at_chk.items():
                for c in chk_nb[r]:
                    if c != c_prev:
                        key = (c, r)
                        at_var[key] = at_var.get(key, 0) | rot(x, -grid[r][c][0])
        if max_path >= 7 and three:
            ts = [t for t in range(N) if three >> t & 1]
            half = N // 2
            for a in ts:
                for b in ts:
                    x = (a + b) % N
                    if N % 2:
                        forb |= 1 << (x * (half + 1) % N)
                    elif x % 2 == 0:
                        forb |= 1 << (x // 2) | 1 << (x // 2 + half)
        return forb

    def _forbidden_walks(self, k: int) -> set[int]:
        """Shifts for cell k that close a short zero-sum walk with assigned entries.

        Walks start at check i along the new edge (symbolic shift v) and are
        tailless and backtrackless. A walk contributes c*v + s, and v is
        forbidden when that vanishes mod N.
        """
        i, j, _ = self.cells[k]
        N, grid, m, n = self.N, self.grid, self.m, self.n
        # checks adjacent to each var and vars adjacent to each check, new edge included
        var_nb = [[r for r in range(m) if grid[r][c] is not None or (r, c) == (i, j)] for c in range(n)]
        chk_nb = [[c for c in range(n) if grid[r][c] is not None or (r, c) == (i, j)] for r in range(m)]
        max_len = self.cfg.target_girth - 2
        forb: set[int] = set()

        def add(coef: int, const: int):
            if coef == 1:
                forb.add(-const % N)
                return
            if coef == -1:
                forb.add(const % N)
                return
            coef %= N
            g = gcd(coef, N)
            if (-const) % g:
                return
            if coef == 0:
                forb.update(range(N))
                return
            step = N // g
            v0 = ((-const) // g * pow(coef // g, -1, step)) % step
            forb.update(range(v0, N, step))

        def from_var(c: int, r_prev: int, depth: int, coef: int, const: int):
            # at var c, arrived from check r_prev; depth edges used
            for r in var_nb[c]:
                if r == r_prev:
                    continue
                if (r, c) == (i, j):
                    cf, cs = coef - 1, const
                else:
                    cf, cs = coef, const - grid[r][c][0]
                d = depth + 1
                if r == i and c != j and d >= 4:
                    add(cf, cs)
                if d < max_len:
                    from_check(r, c, d, cf, cs)

        def from_check(r: int, c_prev: int, depth: int, coef: int, const: int):
            for c in chk_nb[r]:
                if c == c_prev:
                    continue
                if (r, c) == (i, j):
                    cf, cs = coef + 1, const
                else:
                    cf, cs = coef, const + grid[r][c][0]
                from_var(c, r, depth + 1, cf, cs)

        from_var(j, i, 1, 1, 0)
        return forb

    def _tick(self):
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise _BudgetExhausted
        if self.deadline is not None and self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise _BudgetExhausted

    def _rec(self, k: int):
        if k == len(self.cells):
            B = ExponentMatrix(tuple(tuple(r) for r in self.grid), self.N)
            if not self.cfg.prune and _cycle_below(B, self.cfg.target_girth) is not None:
                self._prune("final")
                return
            self.survivors.append(B)
            return
        forb = self._forbidden(k)
        i, j, domain = self.cells[k]
        if forb is None or self.cfg.debug:
            for e in domain:
                self._place(k, e, forb)
            return
        # fast path: only allowed values and, in row 1, none below the previous entry
        start = self.grid[1][j - 1][0] + 1 if self.sym and i == 1 and j >= 2 else 0
        dom = self.dom_masks[k] >> start << start
        allowed = ~forb & dom
        self.prunes["walk"] = self.prunes.get("walk", 0) + dom.bit_count() - allowed.bit_count()
        while allowed:
            low = allowed & -allowed
            self._place(k, (low.bit_length() - 1,), checked=True)
            allowed ^= low

    def _place(self, k: int, e: tuple, forb: int | None = None, checked: bool = False):
        i, j, _ = self.cells[k]
        self._tick()
        if self.sym and not self._sym_ok(i, j, e):
            self._prune("symmetry")
            return
        self.grid[i][j] = e
        if checked:
            try:
                self._rec(k + 1)
            finally:
                self.grid[i][j] = None
            return
        try:
            if forb is not None:
                bad = bool(forb >> e[0] & 1)
                if self.cfg.debug:
                    present = ExponentMatrix(tuple(tuple(r) for r in self.grid), self.N)
                    assert bad == (_cycle_below(present, self.cfg.target_girth) is not None)
                if bad:
                    self._prune("walk")
                    return
            elif self.cfg.prune and self._violates(i, j):
                return
            if self.single:
                self._add_d(i, j)
            try:
                self._rec(k + 1)
            finally:
                if self.single:
                    self._add_d(i, j, -1)
        finally:
            self.grid[i][j] = None

    def _violates(self, i: int, j: int) -> bool:
        if self.single:
            if self._d_conflict(i, j):
                self._prune("4")
                if self.cfg.debug:
                    assert check_4cycles(build_D(self._sub_full(i, j))) is not None
                return True
            if self.cfg.debug:
                assert check_4cycles(build_D(self._sub_full(i, j))) is None
            if self.cfg.target_girth <= 6:
                return False
        if self.cfg.target_girth <= 4:
            return False
        # Assigned block: columns < j in full, column j down to row i.
        sub = self._sub_full(i, j)
        L = _cycle_below(sub, self.cfg.target_girth)
        if L is not None:
            self._prune(str(L))
            return True
        return False

    def _sub_full(self, i: int, j: int) -> ExponentMatrix:
        """Rows 0..i and columns 0..j: every entry there is assigned."""
        rows = tuple(tuple(self.grid[r][c] for c in range(j + 1)) for r in range(i + 1))
        return ExponentMatrix(rows, self.N)


def _work_items(cfg: SearchConfig, N: int) -> list:
    dfs = _DFS(cfg, N, None, None)
    if not dfs.cells:
        return [None]
    return list(dfs.cells[0][2])


def _run_item(cfg: SearchConfig, N: int, item, node_budget, deadline):
    dfs = _DFS(cfg, N, node_budget, deadline)
    exhausted = False
    try:
        dfs.run(item)
    except _BudgetExhausted:
        exhausted = True
    return ([[list(map(_entry_json, r)) for r in B.entries] for B in dfs.survivors],
            dfs.nodes, dfs.prunes, exhausted)


def _from_json(rows, N: int) -> ExponentMatrix:
    return ExponentMatrix.from_rows(rows, N)


def _verify(B: ExponentMatrix, target: int) -> bool:
    rep = girth(B)
    g = bfs_girth_of(B)
    chain_ok = rep.girth is None or rep.girth >= target
    return chain_ok and (g is None or g >= target)


def resolve_threads(threads: int | None) -> int:
    if threads:
        return max(1, int(threads))
    env = os.environ.get("GIRTHLAB_THREADS")
    return max(1, int(env)) if env else 1


def _load_state(path, key):
    if path is None or not os.path.exists(path):
        return None
    with open(path, encoding="utf-8") as fh:
        state = json.load(fh)
    if state.get("key") != key:
        raise ValueError(f"resume file {path} belongs to a different configuration")
    return state


def _save_state(path, state):
    if path is None:
        return
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(state, fh)
    os.replace(tmp, path)


def search_min_N(cfg: SearchConfig, resume: str | os.PathLike | None = None) -> SearchResult:
    """Smallest N in range admitting a matrix of girth >= target, with its classes.

    With ``resume`` set, progress is written to that JSON file after every work
    item and picked up again on the next call with the same configuration.
    """
    N_lo = cfg.N_lo if cfg.N_lo is not None else cfg.default_N_lo()
    N_hi = cfg.N_hi if cfg.N_hi is not None else N_lo + 64
    if N_lo > N_hi:
        raise ValueError(f"empty N range [{N_lo}, {N_hi}]")
    key = cfg.key()
    state = _load_state(resume, key) or {"key": key, "N": N_lo, "done": [], "survivors": [],
                                         "nodes": 0, "prunes": {}, "finished": False}
    t0 = time.monotonic()
    deadline = None if cfg.time_limit is None else t0 + cfg.time_limit
    threads = resolve_threads(cfg.threads)
    group = EQUIVALENCE_GROUP if cfg.single_edge else ME_EQUIVALENCE_GROUP

    def result(N_found, partial):
        N_state = state["N"]
        reps = {}
        for rows in state["survivors"]:
            B = _from_json(rows, N_state)
            reps.setdefault(canonical_key(B), canonical_form(B))
        ordered = [reps[k] for k in sorted(reps)]
        stats = {"nodes": state["nodes"], "prunes": state["prunes"], "seconds": time.monotonic() - t0,
                 "survivors": len(state["survivors"]), "N_range": [N_lo, N_hi], "threads": threads,
                 "last_N": N_state}
        return SearchResult(N_found, ordered, len(ordered), partial, stats, group)

    if state.get("finished"):
        return result(state.get("minimal_N"), False)

    N = state["N"]
    while N <= N_hi:
        items = _work_items(cfg, N)
        todo = [k for k in range(len(items)) if k not in set(state["done"])]
        exhausted = False

        def absorb(k, out):
            nonlocal exhausted
            survivors, nodes, prunes, ex = out
            state["nodes"] += nodes
            for r, c in prunes.items():
                state["prunes"][r] = state["prunes"].get(r, 0) + c
            if ex:
                exhausted = True
                return
            state["survivors"] += survivors
            state["done"].append(k)
            _save_state(resume, state)

        def remaining():
            if cfg.node_budget is None:
                return None
            return max(0, cfg.node_budget - state["nodes"])

        if threads > 1 and len(todo) > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                futures = [(k, pool.submit(_run_item, cfg, N, items[k], remaining(), deadline)) for k in todo]
                for k, fut in futures:
                    absorb(k, fut.result())
        else:
            for k in todo:
                absorb(k, _run_item(cfg, N, items[k], remaining(), deadline))
                if exhausted:
                    break
                if not cfg.count_classes and state["survivors"]:
                    break
        if exhausted or (cfg.node_budget is not None and state["nodes"] >= cfg.node_budget and
                         len(state["done"]) < len(items)):
            return result(N if state["survivors"] else None, True)
        state["survivors"] = [rows for rows in state["survivors"]
                              if _verify(_from_json(rows, N), cfg.target_girth)]
        if state["survivors"]:
            state["finished"] = True
            state["minimal_N"] = N
            _save_state(resume, state)
            return result(N, not cfg.count_classes and len(state["done"]) < len(items))
        N += 1
        state.update(N=N, done=[], survivors=[])
        _save_state(resume, state)
    state["finished"] = True
    state["minimal_N"] = None
    state["N"] = N_hi
    _save_state(resume, state)
    return result(None, False)


def ni_count(m: int, n: int, target_girth: int, N: int, **kw) -> SearchResult:
    """Number of classes of fully connected single-edge matrices of girth >= target at N."""
    return search_min_N(SearchConfig(m, n, target_girth, N_lo=N, N_hi=N, **kw))
