"""Built-in corpus of reference exponent matrices and their expected properties.

Each ``corpus/*.txt`` file is a matrix in the text format, preceded by
``# key: value`` metadata lines (id, group, girth, dmin, bound-*, D, DD).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from importlib import resources

from .bounds import bound_girth10, bound_girth12, bound_me_girth6
from .core import ExponentMatrix, parse_matrix
from .diffmat import build_D, build_DD
from .girth_se import girth
from .mindist import min_distance
from .oracle import bfs_girth_of


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    group: str
    matrix: ExponentMatrix
    expected: dict = field(default_factory=dict)


def _parse_meta(text: str) -> dict:
    meta = {}
    for line in text.splitlines():
        line = line.strip()
        if not line.startswith("#") or ":" not in line:
            continue
        key, value = line[1:].split(":", 1)
        meta[key.strip()] = value.strip()
    return meta


def load_entry(text: str) -> CorpusEntry:
    meta = _parse_meta(text)
    B = parse_matrix(text)
    expected = {k: v for k, v in meta.items() if k not in ("id", "group")}
    for k in ("girth", "dmin", "bound-girth10", "bound-girth12", "bound-me-girth6"):
        if k in expected:
            expected[k] = int(expected[k])
    return CorpusEntry(meta["id"], meta.get("group", "misc"), B, expected)


def load_corpus() -> list[CorpusEntry]:
    root = resources.files("girthlab") / "corpus"
    files = sorted(p for p in root.iterdir() if p.name.endswith(".txt"))
    return [load_entry(p.read_text(encoding="utf-8")) for p in files]


def groups() -> list[str]:
    return sorted({e.group for e in load_corpus()})


def select(scope: str = "all") -> list[CorpusEntry]:
    entries = load_corpus()
    if scope == "all":
        return entries
    chosen = [e for e in entries if scope in (e.group, e.id)]
    if not chosen:
        raise KeyError(f"unknown corpus scope {scope!r}; groups: {', '.join(groups())}")
    return chosen


def _rows_meta(value: str, pairs: bool) -> list[list]:
    rows = []
    for row in value.split("|"):
        cells = row.split()
        if pairs:
            rows.append([tuple(int(x) for x in c.strip("()").split(",")) for c in cells])
        else:
            rows.append([int(c) for c in cells])
    return rows


@dataclass
class Check:
    entry: str
    name: str
    expected: object
    got: object
    passed: bool
    hard: bool = True
    seconds: float = 0.0
    note: str = ""

    def to_json(self) -> dict:
        return {"entry": self.entry, "check": self.name, "expected": self.expected, "got": self.got,
                "pass": self.passed, "hard": self.hard, "seconds": round(self.seconds, 4), "note": self.note}


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def verify_entry(e: CorpusEntry, dmin: bool = True, dmin_time: float = 30.0) -> list[Check]:
    B, exp = e.matrix, e.expected
    out = []
    if "girth" in exp:
        rep, dt = _timed(lambda: girth(B))
        out.append(Check(e.id, "girth-conditions", exp["girth"], rep.label, rep.girth == exp["girth"]
                         and not rep.at_least, seconds=dt))
        g, dt = _timed(lambda: bfs_girth_of(B))
        out.append(Check(e.id, "girth-bfs", exp["girth"], g, g == exp["girth"], seconds=dt))
    if "bound-girth10" in exp:
        rep = bound_girth10(B.m, B.n)
        out.append(Check(e.id, "bound-girth10", exp["bound-girth10"], rep.bound,
                         rep.bound == exp["bound-girth10"] and rep.bound <= B.N,
                         note="met with equality" if rep.bound == B.N else ""))
    if "bound-girth12" in exp:
        rep = bound_girth12(B)
        out.append(Check(e.id, "bound-girth12", exp["bound-girth12"], rep.bound,
                         rep.bound == exp["bound-girth12"] and rep.bound <= B.N))
    if "bound-me-girth6" in exp:
        rep = bound_me_girth6(B)
        out.append(Check(e.id, "bound-me-girth6", exp["bound-me-girth6"], rep.bound,
                         rep.bound == exp["bound-me-girth6"] and rep.bound <= B.N,
                         note="met with equality" if rep.bound == B.N else ""))
    if "D" in exp:
        got = build_D(B).rows_as_lists()
        want = _rows_meta(exp["D"], pairs=False)
        out.append(Check(e.id, "D", want, got, got == want))
    if "DD" in exp:
        got = build_DD(B).rows_as_lists()
        want = _rows_meta(exp["DD"], pairs=True)
        same = [[tuple(sorted(a)) for a in row] for row in got] == [[tuple(sorted(a)) for a in row] for row in want]
        out.append(Check(e.id, "DD", [[list(p) for p in row] for row in want],
                         [[list(p) for p in row] for row in got], same,
                         note="" if got == want else "pairs agree up to component order"))
    if dmin and "dmin" in exp:
        res, dt = _timed(lambda: min_distance(B, time_limit=dmin_time))
        ok = res.value == exp["dmin"] if res.exact else res.lower_bound <= exp["dmin"] <= res.value
        out.append(Check(e.id, "dmin", exp["dmin"], res.value, ok, hard=res.exact, seconds=dt,
                         note="exact" if res.exact else f"not certified: {res.lower_bound} <= d_min <= {res.value}"))
    return out


def verify_corpus(scope: str = "all", dmin: bool = True, dmin_time: float = 30.0) -> list[Check]:
    checks = []
    for e in select(scope):
        checks += verify_entry(e, dmin=dmin, dmin_time=dmin_time)
    return checks
