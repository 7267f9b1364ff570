"""Lower bounds on the lifting degree needed for a target girth."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .core import ExponentMatrix
from .diffmat import build_D
from .girth_se import six_cycle_values

KINDS = ("girth6-legacy", "girth8-legacy", "girth10", "girth12", "me-girth6")


@dataclass(frozen=True)
class BoundReport:
    bound: int
    kind: str
    intermediates: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"bound": self.bound, "kind": self.kind, "intermediates": dict(self.intermediates)}


def _check_shape(m: int, n: int) -> None:
    if m < 2 or n < 2:
        raise ValueError(f"need m >= 2 and n >= 2, got ({m}, {n})")


def legacy_bounds(m: int, n: int) -> dict[str, int]:
    """Earlier fully connected single-edge bounds for girths 6, 8 and 10."""
    _check_shape(m, n)
    return {"girth6": n, "girth8": (m - 1) * (n - 1) + 1, "girth10": n * (n - 1) * (m - 1) + 1}


def bound_legacy(girth: int, m: int, n: int) -> BoundReport:
    if girth not in (6, 8):
        raise ValueError("legacy bounds exist for girth 6 and 8 only")
    value = legacy_bounds(m, n)[f"girth{girth}"]
    return BoundReport(max(2, value), f"girth{girth}-legacy", {"m": m, "n": n})


def bound_girth10(m: int, n: int) -> BoundReport:
    _check_shape(m, n)
    value = 2 * comb(n, 2) * comb(m, 2) + 1
    return BoundReport(value, "girth10", {"m": m, "n": n, "legacy": legacy_bounds(m, n)})


def bound_girth12(B: ExponentMatrix) -> BoundReport:
    """|A| + C(m,2) n (n-1) + 1, with A the residues of all 6-cycle sums of B."""
    if not B.is_single_edge:
        raise ValueError("girth-12 bound needs a single-edge matrix")
    A = six_cycle_values(build_D(B))
    if 0 in A.values:
        raise ValueError("matrix has 6-cycles (0 is a 6-cycle sum); the girth-12 bound does not apply")
    pair_term = comb(B.m, 2) * B.n * (B.n - 1)
    value = len(A) + pair_term + 1
    return BoundReport(max(2, value), "girth12",
                       {"A_size": len(A), "A": A.sorted(), "pair_term": pair_term})


class Girth12BoundTracker:
    """Keeps the smallest girth-12 bound over candidate matrices seen so far."""

    def __init__(self):
        self.best: BoundReport | None = None
        self.seen = 0

    def update(self, B: ExponentMatrix) -> BoundReport | None:
        self.seen += 1
        try:
            rep = bound_girth12(B)
        except ValueError:
            return None
        if self.best is None or rep.bound < self.best.bound:
            self.best = rep
        return rep


def bound_me_girth6(B: ExponentMatrix) -> BoundReport:
    """max{A, Bv, C} from row, column and row-pair weight sums."""
    w = B.weights()
    pairs = w * (w - 1) // 2
    a = int(2 * pairs.sum(axis=1).max())
    bv = int(2 * pairs.sum(axis=0).max())
    c = 0
    for i in range(B.m):
        for i2 in range(i + 1, B.m):
            c = max(c, int((w[i] * w[i2]).sum()))
    value = max(a, bv, c)
    return BoundReport(max(2, value), "me-girth6", {"A": a, "B": bv, "C": c})
