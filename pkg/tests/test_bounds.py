import random

import pytest
from hypothesis import given, settings

from girthlab.bounds import (Girth12BoundTracker, bound_girth10, bound_girth12, bound_legacy, bound_me_girth6,
                             legacy_bounds)
from girthlab.core import ExponentMatrix
from girthlab.girth_me import check_me_4cycles
from girthlab.oracle import bfs_girth_of

from _gen import corpus, corpus_group, greedy, multi_edge


@pytest.mark.parametrize("n, value", [(4, 37), (5, 61), (6, 91)])
def test_girth10_three_rows(n, value):
    rep = bound_girth10(3, n)
    assert rep.bound == value and rep.kind == "girth10"
    assert rep.intermediates["legacy"]["girth10"] == n * (n - 1) * 2 + 1


@pytest.mark.parametrize("entry", corpus_group("girth10"), ids=lambda e: e.id)
def test_girth10_bound_respected_by_corpus_matrices(entry):
    B = entry.matrix
    rep = bound_girth10(B.m, B.n)
    assert B.N >= rep.bound
    if B.n <= 6:
        assert B.N == rep.bound


def test_girth12_example():
    rep = bound_girth12(corpus("g12-3x4-N73"))
    assert rep.bound == 55 and rep.intermediates["A_size"] == 18 and rep.intermediates["pair_term"] == 36
    assert rep.bound <= 73


def test_girth12_rejects_six_cycles():
    with pytest.raises(ValueError):
        bound_girth12(ExponentMatrix.from_rows([[0, 0, 0], [0, 1, 2], [0, 2, 1]], 5))
    with pytest.raises(ValueError):
        bound_girth12(corpus("me-3x4-N13"))


def test_tracker_keeps_minimum():
    t = Girth12BoundTracker()
    assert t.update(ExponentMatrix.from_rows([[0, 0, 0], [0, 1, 2], [0, 2, 1]], 5)) is None
    a = t.update(corpus("g12-3x4-N73"))
    b = t.update(corpus("demo-3x4-N37"))
    assert t.seen == 3 and t.best.bound == min(a.bound, b.bound)


@pytest.mark.parametrize("entry", corpus_group("me-girth6"), ids=lambda e: e.id)
def test_me_girth6_family_is_tight(entry):
    B = entry.matrix
    rep = bound_me_girth6(B)
    assert rep.bound == 4 * B.n == B.N
    assert rep.intermediates == {"A": 2 * B.n, "B": 4, "C": 4 * B.n}


def test_me_girth6_worked_example():
    rep = bound_me_girth6(corpus("me-3x4-N13"))
    # weights: rows (3,0,1,0), (0,2,2,0), (0,1,0,3)
    assert rep.intermediates == {"A": 6, "B": 6, "C": 2}
    assert rep.bound == 6


def test_me_girth6_small_cases():
    assert bound_me_girth6(ExponentMatrix.from_rows([[(0, 1), (0, 2)], [(1, 3), (6, 7)]], 8)).bound == 8
    assert bound_me_girth6(ExponentMatrix.from_rows([[0, 0], [0, 1]], 5)).bound == 2
    assert bound_me_girth6(ExponentMatrix.from_rows([[0, 0, 0], [0, 1, 2]], 5)).bound == 3


def test_legacy():
    assert legacy_bounds(3, 4) == {"girth6": 4, "girth8": 7, "girth10": 25}
    assert bound_legacy(8, 3, 4).bound == 7
    with pytest.raises(ValueError):
        bound_legacy(10, 3, 4)
    with pytest.raises(ValueError):
        bound_girth10(1, 4)


def test_girth10_bound_holds_for_random_girth10_matrices():
    rng = random.Random(10)
    hits = 0
    for _ in range(40):
        n, N = rng.randint(3, 4), rng.randint(25, 60)
        B = greedy(rng, 3, n, N, 10, tries=80, zero_first=True)
        g = bfs_girth_of(B)
        if g is not None and g >= 10:
            hits += 1
            assert N >= bound_girth10(3, n).bound
    assert hits > 0


@settings(max_examples=300, deadline=None)
@given(multi_edge(max_m=3, max_n=3, max_N=24, max_w=3))
def test_me_girth6_bound_is_necessary(B):
    if B.m >= 2 and B.n >= 2 and check_me_4cycles(B) is None:
        assert B.N >= bound_me_girth6(B).bound


def test_report_json():
    out = bound_girth12(corpus("g12-3x4-N73")).to_json()
    assert out["bound"] == 55 and out["kind"] == "girth12" and len(out["intermediates"]["A"]) == 18
