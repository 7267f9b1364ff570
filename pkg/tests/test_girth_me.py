import random

import pytest
from hypothesis import given, settings

from girthlab.core import ExponentMatrix
from girthlab.diffmat import build_D
from girthlab.girth_me import (check_me_4cycles, check_me_6cycles, detect_inevitable_cycles, girth_me,
                               walk_is_valid, walk_sum)
from girthlab.girth_se import check_4cycles, check_6cycles, girth
from girthlab.oracle import bfs_girth_of, formally_zero, has_cycle_fossorier

from _gen import corpus, corpus_group, multi_edge, random_me, single_edge


def _sound(B, v):
    if v is None:
        return
    w = v.walk
    assert w is not None and w.is_valid_walk() and w.length == v.cycle_length
    assert w.shift_sum(B) % B.N == 0


def test_worked_multi_edge_example():
    B = corpus("me-3x4-N13")
    v = check_me_4cycles(B)
    assert v is not None and v.cycle_length == 4
    _sound(B, v)
    assert girth_me(B).girth == 4 == bfs_girth_of(B)
    inv = detect_inevitable_cycles(B)
    assert inv.present and inv.length == 6 and inv.pattern == "weight>=3"
    assert formally_zero(inv.witness)


@pytest.mark.parametrize("entry", corpus_group("me-girth6"), ids=lambda e: e.id)
def test_girth_six_family(entry):
    B = entry.matrix
    assert check_me_4cycles(B) is None
    v = check_me_6cycles(B)
    assert v is not None
    _sound(B, v)
    assert girth_me(B).girth == 6 == bfs_girth_of(B)


@pytest.mark.parametrize("entry", corpus_group("me-girth8"), ids=lambda e: e.id)
def test_girth_eight_family(entry):
    B = entry.matrix
    assert check_me_4cycles(B) is None and check_me_6cycles(B) is None
    assert girth_me(B).girth == 8 == bfs_girth_of(B)


@pytest.mark.parametrize("entry", corpus_group("me-girth6") + corpus_group("me-girth8"), ids=lambda e: e.id)
def test_two_two_rows_cap_girth_at_eight(entry):
    B = entry.matrix
    inv = detect_inevitable_cycles(B)
    assert inv.present and inv.length == 8 and inv.pattern == "[2 2]"
    for N in (B.N, 2 * B.N + 1):
        lifted = ExponentMatrix(B.entries, N)
        assert inv.witness.shift_sum(lifted) % N == 0
        assert bfs_girth_of(lifted) <= 8


def test_inevitable_patterns():
    assert not detect_inevitable_cycles(ExponentMatrix.from_rows([[0, 1], [2, 5]], 11)).present
    w3 = detect_inevitable_cycles(ExponentMatrix.from_rows([[(0, 1, 3)]], 11))
    assert w3.present and w3.length == 6
    corner = detect_inevitable_cycles(ExponentMatrix.from_rows([[(0, 1), 2], [3, 4]], 17))
    assert corner.present and corner.length == 10 and corner.pattern == "[[2,1],[1,1]]"
    assert set(corner.checked_N) >= {17}
    out = corner.to_json()
    assert out["present"] and out["length"] == 10


def test_inevitable_witness_holds_at_every_N():
    rng = random.Random(5)
    for _ in range(80):
        B = random_me(rng, max_m=3, max_n=3, max_N=40)
        inv = detect_inevitable_cycles(B)
        if not inv.present:
            continue
        assert formally_zero(inv.witness)
        for N in (B.N + 2, 3 * B.N + 7):
            g = bfs_girth_of(ExponentMatrix(B.entries, N))
            assert g is not None and g <= inv.length


def test_walk_helpers():
    B = corpus("me-g6-2x2-N8")
    assert walk_is_valid(B, [0, 0], [0, 1], [0, 0], [1, 1])
    assert walk_sum(B, [0, 0], [0, 1], [0, 0], [1, 1]) == 0 - 2 + 0 - 1
    # leaving and re-entering over the same edge is a backtrack
    assert not walk_is_valid(B, [0, 0], [0, 1], [0, 1], [1, 0])
    assert not walk_is_valid(B, [0, 0], [0, 0], [0, 0], [0, 0])


@settings(max_examples=200, deadline=None)
@given(single_edge(max_m=4, max_n=5, max_N=40, punctured=True))
def test_reduces_to_single_edge_conditions(B):
    D = build_D(B)
    assert (check_me_4cycles(B) is None) == (check_4cycles(D) is None)
    assert (check_me_6cycles(B) is None) == (check_6cycles(D) is None)


@settings(max_examples=200, deadline=None)
@given(multi_edge(max_m=4, max_n=4, max_N=40))
def test_multi_edge_levels_match_oracle(B):
    v4, v6 = check_me_4cycles(B), check_me_6cycles(B)
    assert (v4 is not None) == has_cycle_fossorier(B, 4).found
    assert (v6 is not None) == has_cycle_fossorier(B, 6).found
    _sound(B, v4)
    _sound(B, v6)


def test_girth_me_matches_bfs_random():
    rng = random.Random(2)
    for _ in range(150):
        B = random_me(rng)
        rep = girth(B)
        assert not rep.at_least
        assert rep.girth == bfs_girth_of(B)
