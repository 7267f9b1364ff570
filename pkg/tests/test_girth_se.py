import random

import numpy as np
import pytest
from hypothesis import given, settings

from girthlab.core import ExponentMatrix, hstack
from girthlab.diffmat import build_D, build_DD, pair_list
from girthlab.girth_se import (check_4cycles, check_6cycles, check_8cycles, check_10cycles,
                               enumerate_row_triples, girth, six_cycle_values)
from girthlab.oracle import bfs_girth_of, has_cycle_fossorier

from _gen import corpus, greedy, random_single, single_edge, zero_first, zero_row

EX3_A = {4, 5, 11, 15, 21, 22, 25, 28, 30, 32, 34, 37, 40, 47, 53, 54, 59, 67}


def _sound(B, v):
    """A violation's walk must be a genuine zero-sum closed walk of the stated length."""
    if v is None or v.walk is None:
        return
    assert v.walk.is_valid_walk()
    assert v.walk.length == v.cycle_length
    assert v.walk.shift_sum(B) % B.N == 0


def test_enumerate_row_triples():
    assert enumerate_row_triples(3) == [(0, 1, 2)]
    assert enumerate_row_triples(4) == [(0, 1, 3), (0, 2, 4), (1, 2, 5), (3, 4, 5)]
    assert enumerate_row_triples(2) == []


def test_example_one_chain():
    B = corpus("demo-3x4-N37")
    D, DD = build_D(B), build_DD(B)
    assert check_4cycles(D) is None
    assert check_6cycles(D) is None
    assert check_8cycles(D, DD) is None
    assert check_8cycles(D, DD, exact=True) is None
    v = check_10cycles(B, D, DD)
    assert v is not None and v.cycle_length == 10
    _sound(B, v)
    rep = girth(B)
    assert rep.girth == 10 and not rep.at_least


def test_example_three_girth_and_set():
    B = corpus("g12-3x4-N73")
    assert set(six_cycle_values(build_D(B)).values) == EX3_A
    assert len(six_cycle_values(build_D(B))) == 18
    assert check_10cycles(B, build_D(B), build_DD(B)) is None
    assert girth(B).girth == 12


def test_check_6cycles_violation():
    B = ExponentMatrix.from_rows([[0, 0, 0], [0, 1, 2], [0, 2, 1]], 5)
    D = build_D(B)
    assert check_4cycles(D) is None
    v = check_6cycles(D)
    assert v is not None
    _sound(B, v)
    assert has_cycle_fossorier(B, 6).found


def test_check_4cycles_violation():
    B = ExponentMatrix.from_rows([[0, 0], [0, 0]], 7)
    v = check_4cycles(build_D(B))
    assert v is not None and v.cycle_length == 4
    _sound(B, v)


def test_requires_single_edge():
    with pytest.raises(ValueError):
        check_4cycles(build_D(corpus("me-3x4-N13"), "multi"))


@pytest.mark.parametrize("rows, N", [
    ([[0, 0, 0], [0, 2, 12], [0, 27, 25]], 31),
    ([[0, 0, 0], [0, 13, 7], [0, 27, 34]], 36),
])
def test_literal_eight_clause_over_flags(rows, N):
    # two equal DD components whose indices cannot close an 8-walk
    B = ExponentMatrix.from_rows(rows, N)
    D, DD = build_D(B), build_DD(B)
    assert check_8cycles(D, DD) is not None
    assert check_8cycles(D, DD, exact=True) is None
    assert not has_cycle_fossorier(B, 8).found


def test_six_inequalities_on_three_by_three():
    """For zero-first-row 3x3 blocks the six DD inequalities hold exactly when there is no 6-cycle."""
    rng = random.Random(4)
    agree = 0
    for _ in range(600):
        N = rng.randint(5, 40)
        B = zero_first(rng, 3, 3, N)
        D, DD = build_D(B), build_DD(B)
        if check_4cycles(D) is not None:
            continue
        f = DD.values[:, :, 0]
        g = DD.values[:, :, 1]
        i, i2 = 0, 1  # row pairs (0,1) and (0,2)
        j1, j2, j3 = 0, 1, 2  # column pairs (0,1), (0,2), (1,2)
        ok = (f[i, j2] != f[i2, j3] and f[i, j2] != f[i2, j1] and f[i, j1] != f[i2, j2]
              and f[i, j1] != g[i2, j3] and f[i, j3] != g[i2, j1] and f[i, j3] != f[i2, j2])
        assert ok == (check_6cycles(D) is None) == (not has_cycle_fossorier(B, 6).found)
        agree += 1
    assert agree > 300


def test_zero_first_row_eight_pass_excludes_first_row_six_cycles():
    rng = random.Random(6)
    passed = 0
    for t in range(300):
        m, n, N = rng.choice([3, 4]), rng.randint(3, 5), rng.randint(30, 97)
        B = greedy(rng, m, n, N, 10, tries=60, zero_first=True) if t % 2 else zero_first(rng, m, n, N)
        D, DD = build_D(B), build_DD(B)
        if check_4cycles(D) is not None or check_8cycles(D, DD) is not None:
            continue
        passed += 1
        for b in range(1, m):
            for c in range(b + 1, m):
                sub = ExponentMatrix.from_rows([[B.entries[r][j][0] for j in range(n)] for r in (0, b, c)], N)
                assert not has_cycle_fossorier(sub, 6).found
        if m == 3:
            assert check_6cycles(D) is None
    assert passed > 20


def _mirrored_repeat(DD, k):
    """A DD component at columns (u, v) equal to a component at (k+u, k+v)."""
    col_index = {p: q for q, p in enumerate(DD.column_pairs)}
    for p in range(len(DD.pairs)):
        for u, v in pair_list(k):
            a = DD.values[p, col_index[(u, v)]]
            b = DD.values[p, col_index[(k + u, k + v)]]
            if a[0] == b[1] and a[1] == b[0]:
                return True
    return False


def test_a_minus_a_has_dd_repetition():
    rng = random.Random(8)
    for _ in range(200):
        k, N = rng.randint(2, 5), rng.randint(5, 97)
        A = zero_row(rng, 3, k, N)
        C = hstack(A, A.negated())
        D, DD = build_D(C), build_DD(C)
        v = check_8cycles(D, DD)
        assert v is not None and v.condition_id == "8b.DD-repeat"
        assert _mirrored_repeat(DD, k)
        _sound(C, v)


def test_girth_chain_small_random():
    rng = random.Random(3)
    for t in range(120):
        m, n, N = rng.choice([2, 3, 4]), rng.randint(2, 6), rng.randint(5, 60)
        B = random_single(rng, m, n, N, 0.1) if t % 3 else greedy(rng, m, n, N, 8, tries=40)
        rep = girth(B)
        assert not rep.at_least
        assert rep.girth == bfs_girth_of(B)
        if rep.witness is not None:
            assert rep.witness.length == rep.girth
            assert rep.witness.shift_sum(B) % N == 0


@settings(max_examples=200, deadline=None)
@given(single_edge(max_m=5, max_n=6, max_N=50, min_m=2, min_n=2, punctured=True))
def test_condition_witnesses_are_sound(B):
    D, DD = build_D(B), build_DD(B)
    for v in (check_4cycles(D), check_6cycles(D), check_8cycles(D, DD), check_8cycles(D, DD, exact=True),
              check_10cycles(B, D, DD)):
        _sound(B, v)
    v = check_8cycles(D, DD, exact=True)
    assert (v is not None) == has_cycle_fossorier(B, 8).found
    if v is not None:
        assert v.walk is not None


@settings(max_examples=150, deadline=None)
@given(single_edge(max_m=5, max_n=6, max_N=60, min_m=2, min_n=2))
def test_each_level_matches_oracle(B):
    D, DD = build_D(B), build_DD(B)
    assert (check_4cycles(D) is not None) == has_cycle_fossorier(B, 4).found
    assert (check_6cycles(D) is not None) == has_cycle_fossorier(B, 6).found
    assert (check_10cycles(B, D, DD) is not None) == has_cycle_fossorier(B, 10).found


def test_six_cycle_values_contains_zero_iff_six_cycle():
    rng = random.Random(9)
    for _ in range(200):
        B = zero_first(rng, rng.choice([3, 4]), rng.randint(3, 6), rng.randint(5, 50))
        D = build_D(B)
        assert (0 in six_cycle_values(D).values) == (check_6cycles(D) is not None)


def test_violation_json():
    B = ExponentMatrix.from_rows([[0, 0], [0, 0]], 7)
    out = check_4cycles(build_D(B)).to_json()
    assert out["cycle_length"] == 4 and "walk" in out
    assert all(isinstance(x, (int, list, dict, str, tuple)) for x in out["witness"].values())
    assert np.array(out["walk"]["path"]).shape == (4, 3)
