import random
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings

from girthlab.core import ExponentMatrix
from girthlab.mindist import (_brouwer_zimmermann, _exhaustive, gf2_rank, min_distance, nullspace,
                              parity_check_rows, rref)

from _gen import corpus, random_single, single_edge


def _brute(basis, length):
    best = length + 1
    for coeffs in product((0, 1), repeat=len(basis)):
        if any(coeffs):
            v = 0
            for c, b in zip(coeffs, basis):
                if c:
                    v ^= b
            best = min(best, v.bit_count())
    return best


def _dot(row, vec):
    return (row & vec).bit_count() & 1


def test_repetition_code():
    r = min_distance(ExponentMatrix.from_rows([[0, 0]], 2))
    assert r.exact and r.value == 2 and r.dimension == 2 and r.length == 4


def test_single_cpm_has_no_code():
    with pytest.raises(ValueError):
        min_distance(ExponentMatrix.from_rows([[0]], 5))


def test_rref_and_rank():
    rows = [0b1100, 0b0110, 0b1010]
    R, piv = rref(rows, 4)
    assert len(R) == 2 == gf2_rank(rows, 4)
    assert piv == [2, 1] or sorted(piv) == [1, 2]


@settings(max_examples=100, deadline=None)
@given(single_edge(max_m=3, max_n=4, max_N=8, punctured=True))
def test_nullspace_is_kernel(B):
    rows, length = parity_check_rows(B)
    basis = nullspace(rows, length)
    assert len(basis) + gf2_rank(rows, length) == length
    assert gf2_rank(basis, length) == len(basis)
    for v in basis:
        assert all(_dot(r, v) == 0 for r in rows)


def test_exhaustive_matches_brute_force():
    rng = random.Random(3)
    done = 0
    while done < 40:
        B = random_single(rng, rng.randint(1, 3), rng.randint(2, 4), rng.randint(2, 5), 0.2)
        rows, length = parity_check_rows(B)
        basis = nullspace(rows, length)
        if not basis or len(basis) > 14:
            continue
        assert _exhaustive(basis, length)[0] == _brute(basis, length)
        done += 1


def test_information_set_search_matches_exhaustive():
    rng = random.Random(4)
    done = 0
    while done < 25:
        B = random_single(rng, rng.randint(2, 3), rng.randint(3, 6), rng.randint(3, 9))
        rows, length = parity_check_rows(B)
        basis = nullspace(rows, length)
        if not basis or len(basis) > 22:
            continue
        upper, lower, _, complete = _brouwer_zimmermann(basis, length, None, None)
        assert complete and upper == lower == _exhaustive(basis, length)[0]
        done += 1


def test_packing_beyond_one_word():
    # length above 64 exercises multi-word rows
    B = ExponentMatrix.from_rows([[0, 0, 0, 0], [0, 1, 3, 7], [0, 5, 2, 11]], 17)
    rows, length = parity_check_rows(B)
    basis = nullspace(rows, length)
    assert length == 68 and len(basis) <= 24
    d = _exhaustive(basis, length)[0]
    assert _brouwer_zimmermann(basis, length, None, None)[0] == d == min_distance(B).value


def test_four_by_five_girth6():
    r = min_distance(corpus("g6-4x5-N5-d8"))
    assert r.exact and r.value == 8 and r.dimension == 8


@pytest.mark.parametrize("entry_id, d", [("g6-4x6-N7-d10", 10), ("g6-4x6-N7-d8", 8)])
def test_four_by_six_girth6(entry_id, d):
    r = min_distance(corpus(entry_id))
    assert r.exact and r.value == d


def test_budget_gives_upper_bound():
    B = corpus("g6-4x8-N10-d10")
    r = min_distance(B, budget=1000)
    assert not r.exact and r.lower_bound <= 10 <= r.value
    assert r.method == "information-set"
    out = r.to_json()
    assert out["exact"] is False and out["d_min"] == r.value


def test_codeword_weights_are_codewords():
    B = corpus("g6-4x5-N5-d8")
    rows, length = parity_check_rows(B)
    H = np.array([[r >> j & 1 for j in range(length)] for r in rows], dtype=np.uint8)
    for v in nullspace(rows, length):
        x = np.array([v >> j & 1 for j in range(length)], dtype=np.uint8)
        assert not (H @ x % 2).any()
