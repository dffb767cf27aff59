import pytest

from gnk.depth import asymmetric_pairs, in_coverage, koh_depth, koh_depth_fast


def ceil_div(a, b):
    return -(-a // b)


def test_k2_k3_chains():
    for n in range(1, 21):
        assert koh_depth(n, 2).depth == ceil_div(n, 2)
        assert koh_depth(n, 3).depth == ceil_div(n, 4)


def test_small_n():
    for k in range(1, 13):
        assert koh_depth(1, k).depth <= 1
        if k >= 2:
            assert koh_depth(1, k).depth == 1
            assert koh_depth(2, k).depth == 1
        if k % 2 and k >= 3:
            assert koh_depth(3, k).depth == 1


def test_fast_examples():
    assert koh_depth_fast(4, 4) == 3 == koh_depth(4, 4).depth
    assert koh_depth_fast(6, 2) == 3
    assert koh_depth_fast(2, 6) == 1


def test_terminal_calls():
    assert koh_depth(0, 5).depth == 0
    assert koh_depth(5, 1).depth == 0
    assert koh_depth(5, 0).calls == 0


def test_formula_matches_walker():
    for n in range(21):
        for k in range(13):
            assert in_coverage(n, k)
            assert koh_depth(n, k).depth == koh_depth_fast(n, k), (n, k)


def test_depth_is_not_symmetric():
    pairs = asymmetric_pairs(12, 12)
    assert pairs
    n, k = pairs[0]
    assert koh_depth(n, k).depth != koh_depth(k, n).depth


def test_monotone_in_n_for_even_k():
    for k in range(4, 13, 2):
        seq = [koh_depth_fast(n, k) for n in range(2, 30)]
        assert seq == sorted(seq)


def test_calls_count_tree():
    # G(n,2) is a single chain
    for n in range(1, 12):
        assert koh_depth(n, 2).calls == ceil_div(n, 2)
    assert koh_depth(6, 4).calls >= koh_depth(6, 4).depth
