import pytest

from gnk.closed import (
    conjecture_residual, conjecture_sweep, g1_explicit, g2_explicit, g3_explicit,
    g3_minus_g2_explicit, gs_forward, middle_coefficient, middle_coefficient_formula,
    singular_line_check, useful_gem_check,
)
from gnk.errors import SingularLine
from gnk.koh import g_s
from gnk.qpoly import QPoly
from gnk.shape import is_sym_uni

P = QPoly


def test_explicit_examples():
    for k in range(6):
        assert g1_explicit(0, k) == P([1])
    assert g1_explicit(2, 2) == P([1] * 5)
    assert g2_explicit(0, 7) == P([1])
    assert g2_explicit(2, 3) == P([1, 1, 2, 2, 2, 1, 1])
    for k in range(8):
        assert g3_explicit(1, k) == g2_explicit(1, k)
        assert g3_explicit(0, k) == P([1])


def test_g1_g2_grid():
    for n in range(21):
        for k in range(21):
            assert g1_explicit(n, k) == g_s(n, k, 1)
            assert g2_explicit(n, k) == g_s(n, k, 2)


def test_g3_small_grid():
    for n in range(2, 13):
        for k in range(13):
            g = g3_explicit(n, k)
            assert g == g_s(n, k, 3)
            assert is_sym_uni(g, n * k)


def test_difference_formula():
    for n in (2, 3):
        for k in range(21):
            assert g3_minus_g2_explicit(n, k) == QPoly.zero()
    for n in range(2, 11):
        for k in range(11):
            assert g3_minus_g2_explicit(n, k) == g_s(n, k, 3) - g_s(n, k, 2)


def test_gem():
    for n in range(1, 4):
        for k in range(2, 8):
            assert useful_gem_check(n, k, 1)
    for k in range(5):
        assert useful_gem_check(3, k, 0)
    with pytest.raises(ValueError):
        useful_gem_check(2, 3, 2)


def test_gem_grid():
    for n in range(1, 13):
        for k in range(13):
            for D in range(k // 2 + 1):
                assert useful_gem_check(n, k, D), (n, k, D)


def test_conjecture_small():
    for s in (1, 2, 3):
        for n in range(11):
            for k in range(11):
                assert conjecture_residual(s, n, k) == QPoly.zero()
    assert list(conjecture_sweep(4, 6, 6)) == []


def test_residual_detects_wrong_values():
    # the residual really depends on G_s: swapping in G_{s+1} breaks it
    from gnk import closed
    orig = closed.g_s
    try:
        closed.g_s = lambda n, k, s: orig(n, k, s + 1)
        assert any(conjecture_residual(2, n, k) for n in range(6) for k in range(6))
    finally:
        closed.g_s = orig


def test_forward_recurrence():
    for s in range(1, 6):
        assert gs_forward(s, 4, 0) == P([1])
        for n in range(s):
            for k in range(11):
                assert gs_forward(s, n, k) == g_s(n, k, s)
    for k in range(1, 6):
        with pytest.raises(SingularLine):
            gs_forward(2, k + 1, k)
    with pytest.raises(SingularLine):
        gs_forward(2, 3, 2)


def test_forward_custom_boundary():
    # G_s(0,k) = G_s(n,0) = 1 scaled by 3 scales everything by 3
    b = lambda i, j: P([3])
    for k in range(6):
        assert gs_forward(3, 2, k, boundary=b) == g_s(2, k, 3) * 3


def test_singular_line():
    for s in range(1, 5):
        for k in range(11):
            assert singular_line_check(s, k)


def test_middle_coefficient_formula():
    checked = 0
    for k in range(1, 17):
        for d in range(k if k > 1 else 2):
            if 3 * d >= 2 * k + 3:
                continue
            for n in range(2, 13):
                if n * k % 2:
                    continue
                assert middle_coefficient(n, k, d) == middle_coefficient_formula(n, d), (n, k, d)
                checked += 1
    assert checked > 800
    # a gap of zero is no restriction at all and the count is different
    assert middle_coefficient(4, 2, 2) != middle_coefficient_formula(4, 2)
