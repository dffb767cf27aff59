import math

import pytest

from gnk.qbinom import binomial, gnk_pascal, gnk_product, q_bracket, q_factorial
from gnk.qpoly import QPoly, exact_div
from gnk.shape import darga, is_log_concave, is_symmetric

P = QPoly
G22 = P([1, 1, 2, 1, 1])


def box_count(n, k):
    """Partitions inside a k x n box counted by weight, by brute force."""
    counts = [0] * (n * k + 1)

    def rec(rows_left, cap, weight):
        if rows_left == 0:
            counts[weight] += 1
            return
        for part in range(cap + 1):
            rec(rows_left - 1, part, weight + part)

    rec(k, n, 0)
    return P(counts)


def test_bracket_and_factorial():
    assert q_bracket(1) == P([1])
    assert q_bracket(4) == P([1, 1, 1, 1])
    assert q_bracket(0) == QPoly.zero()
    assert all(q_bracket(n).eval_at_one() == n for n in range(51))
    assert q_factorial(0) == P([1])
    assert q_factorial(3) == P([1, 2, 2, 1])
    assert q_factorial(4).eval_at_one() == 24


def test_product_examples():
    assert gnk_product(2, 2) == G22
    assert all(gnk_product(n, 0) == P([1]) for n in range(10))
    assert gnk_product(3, 2) == P([1, 1, 2, 2, 2, 1, 1])
    assert gnk_product(-1, 3) == QPoly.zero()
    assert gnk_product(3, -2) == QPoly.zero()


def test_pascal_examples():
    assert gnk_pascal(1, 1) == P([1, 1])
    assert gnk_pascal(2, 2) == G22
    g = gnk_pascal(5, 5)
    assert g.coeffs == g.coeffs[::-1]


@pytest.mark.parametrize("n,k", [(3, 2), (4, 3), (2, 5), (5, 4)])
def test_box_interpretation(n, k):
    assert gnk_product(n, k) == box_count(n, k)


def test_factorial_quotient():
    for n in range(8):
        for k in range(8):
            expected = exact_div(q_factorial(n + k), q_factorial(n) * q_factorial(k))
            assert gnk_product(n, k) == expected


def test_product_equals_pascal_grid():
    for n in range(26):
        for k in range(26):
            g = gnk_product(n, k)
            assert g == gnk_pascal(n, k)
            assert g == gnk_product(k, n)
            assert is_symmetric(g) and darga(g) == n * k
            assert g.eval_at_one() == binomial(n + k, k) == math.comb(n + k, k)


def test_log_concave_only_for_thin_boxes():
    # [n+k choose k] is log-concave exactly when the box is a single row or column
    for n in range(1, 13):
        for k in range(1, 13):
            assert is_log_concave(gnk_product(n, k)) == (min(n, k) == 1)
    assert not is_log_concave(G22)
