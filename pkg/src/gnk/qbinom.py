"""Reference q-binomial kernels.

``G(n, k)`` is the Gaussian binomial ``[n+k choose k]_q``, the generating
function of partitions fitting in an ``n x k`` box.  Two independent routes
are provided (product formula and Pascal-type recurrence); the KOH engine is
tested against both.
"""
from __future__ import annotations

import math
import threading

from .qpoly import QPoly, exact_div

_ZERO = QPoly.zero()
_ONE = QPoly.one()


def q_bracket(n: int) -> QPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``; ``[0]_q = 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return QPoly.geometric(n)


def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = _ONE
    for i in range(2, n + 1):
        out = out.times_bracket(i)
    return out


def gnk_product(n: int, k: int) -> QPoly:
    """``G(n,k) = prod_{i<=k} (1 - q^(n+i)) / (1 - q^i)`` by exact division.

    Each partial product is itself ``G(n, i)``, so every division along the
    way is exact; a ``NonzeroRemainder`` here would be a defect.
    """
    if n < 0 or k < 0:
        return _ZERO
    if n < k:
        n, k = k, n
    hit = _product_memo.get((n, k))
    if hit is not None:
        _product_stats["hits"] += 1
        return hit
    # walk down to the largest cached G(n, j) and build upwards
    j = k
    while j > 0 and (n, j) not in _product_memo:
        j -= 1
    prev = _product_memo[(n, j)] if j else _ONE
    for i in range(j + 1, k + 1):
        _product_stats["misses"] += 1
        num = prev - prev.shift(n + i)
        prev = exact_div(num, QPoly.one_minus_q_power(i))
        _product_memo.setdefault((n, i), prev)
    return prev


# keyed with n >= k; insert-once, so concurrent fills agree
_product_memo: dict[tuple[int, int], QPoly] = {}
_product_stats = {"hits": 0, "misses": 0}


def product_memo() -> dict[tuple[int, int], QPoly]:
    """The live product memo table (used for persistence)."""
    return _product_memo


_pascal_table: dict[tuple[int, int], QPoly] = {}
_pascal_lock = threading.Lock()


def gnk_pascal(n: int, k: int) -> QPoly:
    """``G(n,k)`` from ``G(n,k) = q^k G(n-1,k) + G(n,k-1)`` with ``G(n,0)=G(0,k)=1``.

    The table is filled bottom-up and keyed with ``n >= k``.
    """
    if n < 0 or k < 0:
        return _ZERO
    if n < k:
        n, k = k, n
    hit = _pascal_table.get((n, k))
    if hit is not None:
        return hit
    # row j holds G(i, j) for i = 0..n; only rows j <= k are needed
    prev_row = [_ONE] * (n + 1)  # j = 0
    for j in range(1, k + 1):
        row = [_ONE]
        for i in range(1, n + 1):
            row.append(row[i - 1].shift(j) + prev_row[i])
        prev_row = row
        with _pascal_lock:
            for i in range(j, n + 1):
                _pascal_table.setdefault((i, j), row[i])
    return _pascal_table.setdefault((n, k), prev_row[n])


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def cache_info() -> dict:
    return {"gnk_product": dict(_product_stats, size=len(_product_memo)),
            "gnk_pascal": {"size": len(_pascal_table)}}
