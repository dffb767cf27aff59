"""Recursion depth and call counts of the KOH recurrence.

Conventions: a call ``G(n, k)`` is *expanding* when ``n >= 1`` and ``k >= 2``
(everything else is an initial condition).  Only summands whose recursive
arguments all have ``n' >= 0`` are followed, because any other summand is
identically zero and needs no evaluation.  ``depth`` is the number of
expanding calls on the longest chain starting at (and including) the root,
so ``G(n, 2) -> G(n-2, 2) -> ...`` has depth ``ceil(n/2)``.  ``calls`` counts
expanding calls in the full recursion tree, without memoization.

Only the call graph is walked; no polynomial is built.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import OutOfCoverage
from .koh import recursive_arguments
from .partitions import enumerate_partitions


@dataclass(frozen=True)
class DepthReport:
    depth: int
    calls: int


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@lru_cache(maxsize=None)
def _children(n: int, k: int) -> tuple[tuple[int, int], ...]:
    out = []
    for lam in enumerate_partitions(k):
        args = recursive_arguments(n, k, lam)
        if any(n1 < 0 for n1, _ in args):
            continue
        out.extend((n1, k1) for n1, k1 in args if n1 >= 1 and k1 >= 2)
    return tuple(out)


@lru_cache(maxsize=None)
def _walk(n: int, k: int) -> tuple[int, int]:
    if n < 1 or k < 2:
        return 0, 0
    depth, calls = 0, 1
    for child in _children(n, k):
        d, c = _walk(*child)
        depth = max(depth, d)
        calls += c
    return depth + 1, calls


def koh_depth(n: int, k: int) -> DepthReport:
    """Brute-force depth and call count by walking the recursion tree."""
    return DepthReport(*_walk(n, k))


def in_coverage(n: int, k: int) -> bool:
    if n <= 0 or k <= 3:
        return True
    if n in (1, 2) or (n == 3 and k % 2):
        return True
    return n >= 2 if k % 2 == 0 else n >= 4


def koh_depth_fast(n: int, k: int) -> int:
    """Closed-form maximum depth.

    ``ceil(floor(k/2) n / 2) - ceil(k/2) + 1`` in the main regime, ``ceil(n/4)``
    for ``k = 3`` and ``1`` when ``n`` is 1 or 2, or ``n = 3`` with odd ``k``.
    """
    if not in_coverage(n, k):
        raise OutOfCoverage(f"depth formula not established for (n, k) = ({n}, {k})")
    if n <= 0 or k <= 1:
        return 0
    if k == 2:
        return _ceil_div(n, 2)
    if k == 3:
        return _ceil_div(n, 4)
    if n in (1, 2) or (n == 3 and k % 2):
        return 1
    return _ceil_div((k // 2) * n, 2) - _ceil_div(k, 2) + 1


def asymmetric_pairs(n_max: int, k_max: int) -> list[tuple[int, int]]:
    """Pairs with ``depth(n, k) != depth(k, n)`` inside the box."""
    lim = min(n_max, k_max)
    return [(n, k) for n in range(lim + 1) for k in range(n + 1, lim + 1)
            if _walk(n, k)[0] != _walk(k, n)[0]]
