"""Explicit forms of the size-restricted sums and the identities around them.

Every rational expression is evaluated numerator first and then divided
exactly, factor by factor.  A ``NonzeroRemainder`` from any function here
means the closed form (or identity) fails at that point.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import SingularLine
from .koh import KohConfig, g_s, koh_restricted
from .partitions import PartitionConstraints
from .qpoly import QPoly, exact_div, exact_div_all

_ZERO = QPoly.zero()
_ONE = QPoly.one()


def _m(e: int, c: int = 1) -> QPoly:
    return QPoly.monomial(e, c)


def _omq(e: int) -> QPoly:
    """``1 - q^e``."""
    return QPoly.one_minus_q_power(e)


def _poly(*terms: tuple[int, int]) -> QPoly:
    """Sum of ``c q^e`` for ``(e, c)`` pairs."""
    return QPoly.from_terms(terms)


def g1_explicit(n: int, k: int) -> QPoly:
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    return QPoly.geometric(n * k + 1)


def g2_explicit(n: int, k: int) -> QPoly:
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if n == 0:
        return _ONE
    nk = n * k
    num = _poly(
        (nk + n + 4, 1), (nk + n + 3, -1), (nk + n + 1, 1), (nk + 4, -1),
        ((n - 1) * k + n + 3, -1), ((n - 1) * k + 3, 1), (k + n + 1, 1),
        (k + 1, -1), (n, -1), (3, 1), (1, -1), (0, 1),
    )
    return exact_div_all(num, [_omq(1), _omq(1), _omq(2), _omq(n)])


def _g3_numerator(n: int, k: int) -> QPoly:
    nk = n * k
    one_minus_qn = _omq(n)
    q_minus_qn = _poly((1, 1), (n, -1))
    t4 = (one_minus_qn * q_minus_qn).shift(4 * k + 3)
    t3 = (_poly((0, 1), (1, 1)) * one_minus_qn * _poly((1, 1), (2, -1), (5, 1), (n, -1))).shift(3 * k + 1)
    inner = (
        (_poly((9, 1), (8, -1), (7, -1), (6, 1), (5, 1), (3, -1), (1, 1)).shift(2 * n)
         - _poly((10, 1), (8, -1), (6, 1), (5, 1)).shift(n)
         + _m(10)).shift(nk)
        - _m(2 * n)
        + _poly((5, 1), (4, 1), (2, -1), (0, 1)).shift(n)
        + _poly((9, -1), (7, 1), (5, -1), (4, -1), (3, 1), (2, 1), (1, -1))
    )
    t2 = inner.shift(2 * k)
    t1 = (_poly((0, 1), (1, 1)) * one_minus_qn
          * _poly((5, 1), (n, -1), (n + 3, 1), (n + 4, -1))).shift(k + nk + 3)
    t0 = (one_minus_qn * q_minus_qn).shift(nk + 6)
    return t4 - t3 - t2 + t1 - t0


def g3_explicit(n: int, k: int) -> QPoly:
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if n < 2:
        return g2_explicit(n, k)
    num = _g3_numerator(n, k)
    num = exact_div_all(num, [_omq(1), _omq(1), _omq(2), _omq(2), _omq(3), _omq(n - 1), _omq(n)])
    return num.unshift(2 * k + 1)


def g3_minus_g2_explicit(n: int, k: int) -> QPoly:
    """The closed form of ``G_3 - G_2`` (valid for ``n >= 2``)."""
    if n < 2 or k < 0:
        raise ValueError("needs n >= 2 and k >= 0")
    nk = n * k
    one_minus_qn = _omq(n)
    q_minus_qn = _poly((1, 1), (n, -1))
    one_plus_q = _poly((0, 1), (1, 1))
    num = (
        (one_minus_qn * q_minus_qn).shift(4 * k + 2)
        - (one_plus_q * one_minus_qn * _poly((n + 3, 1), (n + 2, -1), (n, -1), (3, 1))).shift(3 * k + 1)
        + (_poly((3, 1), (n, -1))
           * (_poly((n + 1, 1), (3, -1), (2, -1), (0, 1)).shift(nk)
              + _poly((3, 1), (1, -1), (0, -1)).shift(n) + _m(2))).shift(2 * k + 1)
        - (one_plus_q * one_minus_qn * _poly((0, 1), (1, -1), (3, -1), (n, 1))).shift(k + nk + 3)
        - (one_minus_qn * q_minus_qn).shift(nk + 5)
    )
    num = exact_div_all(num, [_omq(1), _omq(1), _omq(2), _omq(2), _omq(3), _omq(n - 1), _omq(n)])
    return num.unshift(2 * k)


# -- the identity found while computing the middle coefficient ---------------------------


def _bracket_scaled(m: int, lift: int) -> QPoly:
    """``q^lift * (1 - q^m) / (1 - q)`` for any integer ``m`` with ``lift >= -min(m, 0)``."""
    if m >= 0:
        return QPoly.geometric(m).shift(lift)
    return -QPoly.geometric(-m).shift(lift + m)


def gem_lhs_lifted(n: int, k: int, D: int, lift: int) -> QPoly:
    """``q^lift * sum_{i=1}^D q^{2i} [(k-i)n-2i+1] [in-2i+1]`` with rational brackets."""
    total = _ZERO
    for i in range(1, D + 1):
        a = (k - i) * n - 2 * i + 1
        b = i * n - 2 * i + 1
        la = -min(a, 0)
        lb = -min(b, 0)
        extra = lift + 2 * i - la - lb
        if extra < 0:
            raise ValueError("lift too small")
        term = _bracket_scaled(a, la) * _bracket_scaled(b, lb)
        total = total + term.shift(extra)
    return total


def _gem_lift(n: int, k: int, D: int) -> int:
    need = 0
    for i in range(1, D + 1):
        a = (k - i) * n - 2 * i + 1
        b = i * n - 2 * i + 1
        need = max(need, -min(a, 0) - min(b, 0) - 2 * i)
    return need


def gem_rhs_lifted(n: int, k: int, D: int, lift: int) -> QPoly:
    nk = n * k
    num = (
        (_poly((0, 1), (nk - 2 * D, 1)) * _omq(2 * D) * _omq(n)).shift(2)
        - (_poly((0, 1), (nk - n * D - n, 1)) * _omq(n * D) * _omq(2)).shift(n + 1)
    )
    return exact_div_all(num.shift(lift), [_omq(1), _omq(1), _omq(2), _omq(n)])


def useful_gem_check(n: int, k: int, D: int) -> bool:
    """Both sides of the closed form for ``sum_i q^{2i} [(k-i)n-2i+1][in-2i+1]``.

    Valid for ``n >= 1`` and ``0 <= D <= k/2``.  Brackets with nonpositive
    argument are read as rational functions; both sides are multiplied by a
    common power of ``q`` so everything stays polynomial.
    """
    if n < 1 or D < 0 or 2 * D > k:
        raise ValueError("needs n >= 1 and 0 <= D <= k/2")
    if D == 0:
        # empty sum; both right-hand terms carry a factor 1 - q^0 = 0
        return True
    lift = _gem_lift(n, k, D)
    return gem_lhs_lifted(n, k, D, lift) == gem_rhs_lifted(n, k, D, lift)


# -- the size-s recurrence conjecture ------------------------------------------------


def conjecture_residual(s: int, n: int, k: int) -> QPoly:
    """Left side of the conjectured order-1 recurrence for ``G_s``, times
    ``q^max(0, 2-s)`` so the ``q^(s-2)`` factor stays polynomial.  Zero iff the
    recurrence holds at ``(n, k)``."""
    if s < 1:
        raise ValueError("s must be positive")
    lift = max(0, 2 - s)
    a = (_m(k + s) - _ONE).shift(n + lift) * g_s(n + 1, k, s)
    b = (_m(n + lift) - _m(s - 2 + lift)).shift(k + 1) * g_s(n, k + 1, s)
    c = (_m(n) - _m(k + s - 1)).shift(lift) * g_s(n + 1, k + 1, s)
    return a - b + c


@dataclass(frozen=True)
class ResidualReport:
    s: int
    n: int
    k: int
    residual: QPoly


def conjecture_sweep(s_max: int = 10, n_max: int = 20, k_max: int = 20,
                     s_min: int = 1) -> Iterator[ResidualReport]:
    """Stream every nonzero residual in the box (nothing is yielded when the
    recurrence holds everywhere)."""
    for s in range(s_min, s_max + 1):
        for n in range(n_max + 1):
            for k in range(k_max + 1):
                r = conjecture_residual(s, n, k)
                if r:
                    yield ResidualReport(s, n, k, r)


def gs_forward(s: int, n: int, k: int,
               boundary: Callable[[int, int], QPoly] | None = None) -> QPoly:
    """Iterate the conjectured recurrence forward from the boundary row/column.

    ``G_s(n,k) = (q^k (q^n - q^(s-1)) G_s(n-1,k) - q^n (q^(k+s-1) - 1) G_s(n,k-1))
    / (q^n - q^(k+s-1))``.  ``boundary(i, j)`` gives the values with ``i == 0`` or
    ``j == 0`` (default 1), so other initial conditions can be tried.  Every
    cell of the rectangle is needed, so any ``i = j + s - 1`` inside it raises
    ``SingularLine``; this happens exactly when ``n >= s`` and ``k >= 1``.
    """
    if s < 1:
        raise ValueError("s must be positive")
    if n < 0 or k < 0:
        return _ZERO
    if boundary is None:
        boundary = lambda i, j: _ONE
    if n == 0 or k == 0:
        return boundary(n, k)
    for i in range(1, n + 1):
        j = i - s + 1
        if 1 <= j <= k:
            raise SingularLine(f"G_{s}({i},{j}) lies on n = k + s - 1")
    prev = [boundary(0, j) for j in range(k + 1)]  # row i-1
    for i in range(1, n + 1):
        row = [boundary(i, 0)]
        for j in range(1, k + 1):
            num = ((_m(i) - _m(s - 1)).shift(j) * prev[j]
                   - (_m(j + s - 1) - _ONE).shift(i) * row[j - 1])
            row.append(exact_div(num, _m(i) - _m(j + s - 1)))
        prev = row
    return prev[k]


def singular_line_check(s: int, k: int) -> bool:
    """``G_s(k+s, k) (1 - q^(k+s)) == (1 - q^(k+1)) G_s(k+s-1, k+1)``."""
    if s < 1 or k < 0:
        raise ValueError("needs s >= 1, k >= 0")
    return g_s(k + s, k, s) * _omq(k + s) == _omq(k + 1) * g_s(k + s - 1, k + 1, s)


def middle_coefficient(n: int, k: int, d: int) -> int:
    """Coefficient of ``q^(nk/2)`` when consecutive parts must differ by ``k - d``."""
    if (n * k) % 2:
        raise ValueError("nk must be even")
    cfg = KohConfig(constraints=PartitionConstraints(min_gap=k - d))
    return koh_restricted(n, k, cfg)[n * k // 2]


def middle_coefficient_formula(n: int, d: int) -> int:
    D = d // 2
    return ((n - 2) * D + 2) * (D + 1) // 2
