"""The q -> 1 limits of G_s and the diagonal sequences G_s(n, n)(1).

All arithmetic is exact; a limit formula whose numerator is not divisible by
its denominator raises ``NonIntegerValue``.
"""
from __future__ import annotations

from .errors import NonIntegerValue
from .koh import g_s
from .qbinom import binomial

OEIS_IDS = {1: "A002522", 2: "A302612", 3: "A302644", 4: "A302645", 5: "A302646"}


def _exact(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise NonIntegerValue(f"{what}: {num} is not divisible by {den}")
    return q


def gs_diagonal_sequence(s: int, n_max: int) -> list[int]:
    if s < 1:
        raise ValueError("s must be positive")
    return [g_s(n, n, s).eval_at_one() for n in range(n_max + 1)]


def limit_g1(n: int, k: int) -> int:
    return n * k + 1


def limit_g2(n: int, k: int) -> int:
    """Limit of the explicit ``G_2`` form, valid for ``n >= 1``; ``G_2(0, k) = 1``."""
    if n == 0:
        return 1
    num = (k + 1) * (k * k * n * n - 3 * k * k * n - k * n * n + 2 * k * k + 9 * k * n - 8 * k + 12)
    return _exact(num, 12, "G_2 limit")


def limit_g3(n: int, k: int) -> int:
    """Limit of the explicit ``G_3`` form, valid for ``n >= 2``; below that ``G_3 = G_2``."""
    if n < 2:
        return limit_g2(n, k)
    poly = (k**3 * n**3 - 9 * k**3 * n**2 - 3 * k**2 * n**3 + 26 * k**3 * n + 42 * k**2 * n**2
            + 2 * k * n**3 - 24 * k**3 - 153 * k**2 * n - 33 * k * n**2 + 162 * k**2
            + 247 * k * n - 378 * k + 360)
    return _exact((k + 2) * (k + 1) * poly, 720, "G_3 limit")


_LIMITS = {1: limit_g1, 2: limit_g2, 3: limit_g3}


def limit_formula_check(s: int, n: int, k: int) -> bool:
    """``g_s(n, k, s)(1)`` against the limit of the explicit form for ``s <= 3``."""
    if s not in _LIMITS:
        raise ValueError("limit formulas exist for s = 1, 2, 3")
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    return _LIMITS[s](n, k) == g_s(n, k, s).eval_at_one()


def conjectured_diagonal_g4(m: int) -> int:
    poly = (m**8 - 32 * m**7 + 462 * m**6 - 3836 * m**5 + 20013 * m**4 - 66836 * m**3
            + 140804 * m**2 - 171216 * m + 100800)
    return _exact(m * (m + 2) * (m + 1) * poly, 120960, "G_4 diagonal")


def conjectured_diagonal_g5(m: int) -> int:
    poly = (m**10 - 50 * m**9 + 1140 * m**8 - 15420 * m**7 + 136533 * m**6 - 824370 * m**5
            + 3436190 * m**4 - 9762880 * m**3 + 18198936 * m**2 - 20242080 * m + 10886400)
    return _exact(m * (m + 3) * (m + 2) * (m + 1) * poly, 43545600, "G_5 diagonal")


_DIAGONALS = {4: conjectured_diagonal_g4, 5: conjectured_diagonal_g5}


def conjectured_diagonal_check(s: int, n: int) -> bool:
    """``g_s(n, n, s)(1)`` against the conjectured diagonal polynomial for ``s = 4, 5``.

    The polynomials are indexed from 1 (their value at 1 is the term for
    ``n = 0``), so the term for ``n`` is the polynomial at ``n + 1``.
    """
    if s not in _DIAGONALS:
        raise ValueError("conjectured diagonals exist for s = 4, 5")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _DIAGONALS[s](n + 1) == g_s(n, n, s).eval_at_one()


def central_binomial_convergence(s: int, n: int) -> bool:
    if n > s:
        raise ValueError("needs n <= s")
    return g_s(n, n, s).eval_at_one() == binomial(2 * n, n)
