"""Structural certificates for polynomials: darga, symmetry, unimodality,
log-concavity, gamma-vectors and atomic decompositions.

Sequence properties are read over the dense coefficient range between the
least and greatest exponent, so internal zeros count.  The zero polynomial
counts as symmetric and unimodal (it shows up as a vanishing summand of
every darga); asking for its darga is an error.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotSymmetric, NotSymmetricUnimodal, ZeroPolynomial
from .qpoly import QPoly


def _support(p: QPoly) -> tuple[int, ...]:
    lo = p.low_degree
    return p.coeffs[lo:] if lo >= 0 else ()


def darga(p: QPoly) -> int:
    """Sum of the lowest and highest exponents."""
    if not p:
        raise ZeroPolynomial("darga of the zero polynomial is undefined")
    return p.low_degree + p.degree


def is_symmetric(p: QPoly) -> bool:
    c = _support(p)
    return c == c[::-1]


def is_unimodal(p: QPoly) -> bool:
    c = _support(p)
    i = 1
    while i < len(c) and c[i] >= c[i - 1]:
        i += 1
    while i < len(c) and c[i] <= c[i - 1]:
        i += 1
    return i >= len(c)


def is_sym_uni(p: QPoly, m: int | None = None) -> bool:
    """Symmetric and unimodal, and of darga ``m`` when ``m`` is given."""
    if not p:
        return True
    if m is not None and darga(p) != m:
        return False
    return is_symmetric(p) and is_unimodal(p)


def is_log_concave(p: QPoly) -> bool:
    c = _support(p)
    return all(c[i] * c[i] >= c[i - 1] * c[i + 1] for i in range(1, len(c) - 1))


def is_nonnegative(p: QPoly) -> bool:
    return all(c >= 0 for c in p.coeffs)


@dataclass(frozen=True)
class AtomicDecomposition:
    """``sum(c * (q^r + ... + q^(m-r)) for c, r in atoms)``."""

    m: int
    atoms: tuple[tuple[int, int], ...]

    def reconstruct(self) -> QPoly:
        out = [0] * (self.m + 1)
        for c, r in self.atoms:
            for e in range(r, self.m - r + 1):
                out[e] += c
        return QPoly(out)


def atomic_decomposition(p: QPoly, m: int) -> AtomicDecomposition:
    """Peel ``p`` into centred runs; exists iff ``p`` is symmetric unimodal of darga ``m``.

    The atom starting at exponent ``r`` has weight ``a_r - a_{r-1}``, which
    must be positive wherever it is nonzero.
    """
    if not p:
        return AtomicDecomposition(m, ())
    if m < 0 or p.degree > m or darga(p) != m or not is_symmetric(p):
        raise NotSymmetricUnimodal(f"not symmetric of darga {m}")
    atoms = []
    prev = 0
    for r in range(m // 2 + 1):
        c = p[r] - prev
        if c < 0:
            raise NotSymmetricUnimodal(f"coefficients fall before the middle at q^{r}")
        if c:
            atoms.append((c, r))
        prev = p[r]
    return AtomicDecomposition(m, tuple(atoms))


@dataclass(frozen=True)
class GammaVector:
    m: int
    gamma: tuple[int, ...]

    def reconstruct(self) -> QPoly:
        out = QPoly.zero()
        one_plus_q = QPoly((1, 1))
        for j, g in enumerate(self.gamma):
            if g:
                out = out + (one_plus_q ** (self.m - 2 * j)).shift(j) * g
        return out

    def is_nonnegative(self) -> bool:
        return all(g >= 0 for g in self.gamma)


def gamma_vector(p: QPoly, m: int) -> GammaVector:
    """Coordinates of ``p`` in the basis ``q^j (1+q)^(m-2j)``.

    ``p`` must satisfy ``a_i = a_{m-i}`` for ``0 <= i <= m``.  Eliminates from
    the top degree down; every basis element is monic, so no division.
    """
    if m < 0:
        raise NotSymmetric("m must be nonnegative")
    if p.degree > m or any(p[i] != p[m - i] for i in range(m + 1)):
        raise NotSymmetric(f"not symmetric about m/2 = {m}/2")
    rem = list(p.coeffs) + [0] * (m + 1 - len(p.coeffs))
    gamma = [0] * (m // 2 + 1)
    for j in range(m // 2 + 1):
        top = m - j
        g = rem[top]
        gamma[j] = g
        if g:
            # q^j (1+q)^(m-2j): binomial row shifted by j
            row = 1
            width = m - 2 * j
            for t in range(width + 1):
                rem[j + t] -= g * row
                row = row * (width - t) // (t + 1)
    return GammaVector(m, tuple(gamma))


def is_gamma_nonnegative(p: QPoly, m: int) -> bool:
    try:
        return gamma_vector(p, m).is_nonnegative()
    except NotSymmetric:
        return False


def report(p: QPoly) -> dict:
    """Everything the ``check`` command prints, as plain data."""
    out = {
        "symmetric": is_symmetric(p),
        "unimodal": is_unimodal(p),
        "log_concave": is_log_concave(p),
        "nonnegative": is_nonnegative(p),
        "darga": darga(p) if p else None,
    }
    gamma = None
    if p and out["symmetric"]:
        gv = gamma_vector(p, darga(p))
        gamma = [str(g) for g in gv.gamma]
        out["gamma_nonnegative"] = gv.is_nonnegative()
    else:
        out["gamma_nonnegative"] = None
    out["gamma"] = gamma
    return out
