"""The KOH recurrence and its perturbations.

The plain recurrence writes ``G(n, k)`` as a sum over partitions ``lambda`` of
``k`` (multiplicities ``d_i``) of

    q^(k|lambda| - k - sum_{j<i} (i-j) d_i d_j)
        * prod_{i=0}^{k-1} G((k-i) n - 2i + 2 sum_{j<i} (i-j) d_{k-j}, d_{k-i})

and every summand is symmetric and unimodal of darga ``nk``.  The engine here
evaluates the generalized form with shift parameters ``a``, ``b``

    exponent  (k+b)|lambda| + k(a-1) - sum_{j<i} (i-j) d_i d_j
    argument  (k-i)(n-2a) - 2(i+b) + 2 sum_{j<i} (i-j) d_{k-j}

restricted to a set of partitions, with a nonnegative weight ``rho(lambda)``
on every summand and initial conditions scaled by ``nu``:

    G(n<0, k) = G(n, k<0) = 0,  G(0, k) = G(n, 0) = nu,  G(n, 1) = nu [n+1]_q.

Recursive calls with ``n' <= 0`` or ``k' <= 1`` use the initial conditions.
The outermost call always expands its weighted sum (for ``k >= 1``), so a
top-level ``k = 1`` carries its weight and its ``q^(a+b)`` shift.  With the
default configuration both readings coincide and ``koh(n, k) == G(n, k)``.

A third shift parameter that multiplies the recursive ``k`` is deliberately
absent: positive values force zero and negative ones never terminate.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from .errors import OutOfValidityRange, UnsupportedShape
from .partitions import (
    UNCONSTRAINED,
    Partition,
    PartitionConstraints,
    enumerate_partitions,
)
from .qbinom import gnk_product
from .qpoly import QPoly

_ZERO = QPoly.zero()
_ONE = QPoly.one()


@dataclass(frozen=True)
class Rho:
    """Per-partition weight scheme.

    ``kind`` is one of ``constant``, ``size`` (keyed by number of parts),
    ``largest`` (keyed by largest part) or ``partition`` (keyed by the
    partition itself).  Keys missing from a table get ``default``.
    """

    kind: str = "constant"
    value: int = 1
    table: tuple = ()
    default: int = 1

    def __post_init__(self):
        if self.kind not in ("constant", "size", "largest", "partition"):
            raise ValueError(f"unknown weight scheme {self.kind!r}")
        if isinstance(self.table, dict):
            object.__setattr__(self, "table", tuple(sorted(self.table.items(), key=_key_order)))
        if self.value < 0 or self.default < 0 or any(w < 0 for _, w in self.table):
            raise ValueError("weights must be nonnegative")

    @classmethod
    def constant(cls, w: int) -> "Rho":
        return cls("constant", value=w)

    @classmethod
    def by_size(cls, table: dict[int, int], default: int = 1) -> "Rho":
        return cls("size", table=table, default=default)

    @classmethod
    def by_largest(cls, table: dict[int, int], default: int = 1) -> "Rho":
        return cls("largest", table=table, default=default)

    @classmethod
    def per_partition(cls, table: dict[Partition, int], default: int = 1) -> "Rho":
        return cls("partition", table=table, default=default)

    @property
    def is_constant(self) -> bool:
        return self.kind == "constant"

    def weight(self, lam: Partition) -> int:
        if self.kind == "constant":
            return self.value
        key = {"size": lam.size, "largest": lam.largest, "partition": lam}[self.kind]
        return self._lookup().get(key, self.default)

    def _lookup(self) -> dict:
        cache = self.__dict__.get("_dict")
        if cache is None:
            cache = dict(self.table)
            object.__setattr__(self, "_dict", cache)
        return cache


def _key_order(item):
    key = item[0]
    if isinstance(key, Partition):
        return (key.k, tuple(-p for p in key.parts()))
    return (key,)


@dataclass(frozen=True)
class KohConfig:
    constraints: PartitionConstraints = UNCONSTRAINED
    a: int = 0
    b: int = 0
    nu: int = 1
    rho: Rho = field(default_factory=Rho)
    normalize: bool = False

    def __post_init__(self):
        if self.nu <= 0:
            raise ValueError("nu must be a positive integer")

    @property
    def is_default(self) -> bool:
        return self == DEFAULT_CONFIG


DEFAULT_CONFIG = KohConfig()


@dataclass(frozen=True)
class ContributionBreakdown:
    entries: tuple[tuple[Partition, QPoly], ...]
    total: QPoly

    def nonzero(self):
        return [(lam, p) for lam, p in self.entries if p]


# -- the summand -----------------------------------------------------------------


def pair_interaction(lam: Partition) -> int:
    """``sum_{j<i} (i-j) d_i d_j`` over part sizes."""
    freq = lam.freq
    total = 0
    for x in range(len(freq)):
        pi, di = freq[x]
        for y in range(x + 1, len(freq)):
            pj, dj = freq[y]
            total += (pi - pj) * di * dj
    return total


def recursive_arguments(n: int, k: int, lam: Partition, a: int = 0, b: int = 0) -> list[tuple[int, int]]:
    """The ``(n', k')`` pairs of the product, for ``i = 0 .. k-1``."""
    d = lam.mult_vector()
    out = []
    s = 0  # sum_{j<i} (i-j) d_{k-j}
    c = 0  # sum_{j<i} d_{k-j}
    for i in range(k):
        out.append(((k - i) * (n - 2 * a) - 2 * (i + b) + 2 * s, d[k - i]))
        c += d[k - i]
        s += c
    return out


def summand_exponent(k: int, lam: Partition, a: int = 0, b: int = 0) -> int:
    return (k + b) * lam.size + k * (a - 1) - pair_interaction(lam)


def _summand(n: int, k: int, lam: Partition, a: int, b: int, nu: int,
             inner: Callable[[int, int], QPoly]) -> QPoly:
    """One unweighted term; ``inner`` supplies ``G(n', k')`` for ``k' >= 2, n' >= 1``."""
    scalar = 1
    brackets = []
    polys = []
    for n1, k1 in recursive_arguments(n, k, lam, a, b):
        if n1 < 0:
            return _ZERO
        if k1 == 0 or n1 == 0:
            scalar *= nu
        elif k1 == 1:
            scalar *= nu
            brackets.append(n1 + 1)
        else:
            g = inner(n1, k1)
            if not g:
                return _ZERO
            polys.append(g)
    e = summand_exponent(k, lam, a, b)
    if e < 0:
        raise ValueError(f"term for {lam} needs q^{e}; Laurent results are not supported")
    out = QPoly.monomial(e, scalar)
    for p in sorted(polys, key=len):
        out = out * p
    for m in brackets:
        out = out.times_bracket(m)
    return out


# -- memoized engine -------------------------------------------------------------


@lru_cache(maxsize=None)
def _expand(n: int, k: int, cfg: KohConfig) -> QPoly:
    """Weighted partition sum at ``(n, k)``, ``n >= 0``, ``k >= 1``, unnormalized."""
    inner = _inner_for(cfg)
    total = _ZERO
    for lam in enumerate_partitions(k, cfg.constraints):
        w = cfg.rho.weight(lam)
        if not w:
            continue
        term = _summand(n, k, lam, cfg.a, cfg.b, cfg.nu, inner)
        if term:
            total = total + term * w
    return total


def _inner_for(cfg: KohConfig) -> Callable[[int, int], QPoly]:
    def inner(n1: int, k1: int) -> QPoly:
        return _expand(n1, k1, cfg)
    return inner


def initial_value(n: int, k: int, nu: int = 1) -> QPoly | None:
    """Initial condition at ``(n, k)``, or ``None`` if the sum must be expanded."""
    if n < 0 or k < 0:
        return _ZERO
    if k == 0 or n == 0:
        return QPoly.constant(nu)
    if k == 1:
        return QPoly.geometric(n + 1) * nu
    return None


def _normalize(p: QPoly, k: int, cfg: KohConfig) -> QPoly:
    if not cfg.normalize:
        return p
    div = cfg.nu ** max(k, 0)
    if cfg.rho.is_constant and cfg.rho.value > 0:
        div *= cfg.rho.value
    return p.scale_div(div) if div != 1 else p


def koh(n: int, k: int) -> QPoly:
    """``G(n, k)`` computed purely by the KOH recurrence."""
    return koh_restricted(n, k, DEFAULT_CONFIG)


def koh_restricted(n: int, k: int, cfg: KohConfig = DEFAULT_CONFIG) -> QPoly:
    if n < 0 or k < 0:
        return _ZERO
    if k == 0:
        return _normalize(QPoly.constant(cfg.nu), 0, cfg)
    return _normalize(_expand(n, k, cfg), k, cfg)


# -- size-restricted sums ----------------------------------------------------------


@lru_cache(maxsize=None)
def size_contribution(n: int, k: int, t: int) -> QPoly:
    """Sum of the terms for partitions of ``k`` with exactly ``t`` parts.

    Inner factors use the plain q-binomial: every ``k'`` is a multiplicity,
    hence at most ``t``, and restricting by size cannot change such a factor.
    """
    if n < 0 or k < 1 or t < 1 or t > k:
        return _ZERO
    total = _ZERO
    for lam in enumerate_partitions(k, PartitionConstraints(min_size=t, max_size=t)):
        total = total + _summand(n, k, lam, 0, 0, 1, gnk_product)
    return total


def g_s(n: int, k: int, s: int) -> QPoly:
    """KOH sum restricted to partitions with at most ``s`` parts."""
    if s < 1:
        raise ValueError("s must be positive")
    if n < 0 or k < 0:
        return _ZERO
    if k == 0:
        return _ONE
    if k <= s:
        return gnk_product(n, k)
    return _g_s(n, k, s)


@lru_cache(maxsize=None)
def _g_s(n: int, k: int, s: int) -> QPoly:
    if s == 1:
        return size_contribution(n, k, 1)
    return _g_s(n, k, s - 1) + size_contribution(n, k, s)


# -- single terms and breakdowns -------------------------------------------------


def partition_contribution(n: int, k: int, lam: Partition) -> QPoly:
    """The single-``lam`` summand of the plain recurrence."""
    if lam.k != k:
        raise ValueError(f"{lam} does not partition {k}")
    if n < 0 or k < 1:
        return _ZERO
    return _summand(n, k, lam, 0, 0, 1, _inner_for(DEFAULT_CONFIG))


def contribution_breakdown(n: int, k: int, cfg: KohConfig = DEFAULT_CONFIG) -> ContributionBreakdown:
    """One weighted entry per admissible partition; entries sum to the total.

    With ``cfg.normalize`` each entry is normalized on its own (each carries
    at least ``nu^k`` and exactly one outer weight).
    """
    if n < 0 or k < 1:
        total = koh_restricted(n, k, cfg)
        return ContributionBreakdown((), total)
    inner = _inner_for(cfg)
    entries = []
    total = _ZERO
    for lam in enumerate_partitions(k, cfg.constraints):
        w = cfg.rho.weight(lam)
        term = _summand(n, k, lam, cfg.a, cfg.b, cfg.nu, inner) * w if w else _ZERO
        term = _normalize(term, k, cfg)
        entries.append((lam, term))
        total = total + term
    return ContributionBreakdown(tuple(entries), total)


# -- closed forms for characterized shapes -----------------------------------------


def _br(m: int) -> QPoly:
    return QPoly.geometric(m)


def classify_shape(lam: Partition) -> str:
    freq = lam.freq
    if len(freq) == 1:
        part, mult = freq[0]
        if mult == 1:
            return "single"
        return "equal"
    if lam.size == 2:
        return "two-part"
    if lam.size == 3:
        if len(freq) == 3:
            return "distinct-triple"
        (p0, m0), (p1, m1) = freq
        return "big-then-pair" if m0 == 1 else "pair-then-small"
    return "unsupported"


_MIN_N = {"single": 0, "two-part": 2, "distinct-triple": 4, "big-then-pair": 4, "pair-then-small": 4}


def characterized_contribution(n: int, k: int, lam: Partition) -> QPoly:
    """Closed form of the ``lam`` summand for the shapes with known formulas.

    Shapes: ``[k]``, ``[(k/l)^l]`` (including ``[1^k]``, ``[(k/2)^2]``,
    ``[(k/3)^3]``), ``[k-l, l]``, ``[k-2l, l^2]`` (``l < k/3``),
    ``[l^2, k-2l]`` (``k/3 < l < k/2``) and three distinct parts.
    """
    if lam.k != k:
        raise ValueError(f"{lam} does not partition {k}")
    shape = classify_shape(lam)
    if shape == "unsupported":
        raise UnsupportedShape(f"no closed form for {lam}")
    if shape == "equal":
        part, mult = lam.freq[0]
        min_n = 2 * (mult - 1)
    else:
        min_n = _MIN_N[shape]
    if n < min_n:
        raise OutOfValidityRange(f"{lam}: closed form needs n >= {min_n}, got {n}")

    if shape == "single":
        return _br(n * k + 1)
    if shape == "equal":
        part, ell = lam.freq[0]
        return gnk_product(part * (n - 2 * (ell - 1)), ell).shift(k * (ell - 1))
    if shape == "two-part":
        ell = lam.smallest
        return _br((k - ell) * n - 2 * ell + 1).times_bracket(ell * n - 2 * ell + 1).shift(2 * ell)
    if shape == "distinct-triple":
        l1, l2, l3 = lam.parts()
        out = _br(l1 * n - 2 * (l2 + l3) + 1)
        out = out.times_bracket(l2 * n - 2 * (l2 + l3) + 1)
        out = out.times_bracket(l3 * (n - 4) + 1)
        return out.shift(2 * (l2 + 2 * l3))
    if shape == "big-then-pair":
        ell = lam.smallest
        return (gnk_product(ell * n - 4 * ell, 2)
                .times_bracket((k - 2 * ell) * n - 4 * ell + 1)
                .shift(6 * ell))
    # pair-then-small: [l^2, k-2l]
    ell = lam.largest
    return (gnk_product(ell * n - 2 * k + 2 * ell, 2)
            .times_bracket((k - 2 * ell) * n + 8 * ell - 4 * k + 1)
            .shift(4 * k - 6 * ell))


# -- random weighted instances -----------------------------------------------------


@dataclass(frozen=True)
class RandomTheorem:
    k: int
    cfg: KohConfig
    instances: tuple[tuple[int, QPoly], ...]
    certificates: tuple[ContributionBreakdown, ...]


def random_weights(k: int, weight_bound: int, seed: int, min_weight: int = 0) -> Rho:
    """Independent uniform weights in ``[min_weight, weight_bound]`` for every
    partition of every ``1 <= j <= k`` (recursive calls see smaller ``j``)."""
    if not 0 <= min_weight <= weight_bound:
        raise ValueError("need 0 <= min_weight <= weight_bound")
    rng = random.Random(seed)
    table = {}
    for j in range(1, k + 1):
        for lam in enumerate_partitions(j):
            table[lam] = rng.randint(min_weight, weight_bound)
    return Rho.per_partition(table)


def random_theorem(k: int, weight_bound: int, seed: int, n_values: Iterable[int] = range(0, 9),
                   min_weight: int = 0) -> RandomTheorem:
    """Weighted recurrence at several ``n`` with a breakdown per instance.

    Each breakdown is a certificate: its entries are products and shifts of
    symmetric unimodal pieces of darga ``nk``, so their sum is too.
    """
    if k < 1:
        raise ValueError("k must be positive")
    cfg = KohConfig(rho=random_weights(k, weight_bound, seed, min_weight))
    instances = []
    certs = []
    for n in n_values:
        bd = contribution_breakdown(n, k, cfg)
        instances.append((n, koh_restricted(n, k, cfg)))
        certs.append(bd)
    return RandomTheorem(k, cfg, tuple(instances), tuple(certs))


def cache_info() -> dict:
    out = {}
    for name, fn in (("koh_expand", _expand), ("size_contribution", size_contribution), ("g_s", _g_s)):
        info = fn.cache_info()
        out[name] = {"hits": info.hits, "misses": info.misses, "size": info.currsize}
    return out
