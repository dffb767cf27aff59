"""Integer partitions in frequency representation, with constrained enumeration.

A partition of ``k`` is stored as its multiplicities: ``freq`` is a tuple of
``(part, multiplicity)`` pairs with parts strictly decreasing, so ``[3, 2, 2, 1]``
is ``((3, 1), (2, 2), (1, 1))``, written ``[3,2^2,1]``.

Congruence constraints apply to each part individually (the only reading
used anywhere in this package).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator


@dataclass(frozen=True, order=False)
class Partition:
    k: int
    freq: tuple[tuple[int, int], ...]

    def __post_init__(self):
        total = 0
        prev = None
        for part, mult in self.freq:
            if part <= 0 or mult <= 0:
                raise ValueError(f"bad (part, multiplicity) pair {(part, mult)}")
            if prev is not None and part >= prev:
                raise ValueError("parts must be strictly decreasing in freq")
            prev = part
            total += part * mult
        if total != self.k:
            raise ValueError(f"parts sum to {total}, not {self.k}")

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        counts: dict[int, int] = {}
        for p in parts:
            counts[p] = counts.get(p, 0) + 1
        freq = tuple(sorted(counts.items(), reverse=True))
        return cls(sum(parts), freq)

    @classmethod
    def from_multiplicities(cls, mult: dict[int, int]) -> "Partition":
        freq = tuple(sorted(((p, m) for p, m in mult.items() if m), reverse=True))
        return cls(sum(p * m for p, m in freq), freq)

    @property
    def size(self) -> int:
        """Number of parts (written ``|lambda|``)."""
        return sum(m for _, m in self.freq)

    @property
    def largest(self) -> int:
        return self.freq[0][0] if self.freq else 0

    @property
    def smallest(self) -> int:
        return self.freq[-1][0] if self.freq else 0

    def multiplicity(self, part: int) -> int:
        for p, m in self.freq:
            if p == part:
                return m
        return 0

    def mult_vector(self) -> list[int]:
        """``d[i]`` = number of parts equal to ``i`` for ``0 <= i <= k``."""
        d = [0] * (self.k + 1)
        for p, m in self.freq:
            d[p] = m
        return d

    def parts(self) -> list[int]:
        """Non-increasing list form."""
        out = []
        for p, m in self.freq:
            out.extend([p] * m)
        return out

    def is_distinct(self) -> bool:
        return all(m == 1 for _, m in self.freq)

    def conjugate(self) -> "Partition":
        parts = self.parts()
        conj = [sum(1 for p in parts if p > i) for i in range(self.largest)]
        return Partition.from_parts(conj)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) if m == 1 else f"{p}^{m}" for p, m in self.freq) + "]"


@dataclass(frozen=True)
class PartitionConstraints:
    """Declarative restrictions on partitions; ``None`` means unrestricted.

    ``min_gap`` bounds the difference between consecutive parts of the
    non-increasing list; ``distinct=True`` is the same as ``min_gap >= 1``.
    ``congruence`` is ``(modulus, allowed residues)`` and applies to each part.
    """

    min_part: int | None = None
    max_part: int | None = None
    min_size: int | None = None
    max_size: int | None = None
    min_gap: int | None = None
    congruence: tuple[int, frozenset[int]] | None = None
    allowed_parts: frozenset[int] | None = None
    distinct: bool = False

    def __post_init__(self):
        if self.congruence is not None:
            m, res = self.congruence
            if m <= 0:
                raise ValueError("congruence modulus must be positive")
            object.__setattr__(self, "congruence", (m, frozenset(r % m for r in res)))
        if self.allowed_parts is not None:
            object.__setattr__(self, "allowed_parts", frozenset(self.allowed_parts))

    @property
    def gap(self) -> int:
        g = self.min_gap or 0
        return max(g, 1) if self.distinct else g

    def is_empty(self) -> bool:
        return self == UNCONSTRAINED

    def part_ok(self, p: int) -> bool:
        if self.min_part is not None and p < self.min_part:
            return False
        if self.max_part is not None and p > self.max_part:
            return False
        if self.allowed_parts is not None and p not in self.allowed_parts:
            return False
        if self.congruence is not None:
            m, res = self.congruence
            if p % m not in res:
                return False
        return True

    def describe(self) -> dict:
        out = {}
        for name in ("min_part", "max_part", "min_size", "max_size", "min_gap"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v
        if self.congruence is not None:
            out["congruence"] = [self.congruence[0], sorted(self.congruence[1])]
        if self.allowed_parts is not None:
            out["allowed_parts"] = sorted(self.allowed_parts)
        if self.distinct:
            out["distinct"] = True
        return out


UNCONSTRAINED = PartitionConstraints()


def satisfies(lam: Partition, c: PartitionConstraints) -> bool:
    """Check every active constraint directly on the list form."""
    parts = lam.parts()
    if c.min_size is not None and len(parts) < c.min_size:
        return False
    if c.max_size is not None and len(parts) > c.max_size:
        return False
    if not all(c.part_ok(p) for p in parts):
        return False
    gap = c.gap
    return all(parts[i] - parts[i + 1] >= gap for i in range(len(parts) - 1))


def enumerate_partitions(k: int, c: PartitionConstraints = UNCONSTRAINED) -> list[Partition]:
    """All partitions of ``k`` meeting ``c``, in reverse-lexicographic order."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return list(_enumerate_cached(k, c))


@lru_cache(maxsize=4096)
def _enumerate_cached(k: int, c: PartitionConstraints) -> tuple[Partition, ...]:
    return tuple(iter_partitions(k, c))


def iter_partitions(k: int, c: PartitionConstraints = UNCONSTRAINED) -> Iterator[Partition]:
    if k == 0:
        if not c.min_size:
            yield Partition(0, ())
        return
    gap = c.gap
    min_part = max(c.min_part or 1, 1)
    max_size = c.max_size if c.max_size is not None else k
    min_size = c.min_size or 0
    top = k if c.max_part is None else min(k, c.max_part)
    parts: list[int] = []

    def descend(remaining: int, cap: int):
        # cap: largest part allowed next
        if remaining == 0:
            if len(parts) >= min_size:
                yield Partition.from_parts(parts)
            return
        if len(parts) >= max_size:
            return
        for p in range(min(cap, remaining), min_part - 1, -1):
            if not c.part_ok(p):
                continue
            parts.append(p)
            yield from descend(remaining - p, p - gap)
            parts.pop()

    yield from descend(k, top)


def partition_count(k: int) -> int:
    """Partition function ``p(k)`` via Euler's pentagonal-number recurrence."""
    if k < 0:
        return 0
    p = [1] + [0] * k
    for n in range(1, k + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[n - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            j += 1
        p[n] = total
    return p[k]


def max_feasible_size(k: int, min_part: int, gap: int) -> int:
    """Largest ``s`` for which some partition of ``k`` has ``s`` parts,
    smallest part ``>= min_part`` and consecutive differences ``>= gap``.

    The cheapest such partition is ``min_part, min_part + gap, ...`` with sum
    ``s * (2 * min_part + gap * (s - 1)) / 2``.
    """
    if min_part < 1:
        raise ValueError("min_part must be positive")
    if gap < 0:
        raise ValueError("gap must be nonnegative")
    s = 0
    while (s + 1) * (2 * min_part + gap * s) <= 2 * k:
        s += 1
    return s


def format_partitions(parts: list[Partition]) -> str:
    return "\n".join(str(p) for p in parts)
