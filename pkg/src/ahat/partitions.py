"""Integer partitions in the canonical ordering used throughout the package.

Partitions of weight k index both the Pontrjagin monomials p_lambda and the
products of generator manifolds, so one fixed ordering is pinned here:
descending lexicographic on the part tuples.  That puts (k) first and
(1,...,1) last, which keeps the "all-Kummer column" of every evaluation
matrix in a predictable position.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


class Partition:
    """A weakly decreasing tuple of positive integers.

    Immutable and hashable, so partitions can key coefficient maps directly.
    The empty partition () has weight 0.
    """

    __slots__ = ("_parts", "_weight")

    def __init__(self, parts=()):
        if isinstance(parts, Partition):
            self._parts = parts._parts
            self._weight = parts._weight
            return
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {p}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        self._parts = parts
        self._weight = sum(parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def weight(self) -> int:
        return self._weight

    def __iter__(self):
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, i):
        return self._parts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({self._parts!r})"

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self._parts) + "]"


def _descending(remaining: int, largest: int):
    if remaining == 0:
        yield ()
        return
    for first in range(min(remaining, largest), 0, -1):
        for rest in _descending(remaining - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(k: int) -> tuple[Partition, ...]:
    """All partitions of weight k, in descending lexicographic order."""
    if k < 0:
        raise ValueError(f"weight must be nonnegative, got {k}")
    return tuple(Partition(p) for p in _descending(k, k))


@lru_cache(maxsize=None)
def _index_table(k: int) -> dict[Partition, int]:
    return {p: i for i, p in enumerate(partitions_of(k))}


def partition_index(p: Partition) -> int:
    """Position of p within partitions_of(p.weight)."""
    return _index_table(p.weight)[p]


def partition_splittings(p: Partition) -> tuple[tuple[Partition, Partition], ...]:
    """All ordered pairs (mu, nu) whose parts merge, as multisets, to p's.

    There are prod(mult_v + 1) pairs, one per sub-multiset; (p, ()) comes
    first and ((), p) last.
    """
    values = sorted(set(p.parts), reverse=True)
    mults = [p.parts.count(v) for v in values]
    pairs = []
    for take in itertools.product(*(range(m, -1, -1) for m in mults)):
        mu, nu = [], []
        for v, m, t in zip(values, mults, take):
            mu.extend([v] * t)
            nu.extend([v] * (m - t))
        pairs.append((Partition(mu), Partition(nu)))
    return tuple(pairs)
