"""Partitions, wedge indices and the dictionary between them.

A wedge index ``k = (k_1 < ... < k_d)`` labels the exterior monomial
``phi_{k_1} ^ ... ^ phi_{k_d}``; the matching partition has i-th smallest
part ``k_i - i + 1``.  Partitions are always stored weakly decreasing with
no zero parts.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, NamedTuple


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        # tolerate trailing zeros on input, never store them
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for p in parts:
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"


class WedgeIndex(tuple):
    """Strictly increasing tuple of non-negative generator labels."""

    def __new__(cls, indices: Iterable[int] = ()):
        indices = tuple(int(k) for k in indices)
        if any(k < 0 for k in indices):
            raise ValueError(f"wedge indices must be non-negative: {indices}")
        if any(a >= b for a, b in zip(indices, indices[1:])):
            raise ValueError(f"wedge indices must be strictly increasing: {indices}")
        return super().__new__(cls, indices)

    @property
    def degree(self) -> int:
        return len(self)

    def __repr__(self):
        return f"WedgeIndex({tuple(self)!r})"


class BoxShape(NamedTuple):
    """A ``d x (n - d)`` rectangle: ``d`` rows inside an ambient ``n``."""

    d: int
    n: int

    @property
    def columns(self) -> int:
        return self.n - self.d

    def validate(self) -> "BoxShape":
        if not 0 <= self.d <= self.n:
            raise ValueError(f"need 0 <= d <= n, got d={self.d}, n={self.n}")
        return self


def index_to_partition(k: Iterable[int]) -> Partition:
    k = WedgeIndex(k)
    parts = [ki - i for i, ki in enumerate(k)]
    return Partition(sorted((p for p in parts if p), reverse=True))


def partition_to_index(lam: Iterable[int], d: int) -> WedgeIndex:
    lam = Partition(lam)
    if len(lam) > d:
        raise ValueError(f"partition {tuple(lam)} has more than {d} parts")
    ascending = [0] * (d - len(lam)) + list(reversed(lam))
    return WedgeIndex(p + i for i, p in enumerate(ascending))


def transpose(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def fits_box(lam: Iterable[int], box: BoxShape) -> bool:
    lam = Partition(lam)
    d, n = box
    return len(lam) <= d and (not lam or lam[0] <= n - d)


def transpose_index(k: Iterable[int], n: int) -> WedgeIndex:
    """Index of the transposed partition, re-encoded at the complementary degree.

    For ``k`` with entries below ``n`` the result ``k'`` satisfies
    ``{k_i} | {n - 1 - k'_j} == {0, ..., n - 1}`` as a disjoint union.
    """
    k = WedgeIndex(k)
    if len(k) > n:
        raise ValueError(f"degree {len(k)} exceeds n={n}")
    if k and k[-1] >= n:
        raise ValueError(f"index {tuple(k)} has an entry >= n={n}")
    return partition_to_index(transpose(index_to_partition(k)), n - len(k))


def box_partitions(box: BoxShape) -> Iterator[Partition]:
    """All partitions fitting ``box``; there are ``C(n, d)`` of them."""
    d, n = box.validate()
    for k in combinations(range(n), d):
        yield index_to_partition(k)


def wedge_indices(n: int, d: int | None = None) -> Iterator[WedgeIndex]:
    """Basis labels of the exterior algebra on ``phi_0 .. phi_{n-1}``, by degree."""
    degrees = range(n + 1) if d is None else (d,)
    for deg in degrees:
        for k in combinations(range(n), deg):
            yield WedgeIndex(k)
