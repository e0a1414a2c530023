"""Permutations, cycle graphs and Hultman numbers.

Permutations are given in one-line notation over ``{1..n}``.  The cycle
graph of ``p`` has vertices ``0..n``; black edges run
``p[n] -> p[n-1] -> ... -> p[1] -> 0 -> p[n]`` and grey edges run
``0 -> 1 -> ... -> n -> 0``.  The black edges alone form one big cycle of
``{0..n}``.  Composing the rotation ``m -> m+1`` with it gives a permutation
whose cycle count equals the number of alternating cycles of the graph.

>>> p = make_permutation([6, 5, 3, 1, 4, 2])
>>> big_black_cycle(p).order
(0, 2, 4, 1, 3, 5, 6)
>>> alternating_cycle_count(make_permutation([3, 2, 1]))
2
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import CapExceeded, InvalidPermutation

__all__ = [
    "Permutation",
    "BigCycle",
    "ExtendedPermutation",
    "HultmanTable",
    "DEFAULT_ENUMERATION_CAP",
    "make_permutation",
    "identity",
    "reversal",
    "big_black_cycle",
    "permutation_of_big_cycle",
    "circ_permutation",
    "alternating_cycle_count",
    "all_permutations",
    "hultman_table",
    "permutations_with_class",
]

# n! for n = 9 is 362 880; beyond that enumeration is impractical.
DEFAULT_ENUMERATION_CAP = 9


def _check_bijection(values: Sequence[int], low: int, high: int, what: str) -> None:
    seen = set()
    for idx, v in enumerate(values):
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidPermutation(f"{what}: entry {idx} ({v!r}) is not an integer", idx)
        if not low <= v <= high:
            raise InvalidPermutation(
                f"{what}: entry {idx} ({v}) is outside {low}..{high}", idx
            )
        if v in seen:
            raise InvalidPermutation(f"{what}: entry {idx} ({v}) is a duplicate", idx)
        seen.add(v)


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of ``{1..n}`` in one-line notation (1-based)."""

    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) == 0:
            raise InvalidPermutation("permutation must be nonempty", None)
        _check_bijection(self.images, 1, len(self.images), "permutation")

    @property
    def n(self) -> int:
        return len(self.images)

    def __len__(self):
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __getitem__(self, i: int) -> int:
        """1-based access: ``p[i]`` is the image of ``i``."""
        if not 1 <= i <= len(self.images):
            raise IndexError(i)
        return self.images[i - 1]

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))

    def __str__(self):
        return " ".join(map(str, self.images))

    def __repr__(self):
        return f"Permutation<{self}>"


@dataclass(frozen=True)
class BigCycle:
    """An (n+1)-cycle on ``{0..n}``, stored rotated so that it starts at 0."""

    order: tuple[int, ...]

    def __post_init__(self):
        _check_bijection(self.order, 0, len(self.order) - 1, "big cycle")
        if self.order[0] != 0:
            raise InvalidPermutation("big cycle must be stored starting at 0", 0)

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> BigCycle:
        """Build from any rotation of the cycle."""
        seq = tuple(seq)
        if 0 not in seq:
            raise InvalidPermutation("big cycle must contain 0", None)
        k = seq.index(0)
        return cls(seq[k:] + seq[:k])

    @property
    def n_plus_1(self) -> int:
        return len(self.order)

    def successor_map(self) -> list[int]:
        m = len(self.order)
        succ = [0] * m
        for i, v in enumerate(self.order):
            succ[v] = self.order[(i + 1) % m]
        return succ

    def __str__(self):
        return "(" + ",".join(map(str, self.order)) + ")"


@dataclass(frozen=True)
class ExtendedPermutation:
    """A permutation of ``{0..n}`` stored as its image list."""

    images: tuple[int, ...]

    def __post_init__(self):
        _check_bijection(self.images, 0, len(self.images) - 1, "extended permutation")

    @property
    def n_plus_1(self) -> int:
        return len(self.images)

    def __call__(self, m: int) -> int:
        return self.images[m]

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition, fixed points included, each cycle led by its minimum."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        return len(self.cycles())


@dataclass(frozen=True)
class HultmanTable:
    """``counts[k]`` is the number of permutations of S_n with k alternating cycles."""

    n: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def rows(self) -> list[tuple[int, int]]:
        return sorted(self.counts.items())


def make_permutation(one_line: Iterable[int]) -> Permutation:
    return Permutation(tuple(one_line))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def reversal(n: int) -> Permutation:
    """The permutation ``<n n-1 ... 1>``."""
    return Permutation(tuple(range(n, 0, -1)))


def big_black_cycle(p: Permutation) -> BigCycle:
    return BigCycle((0,) + tuple(reversed(p.images)))


def permutation_of_big_cycle(c: BigCycle) -> Permutation:
    return Permutation(tuple(reversed(c.order[1:])))


def circ_permutation(p: Permutation) -> ExtendedPermutation:
    # rotation first, then the black cycle: m -> black(m + 1)
    succ = big_black_cycle(p).successor_map()
    size = p.n + 1
    return ExtendedPermutation(tuple(succ[(m + 1) % size] for m in range(size)))


def alternating_cycle_count(p: Permutation) -> int:
    return circ_permutation(p).cycle_count()


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    if n > cap:
        raise CapExceeded(f"enumerating S_{n} exceeds the cap n <= {cap}")


def all_permutations(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    _check_cap(n, cap)
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def hultman_table(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> HultmanTable:
    counts: dict[int, int] = {}
    for p in all_permutations(n, cap):
        k = alternating_cycle_count(p)
        counts[k] = counts.get(k, 0) + 1
    table = HultmanTable(n, dict(sorted(counts.items())))
    assert table.total == math.factorial(n)
    return table


def permutations_with_class(
    n: int, k: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[Permutation]:
    return [p for p in all_permutations(n, cap) if alternating_cycle_count(p) == k]
