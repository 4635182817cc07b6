"""Partitions, permutations and cycle types.

Partitions are listed in descending lexicographic order everywhere in the
package; that order fixes the row/column order of every table we emit.
Permutations are 1-indexed one-line notation at the boundary; the hot loops
elsewhere work on the 0-indexed ``zero`` view.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition([3, 1, 1]).size, Partition([3, 1, 1]).length
    (5, 3)
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for k, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"partition parts must be positive integers, got {parts!r}")
            if k and parts[k - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts!r}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"3,1,1"``; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(t) for t in text.split(","))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        """Map part value ``i`` to the number of parts equal to ``i``."""
        return dict(Counter(self))

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return ",".join(map(str, self))


class Permutation(tuple):
    """A permutation of ``{1..n}`` in 1-indexed one-line notation.

    ``sigma(i)`` evaluates at a 1-indexed point; ``sigma.zero`` is the
    0-indexed image tuple used internally.
    """

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation in one-line notation: {images!r}")
        return super().__new__(cls, images)

    @classmethod
    def from_zero(cls, images: Sequence[int]) -> Permutation:
        return cls(i + 1 for i in images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self)

    @property
    def zero(self) -> tuple[int, ...]:
        return tuple(i - 1 for i in self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def compose(self, other: Permutation) -> Permutation:
        """``self ∘ other``: apply ``other`` first."""
        return Permutation(self[j - 1] for j in other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, j in enumerate(self, 1):
            inv[j - 1] = i
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles as 1-indexed tuples, each starting at its least element."""
        seen = [False] * len(self)
        out = []
        for start in range(1, len(self) + 1):
            if seen[start - 1]:
                continue
            cyc = []
            i = start
            while not seen[i - 1]:
                seen[i - 1] = True
                cyc.append(i)
                i = self[i - 1]
            out.append(tuple(cyc))
        return out

    def __repr__(self) -> str:
        return f"Permutation({list(self)})"


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions(n, n))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition((first,) + rest))
    return tuple(out)


def partition_count(n: int) -> int:
    """p(n) from Euler's pentagonal-number recurrence (independent of the generator)."""
    p = [1] + [0] * n
    for k in range(1, n + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > k:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[k - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= k:
                total += sign * p[k - g2]
            j += 1
        p[k] = total
    return p[n]


def z(rho: Sequence[int]) -> int:
    """Centralizer order ``prod_i i^{m_i} m_i!`` of a permutation of cycle type ``rho``."""
    return prod(i**k * factorial(k) for i, k in Counter(rho).items())


def class_size(rho: Sequence[int]) -> int:
    return factorial(sum(rho)) // z(rho)


def eps(rho: Sequence[int]) -> int:
    """Sign of a permutation of cycle type ``rho``: ``(-1)^(n - len(rho))``."""
    return -1 if (sum(rho) - len(rho)) % 2 else 1


def cycle_type(sigma: Sequence[int]) -> Partition:
    """Cycle type of a permutation given in 1-indexed one-line notation."""
    if not isinstance(sigma, Permutation):
        sigma = Permutation(sigma)
    return Partition(sorted((len(c) for c in sigma.cycles()), reverse=True))


def representative(rho: Sequence[int]) -> Permutation:
    """Canonical permutation of cycle type ``rho``: consecutive cycles ``(1..rho_1)(rho_1+1..)...``."""
    rho = Partition(rho)
    images = []
    start = 1
    for part in rho:
        images.extend(range(start + 1, start + part))
        images.append(start)
        start += part
    return Permutation(images)


def count_odd_part_partitions(n: int) -> int:
    return sum(1 for lam in partitions_of(n) if all(p % 2 for p in lam))


def iter_permutations(n: int) -> Iterator[tuple[int, ...]]:
    """All 0-indexed permutations of ``range(n)`` in lexicographic order."""
    return permutations(range(n))
