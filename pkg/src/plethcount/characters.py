"""Symmetric group characters and class-function arithmetic.

Characters are evaluated with the Murnaghan-Nakayama rule on beta-sets
(abacus positions): removing a border strip of length ``k`` is moving one
bead down ``k`` places into an empty slot, with sign ``(-1)^{beads jumped}``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Callable, Iterable, Mapping

from .errors import GuardExceeded, Report
from .partitions import (
    Partition,
    Permutation,
    iter_permutations,
    partitions_of,
    representative,
    z,
)

SQRT_COUNT_MAX_K = 8


@dataclass(frozen=True)
class ClassFunction:
    """An exact rational-valued function on the cycle types of ``S_n``."""

    n: int
    values: Mapping[Partition, Fraction]

    def __post_init__(self):
        vals = {Partition(k): Fraction(v) for k, v in self.values.items()}
        expected = set(partitions_of(self.n))
        if set(vals) != expected:
            raise ValueError(f"class function on S_{self.n} must be defined on every cycle type")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_function(cls, n: int, f: Callable[[Partition], Rational]) -> ClassFunction:
        return cls(n, {rho: f(rho) for rho in partitions_of(n)})

    @classmethod
    def constant(cls, n: int, c: Rational = 1) -> ClassFunction:
        return cls.from_function(n, lambda rho: c)

    def __call__(self, rho: Iterable[int]) -> Fraction:
        return self.values[Partition(rho)]

    def items(self):
        """``(rho, value)`` pairs in descending lexicographic order of ``rho``."""
        return [(rho, self.values[rho]) for rho in partitions_of(self.n)]

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values.values())

    def _check(self, other: ClassFunction) -> None:
        if self.n != other.n:
            raise ValueError(f"degree mismatch: S_{self.n} vs S_{other.n}")

    def __add__(self, other: ClassFunction) -> ClassFunction:
        self._check(other)
        return ClassFunction(self.n, {k: v + other.values[k] for k, v in self.values.items()})

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        self._check(other)
        return ClassFunction(self.n, {k: v - other.values[k] for k, v in self.values.items()})

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.n, {k: v * other.values[k] for k, v in self.values.items()})
        return ClassFunction(self.n, {k: v * other for k, v in self.values.items()})

    __rmul__ = __mul__

    def __neg__(self) -> ClassFunction:
        return self * -1


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """``sum_rho f(rho) g(rho) / z_rho``.

    No conjugation: every class function here is rational-valued.
    """
    f._check(g)
    return sum((f.values[rho] * g.values[rho] / z(rho) for rho in partitions_of(f.n)), Fraction(0))


def _beta(lam: tuple[int, ...]) -> list[int]:
    ell = len(lam)
    return [p + ell - 1 - i for i, p in enumerate(lam)]


def _from_beta(beta: Iterable[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    ell = len(beta)
    return tuple(p for p in (b - (ell - 1 - i) for i, b in enumerate(beta)) if p > 0)


class CharacterContext:
    """Memo for Murnaghan-Nakayama values and per-degree character tables.

    Keys are ``(shape, remaining cycle parts)``; tables are built once per
    ``n`` and never mutated afterwards.
    """

    def __init__(self):
        self._memo: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
        self._tables: dict[int, dict[Partition, dict[Partition, int]]] = {}

    def value(self, lam: Iterable[int], rho: Iterable[int]) -> int:
        lam = tuple(Partition(lam))
        rho = tuple(sorted(rho, reverse=True))
        if sum(lam) != sum(rho):
            raise ValueError(f"size mismatch: {lam} vs {rho}")
        return self._mn(lam, rho)

    def _mn(self, lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
        if not rho:
            return 1
        key = (lam, rho)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        k, rest = rho[0], rho[1:]
        beta = _beta(lam)
        occupied = set(beta)
        total = 0
        for b in beta:
            t = b - k
            if t < 0 or t in occupied:
                continue
            jumped = sum(1 for c in beta if t < c < b)
            new = _from_beta([t if c == b else c for c in beta])
            total += (-1) ** jumped * self._mn(new, rest)
        self._memo[key] = total
        return total

    def table(self, n: int) -> dict[Partition, dict[Partition, int]]:
        """``table[lam][rho] = chi^lam(rho)`` for all ``lam, rho |- n``."""
        tab = self._tables.get(n)
        if tab is None:
            parts = partitions_of(n)
            tab = {lam: {rho: self._mn(tuple(lam), tuple(rho)) for rho in parts} for lam in parts}
            self._tables[n] = tab
        return tab


_default_context = CharacterContext()


def default_context() -> CharacterContext:
    return _default_context


def irreducible_character(lam: Iterable[int], ctx: CharacterContext | None = None) -> ClassFunction:
    """``chi^lam`` as a :class:`ClassFunction` on ``S_|lam|``."""
    lam = Partition(lam)
    if lam.size < 1:
        raise ValueError("irreducible characters are defined for n >= 1")
    ctx = ctx or _default_context
    return ClassFunction(lam.size, ctx.table(lam.size)[lam])


def trivial_character(n: int) -> ClassFunction:
    return ClassFunction.constant(n, 1)


def sign_character(n: int) -> ClassFunction:
    return ClassFunction.from_function(n, lambda rho: -1 if (n - len(rho)) % 2 else 1)


def hook_length_dimension(lam: Iterable[int]) -> int:
    """``chi^lam(1)`` from the hook length formula."""
    lam = Partition(lam)
    conj = lam.conjugate()
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return factorial(lam.size) // hooks


def character_table_csv(n: int, ctx: CharacterContext | None = None) -> str:
    """CSV with a header row of cycle types and one row per irreducible."""
    ctx = ctx or _default_context
    parts = partitions_of(n)
    tab = ctx.table(n)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lambda"] + [str(rho) for rho in parts])
    for lam in parts:
        w.writerow([str(lam)] + [tab[lam][rho] for rho in parts])
    return buf.getvalue()


def sqrt_count(sigma: Permutation) -> int:
    """Number of ``tau`` in ``S_k`` with ``tau^2 = sigma``, by exhaustive enumeration."""
    k = len(sigma)
    if k > SQRT_COUNT_MAX_K:
        raise GuardExceeded(f"square-root enumeration limited to k <= {SQRT_COUNT_MAX_K}, got {k}")
    target = sigma.zero
    count = 0
    for tau in iter_permutations(k):
        if all(tau[tau[i]] == target[i] for i in range(k)):
            count += 1
    return count


def theta_identity_check(k: int, ctx: CharacterContext | None = None) -> Report:
    """Check ``#{tau : tau^2 = sigma} = sum_nu chi^nu(sigma)`` on every cycle type of ``S_k``."""
    ctx = ctx or _default_context
    tab = ctx.table(k)
    values = {}
    for rho in partitions_of(k):
        lhs = sqrt_count(representative(rho))
        rhs = sum(tab[nu][rho] for nu in tab)
        values[str(rho)] = (lhs, rhs)
        if lhs != rhs:
            return Report(f"theta identity k={k}", False, values, witness=rho)
    return Report(f"theta identity k={k}", True, values)
