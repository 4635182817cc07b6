"""Counting matrices ``A`` in ``M(n, m)`` with ``sigma A^T = A``.

``M(n, m)`` is the set of ``n x n`` non-negative integer matrices whose row
and column sums all equal ``m``. Entrywise, ``sigma A^T = A`` reads
``A[i][j] == A[sigma(j)][i]``; this form is the single source of truth here,
and the permutation-matrix product form is only derived from it in tests.

Matrices are tuples of row tuples (``IntMatrix``), indices 0-based internally.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .characters import ClassFunction, inner_product, irreducible_character
from .errors import ConsistencyError, GuardExceeded, Report
from .partitions import Partition, Permutation, iter_permutations, partitions_of, representative

IntMatrix = tuple[tuple[int, ...], ...]

DEFAULT_MAX_MATRICES = int(os.environ.get("PLETHCOUNT_MAX_MATRICES", 10**7))
FIBER_MAX_NM = 8


def transpose(a: IntMatrix) -> IntMatrix:
    return tuple(zip(*a)) if a else ()


def in_M(a: IntMatrix, m: int) -> bool:
    """Membership in ``M(n, m)``."""
    n = len(a)
    return (
        all(len(row) == n for row in a)
        and all(x >= 0 for row in a for x in row)
        and all(sum(row) == m for row in a)
        and all(sum(col) == m for col in transpose(a))
    )


def is_twisted_fixed(a: IntMatrix, sigma: Sequence[int]) -> bool:
    """``sigma A^T == A`` via ``A[i][j] == A[sigma(j)][i]`` (``sigma`` 1-indexed)."""
    s = [x - 1 for x in sigma]
    n = len(a)
    return all(a[i][j] == a[s[j]][i] for i in range(n) for j in range(n))


def permutation_matrix(sigma: Sequence[int]) -> IntMatrix:
    """``P`` with ``P e_k = e_sigma(k)``, i.e. ``P[sigma(k)][k] = 1``."""
    n = len(sigma)
    p = [[0] * n for _ in range(n)]
    for k, image in enumerate(sigma):
        p[image - 1][k] = 1
    return tuple(map(tuple, p))


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


@dataclass(frozen=True)
class CellOrbit:
    cells: tuple[tuple[int, int], ...]
    row_counts: tuple[tuple[int, int], ...]  # (row, number of cells of the orbit in that row)


@lru_cache(maxsize=None)
def cell_orbits(sigma: tuple[int, ...]) -> tuple[CellOrbit, ...]:
    """Orbits of ``(i, j) -> (sigma(j), i)`` on cells, for a 0-indexed ``sigma``.

    Ordered by (least row, least column) of their cells.
    """
    n = len(sigma)
    seen = set()
    orbits = []
    for i in range(n):
        for j in range(n):
            if (i, j) in seen:
                continue
            cells = []
            cell = (i, j)
            while cell not in seen:
                seen.add(cell)
                cells.append(cell)
                cell = (sigma[cell[1]], cell[0])
            rows = Counter(r for r, _ in cells)
            orbits.append(CellOrbit(tuple(sorted(cells)), tuple(sorted(rows.items()))))
    orbits.sort(key=lambda o: (min(r for r, _ in o.cells), min(c for _, c in o.cells)))
    return tuple(orbits)


def _as_zero(sigma) -> tuple[int, ...]:
    if isinstance(sigma, Permutation):
        return sigma.zero
    return Permutation(sigma).zero


def _last_orbit_per_row(orbits: tuple[CellOrbit, ...], n: int) -> list[list[int]]:
    """``closing[k]`` lists the rows whose final orbit is ``k``."""
    last = [-1] * n
    for k, o in enumerate(orbits):
        for r, _ in o.row_counts:
            last[r] = k
    closing = [[] for _ in orbits]
    for r, k in enumerate(last):
        closing[k].append(r)
    return closing


def count_fixed(sigma, m: int) -> int:
    """``#{A in M(n, m) : sigma A^T = A}``.

    One free variable per cell orbit; rows are filled in orbit order with
    remaining-capacity bounds and memoised on the remaining row sums.
    Column sums need no separate bookkeeping: under the fixed-point relation
    column ``j`` sums to the row sum of ``sigma(j)``.
    """
    if m < 0:
        raise ValueError("count_fixed takes m >= 0; negative m is defined by quasipolynomial extension")
    return _count_fixed(_as_zero(sigma), m)


@lru_cache(maxsize=4096)
def _count_fixed(sigma: tuple[int, ...], m: int) -> int:
    n = len(sigma)
    orbits = cell_orbits(sigma)
    closing = _last_orbit_per_row(orbits, n)
    memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def go(k: int, rem: tuple[int, ...]) -> int:
        if k == len(orbits):
            return 1
        key = (k, rem)
        hit = memo.get(key)
        if hit is not None:
            return hit
        rc = orbits[k].row_counts
        lo, hi = 0, min(rem[r] // c for r, c in rc)
        for r in closing[k]:
            c = dict(rc)[r]
            if rem[r] % c:
                memo[key] = 0
                return 0
            lo = hi = rem[r] // c
            break
        total = 0
        for v in range(lo, hi + 1):
            new = list(rem)
            for r, c in rc:
                new[r] -= v * c
            if any(new[r] for r in closing[k]) or min(new) < 0:
                continue
            total += go(k + 1, tuple(new))
        memo[key] = total
        return total

    return go(0, (m,) * n)


def iter_fixed(sigma, m: int) -> Iterator[IntMatrix]:
    """Every ``A in M(n, m)`` with ``sigma A^T = A``, by plain backtracking."""
    s = _as_zero(sigma)
    n = len(s)
    orbits = cell_orbits(s)
    closing = _last_orbit_per_row(orbits, n)
    a = [[0] * n for _ in range(n)]

    def go(k: int, rem: list[int]):
        if k == len(orbits):
            yield tuple(map(tuple, a))
            return
        o = orbits[k]
        hi = min(rem[r] // c for r, c in o.row_counts)
        for v in range(hi + 1):
            for r, c in o.row_counts:
                rem[r] -= v * c
            if not any(rem[r] for r in closing[k]):
                for i, j in o.cells:
                    a[i][j] = v
                yield from go(k + 1, rem)
            for r, c in o.row_counts:
                rem[r] += v * c
        for i, j in o.cells:
            a[i][j] = 0

    yield from go(0, [m] * n)


def _count_fixed_rho(args: tuple[Partition, int]) -> int:
    rho, m = args
    return count_fixed(representative(rho), m)


def n_class_function(n: int, m: int, threads: int = 1) -> ClassFunction:
    """``N^m`` as a class function: ``rho -> count_fixed(representative(rho), m)``."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    parts = partitions_of(n)
    jobs = [(rho, m) for rho in parts]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            counts = list(pool.map(_count_fixed_rho, jobs))
    else:
        counts = [_count_fixed_rho(j) for j in jobs]
    return ClassFunction(n, dict(zip(parts, counts)))


def plethysm_sum(lam, m: int) -> int:
    """``<chi^lam, N^m>``, the number of irreducible constituents of ``s_lam[s_m]``."""
    lam = Partition(lam)
    if m < 1:
        raise ValueError("m must be >= 1")
    value = inner_product(irreducible_character(lam), n_class_function(lam.size, m))
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(f"<chi^{list(lam)}, N^{m}> = {value} is not a non-negative integer")
    return int(value)


@lru_cache(maxsize=None)
def _count_M(rows_left: int, cols: tuple[int, ...], m: int) -> int:
    if rows_left == 0:
        return 1
    if rows_left == 1:
        return 1
    total = 0
    for row in _bounded_compositions(m, cols):
        rest = tuple(sorted(c - x for c, x in zip(cols, row)))
        total += _count_M(rows_left - 1, rest, m)
    return total


def count_M(n: int, m: int) -> int:
    """``#M(n, m)`` by row-by-row dynamic programming on remaining column sums."""
    return _count_M(n, (m,) * n, m)


def _bounded_compositions(total: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` with ``x_k <= caps[k]``, in lexicographic order."""
    if not caps:
        if total == 0:
            yield ()
        return
    room = sum(caps[1:])
    for x in range(max(0, total - room), min(caps[0], total) + 1):
        for rest in _bounded_compositions(total - x, caps[1:]):
            yield (x,) + rest


def enumerate_M(n: int, m: int, max_matrices: int = DEFAULT_MAX_MATRICES) -> Iterator[IntMatrix]:
    """Stream ``M(n, m)`` in row-major lexicographic order."""
    total = count_M(n, m)
    if total > max_matrices:
        raise GuardExceeded(f"#M({n},{m}) = {total} exceeds the bound {max_matrices}")
    return _enumerate_M(n, m)


def _enumerate_M(n: int, m: int) -> Iterator[IntMatrix]:
    rows: list[tuple[int, ...]] = []

    def go(cols: tuple[int, ...]):
        if len(rows) == n - 1:
            yield tuple(rows) + (cols,)
            return
        for row in _bounded_compositions(m, cols):
            rows.append(row)
            yield from go(tuple(c - x for c, x in zip(cols, row)))
            rows.pop()

    if n == 0:
        yield ()
        return
    yield from go((m,) * n)


def _fiber_images(n: int, m: int) -> dict[tuple[int, ...], Counter]:
    """Map each block permutation ``sigma`` (0-indexed) to the multiset ``F(tau)``.

    ``tau`` ranges over ``S_nm`` with ``tau^2`` carrying block ``P_i`` onto
    ``P_sigma(i)`` for every ``i``; blocks are ``P_i = {i*m, ..., i*m + m - 1}``.
    """
    N = n * m
    out: dict[tuple[int, ...], Counter] = {}
    for tau in iter_permutations(N):
        block_map = [-1] * n
        ok = True
        for x in range(N):
            b, target = x // m, tau[tau[x]] // m
            if block_map[b] < 0:
                block_map[b] = target
            elif block_map[b] != target:
                ok = False
                break
        if not ok:
            continue
        a = [[0] * n for _ in range(n)]
        for y in range(N):
            a[tau[y] // m][y // m] += 1
        out.setdefault(tuple(block_map), Counter())[tuple(map(tuple, a))] += 1
    return out


def _fiber_report(n: int, m: int, sigma: Permutation, fibers: Counter) -> Report:
    name = f"fiber n={n} m={m} sigma={list(sigma)}"
    fiber_size = factorial(m) ** n
    expected = set(iter_fixed(sigma, m))
    count = count_fixed(sigma, m)
    details = {
        "tau_count": sum(fibers.values()),
        "image_size": len(fibers),
        "fiber_sizes": sorted(set(fibers.values())),
        "N": count,
    }
    for a, size in fibers.items():
        if not (in_M(a, m) and is_twisted_fixed(a, sigma)):
            return Report(name, False, details, witness=("codomain", a))
        if size != fiber_size:
            return Report(name, False, details, witness=("fiber size", a, size))
    if set(fibers) != expected or len(expected) != count:
        return Report(name, False, details, witness="image differs from the fixed set")
    if details["tau_count"] != fiber_size * count:
        return Report(name, False, details, witness="tau count")
    return Report(name, True, details)


def fiber_check(n: int, m: int, sigma) -> Report:
    """Verify ``F(tau)_ij = #(P_i ∩ tau P_j)`` is ``m!^n``-to-1 onto ``{A : sigma A^T = A}``."""
    if n * m > FIBER_MAX_NM:
        raise GuardExceeded(f"fiber check needs (nm)! enumeration; nm={n * m} > {FIBER_MAX_NM}")
    sigma = sigma if isinstance(sigma, Permutation) else Permutation(sigma)
    fibers = _fiber_images(n, m).get(sigma.zero, Counter())
    return _fiber_report(n, m, sigma, fibers)


def fiber_check_all(n: int, m: int) -> list[Report]:
    """:func:`fiber_check` for every ``sigma`` in ``S_n`` from one pass over ``S_nm``."""
    if n * m > FIBER_MAX_NM:
        raise GuardExceeded(f"fiber check needs (nm)! enumeration; nm={n * m} > {FIBER_MAX_NM}")
    images = _fiber_images(n, m)
    return [
        _fiber_report(n, m, Permutation.from_zero(s), images.get(s, Counter()))
        for s in iter_permutations(n)
    ]
