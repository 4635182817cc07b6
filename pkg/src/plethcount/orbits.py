"""Permutation-equivalence classes of ``M(n, m)`` and their twisted counts.

``S_n x S_n`` acts on matrices by ``(g, h) . A = g A h^{-1}``, i.e. entry
``(i, j)`` of the image is ``A[g^-1(i)][h^-1(j)]``. A class is
*transpose-fixed* when it contains the transpose of its members.

For a class ``C`` with representative ``s``, ``N^C(sigma)`` counts the
members fixed by ``A -> sigma A^T``. Two routes compute it:

* :func:`n_c` materialises the orbit and counts directly;
* :func:`n_c_by_stabilizer` enumerates ``Z(s) = {(g, h) : g s^T h^{-1} = s}``
  and uses ``N^C(rho) = z_rho / |Stab(s)| * #{(g, h) in Z(s) : gh has type rho}``.
"""

from __future__ import annotations

import os
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from math import factorial, prod
from typing import Iterator

from .characters import (
    ClassFunction,
    inner_product,
    irreducible_character,
    sign_character,
    trivial_character,
)
from .errors import GuardExceeded, Report
from .matrices import (
    DEFAULT_MAX_MATRICES,
    IntMatrix,
    enumerate_M,
    is_twisted_fixed,
    iter_fixed,
    n_class_function,
    transpose,
)
from .partitions import (
    Partition,
    count_odd_part_partitions,
    cycle_type,
    partition_count,
    partitions_of,
    representative,
    z,
)

CANONICAL_MAX_N = int(os.environ.get("PLETHCOUNT_CANONICAL_MAX_N", 8))
ORBIT_MAX_SIZE = int(os.environ.get("PLETHCOUNT_ORBIT_MAX_SIZE", 10**6))
PAIR_MAX = int(os.environ.get("PLETHCOUNT_PAIR_MAX", 2 * 10**6))


# -- canonical form ---------------------------------------------------------


def _refine(cells: tuple[tuple[int, ...], ...], row: tuple[int, ...]):
    """Split each column cell by the row's values, ascending."""
    out = []
    for cell in cells:
        by_value: dict[int, list[int]] = {}
        for c in cell:
            by_value.setdefault(row[c], []).append(c)
        out.extend(tuple(by_value[v]) for v in sorted(by_value))
    return tuple(out)


def _swappable(rows, remaining, cells, r: int, s: int) -> bool:
    """Is there a cell-preserving column permutation exchanging rows r and s and fixing the rest?"""
    others = [x for x in remaining if x != r and x != s]
    sig = Counter()
    for k, cell in enumerate(cells):
        for c in cell:
            rest = tuple(rows[x][c] for x in others)
            sig[(k, rest, rows[r][c], rows[s][c])] += 1
    return all(sig[(k, rest, b, a)] == cnt for (k, rest, a, b), cnt in sig.items())


def canonical_form(a: IntMatrix, max_n: int = CANONICAL_MAX_N) -> IntMatrix:
    """Row-major lexicographically least matrix in ``{g A h^{-1}}``.

    For a fixed row order the best column order sorts columns as vectors, so
    the search runs over row orders only: level by level it keeps the states
    whose next output row is globally least, refining column cells as it
    goes. Identical rows and rows exchangeable by a transposition-like
    automorphism are explored once.
    """
    n = len(a)
    if n > max_n:
        raise GuardExceeded(f"canonical form search limited to n <= {max_n}, got {n}")
    if n == 0:
        return ()
    rows = [tuple(r) for r in a]
    states = {((tuple(range(n)),), tuple(range(n)))}
    out_rows = []
    for _ in range(n):
        best = None
        children = []
        for cells, remaining in states:
            tied = []
            seen_values = set()
            for r in remaining:
                if rows[r] in seen_values:
                    continue
                seen_values.add(rows[r])
                out = tuple(v for cell in cells for v in sorted(rows[r][c] for c in cell))
                if best is None or out < best:
                    best = out
                    children = []
                    tied = [r]
                elif out == best:
                    tied.append(r)
            kept = []
            for r in tied:
                if not any(_swappable(rows, remaining, cells, r, s) for s in kept):
                    kept.append(r)
            children.extend((cells, remaining, r) for r in kept)
        out_rows.append(best)
        states = {
            (_refine(cells, rows[r]), tuple(x for x in remaining if x != r))
            for cells, remaining, r in children
        }
    return tuple(out_rows)


def canonical_form_bruteforce(a: IntMatrix) -> IntMatrix:
    """Reference minimum over all row permutations with columns sorted (n <= 6)."""
    n = len(a)
    best = None
    for g in permutations(range(n)):
        b = [a[i] for i in g]
        cols = sorted(zip(*b))
        cand = tuple(zip(*cols)) if cols else ()
        if best is None or cand < best:
            best = cand
    return best


# -- isomorphisms, stabilisers, orbits --------------------------------------


def isomorphisms(x: IntMatrix, s: IntMatrix) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All ``(g, h)`` (0-indexed images) with ``x[a][b] == s[g(a)][h(b)]``, i.e. ``g x h^-1 = s``."""
    n = len(x)
    g = [-1] * n
    used = [False] * n
    px = [() for _ in range(n)]
    ps = [() for _ in range(n)]
    row_key_s = [sorted(r) for r in s]

    def go(a: int):
        if a == n:
            yield from _column_matchings(tuple(g), px, ps)
            return
        key = sorted(x[a])
        for i in range(n):
            if used[i] or row_key_s[i] != key:
                continue
            nx = [px[b] + (x[a][b],) for b in range(n)]
            ns = [ps[c] + (s[i][c],) for c in range(n)]
            if Counter(nx) != Counter(ns):
                continue
            old_x, old_s = px[:], ps[:]
            px[:], ps[:] = nx, ns
            g[a], used[i] = i, True
            yield from go(a + 1)
            g[a], used[i] = -1, False
            px[:], ps[:] = old_x, old_s

    yield from go(0)


def _column_matchings(g, px, ps):
    groups_x: dict[tuple, list[int]] = {}
    groups_s: dict[tuple, list[int]] = {}
    for b, v in enumerate(px):
        groups_x.setdefault(v, []).append(b)
    for c, v in enumerate(ps):
        groups_s.setdefault(v, []).append(c)
    keys = list(groups_x)
    choices = [list(permutations(groups_s[k])) for k in keys]
    n = len(px)
    for combo in product(*choices):
        h = [0] * n
        for k, targets in zip(keys, combo):
            for b, c in zip(groups_x[k], targets):
                h[b] = c
        yield g, tuple(h)


def stabilizer_order(s: IntMatrix) -> int:
    """``|Stab(s)|`` in ``S_n x S_n``.

    Counts rearrangements of the row values whose column multiset matches
    ``s``; identical rows and identical columns contribute factorials rather
    than being enumerated.
    """
    n = len(s)
    rows = Counter(s)
    target = [Counter(zip(*s[: k + 1])) for k in range(n)]
    prefix: list[tuple[int, ...]] = []

    def go() -> int:
        k = len(prefix)
        if k == n:
            return 1
        total = 0
        key = sorted(s[k])
        for v in sorted(rows):
            if rows[v] == 0 or sorted(v) != key:
                continue
            rows[v] -= 1
            prefix.append(v)
            if Counter(zip(*prefix)) == target[k]:
                total += go()
            prefix.pop()
            rows[v] += 1
        return total

    sequences = go()
    row_sym = prod(factorial(k) for k in Counter(s).values())
    col_sym = prod(factorial(k) for k in Counter(zip(*s)).values())
    return sequences * row_sym * col_sym


def orbit(a: IntMatrix, max_size: int = ORBIT_MAX_SIZE) -> set[IntMatrix]:
    """The ``S_n x S_n`` orbit of ``a``, by closure under adjacent row and column swaps."""
    n = len(a)
    start = tuple(map(tuple, a))
    seen = {start}
    queue = deque([start])
    while queue:
        b = queue.popleft()
        for k in range(n - 1):
            rs = list(b)
            rs[k], rs[k + 1] = rs[k + 1], rs[k]
            cs = tuple(r[:k] + (r[k + 1], r[k]) + r[k + 2 :] for r in b)
            for c in (tuple(rs), cs):
                if c not in seen:
                    seen.add(c)
                    if len(seen) > max_size:
                        raise GuardExceeded(f"orbit exceeds {max_size} matrices")
                    queue.append(c)
    return seen


@dataclass(frozen=True)
class OrbitClass:
    """One ``S_n x S_n``-orbit of ``M(n, m)``."""

    canonical_rep: IntMatrix
    orbit_size: int
    stabilizer_size: int
    transpose_fixed: bool

    @property
    def n(self) -> int:
        return len(self.canonical_rep)

    @property
    def m(self) -> int:
        return sum(self.canonical_rep[0]) if self.canonical_rep else 0


def make_class(a: IntMatrix) -> OrbitClass:
    rep = canonical_form(a)
    stab = stabilizer_order(rep)
    n = len(rep)
    return OrbitClass(
        canonical_rep=rep,
        orbit_size=factorial(n) ** 2 // stab,
        stabilizer_size=stab,
        transpose_fixed=canonical_form(transpose(rep)) == rep,
    )


def orbit_classes(n: int, m: int, max_matrices: int = DEFAULT_MAX_MATRICES) -> list[OrbitClass]:
    """All orbits of ``M(n, m)`` found by full enumeration, ordered by canonical representative.

    Each new orbit is materialised once so later members are recognised by lookup.
    """
    member_of: dict[IntMatrix, IntMatrix] = {}
    sizes: Counter = Counter()
    for a in enumerate_M(n, m, max_matrices):
        rep = member_of.get(a)
        if rep is None:
            rep = canonical_form(a)
            for b in orbit(rep):
                member_of[b] = rep
        sizes[rep] += 1
    classes = []
    for rep in sorted(sizes):
        stab = factorial(n) ** 2 // sizes[rep]
        classes.append(
            OrbitClass(rep, sizes[rep], stab, canonical_form(transpose(rep)) == rep)
        )
    return classes


# -- class functions per orbit -----------------------------------------------


def n_c(c: OrbitClass, max_size: int = ORBIT_MAX_SIZE) -> ClassFunction:
    """``N^C(rho) = #{A in C : sigma_rho A^T = A}`` by materialising the orbit."""
    members = orbit(c.canonical_rep, max_size)
    n = c.n
    return ClassFunction.from_function(
        n, lambda rho: sum(1 for a in members if is_twisted_fixed(a, representative(rho)))
    )


def twisted_pairs(s: IntMatrix, max_pairs: int = PAIR_MAX) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """``Z(s) = {(g, h) : g s^T h^{-1} = s}``; empty unless ``s ~ s^T``."""
    out = []
    for pair in isomorphisms(transpose(s), s):
        out.append(pair)
        if len(out) > max_pairs:
            raise GuardExceeded(f"more than {max_pairs} pairs (g, h)")
    return out


def _compose_type(g: tuple[int, ...], h: tuple[int, ...]) -> Partition:
    return cycle_type(tuple(g[h[i]] + 1 for i in range(len(g))))


def n_c_by_stabilizer(c: OrbitClass, max_pairs: int = PAIR_MAX) -> ClassFunction:
    """``N^C`` from the twisted pairs of the representative (no orbit materialisation)."""
    pairs = twisted_pairs(c.canonical_rep, max_pairs)
    types = Counter(_compose_type(g, h) for g, h in pairs)
    return ClassFunction.from_function(
        c.n, lambda rho: Fraction(z(rho) * types.get(rho, 0), c.stabilizer_size)
    )


def stabilizer_inner_product(c: OrbitClass, lam, max_pairs: int = PAIR_MAX) -> Fraction:
    """``(1/|Stab(s)|) * sum over g s^T h^{-1} = s of chi^lam(gh)``."""
    chi = irreducible_character(lam)
    if chi.n != c.n:
        raise ValueError("lambda must be a partition of n")
    pairs = twisted_pairs(c.canonical_rep, max_pairs)
    total = sum(chi(_compose_type(g, h)) for g, h in pairs)
    return Fraction(total, c.stabilizer_size)


# -- transpose-fixed classes without enumerating M(n, m) ----------------------


def _component_key(a: IntMatrix) -> tuple:
    """Cheap orbit invariant: sorted per-component (row, column) value profiles."""
    n = len(a)
    parent = list(range(2 * n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(n):
            if a[i][j]:
                parent[find(i)] = find(n + j)
    comps: dict[int, tuple[list, list]] = {}
    for i in range(n):
        comps.setdefault(find(i), ([], []))[0].append(tuple(sorted(a[i])))
    for j in range(n):
        comps.setdefault(find(n + j), ([], []))[1].append(tuple(sorted(a[i][j] for i in range(n))))
    return tuple(sorted((tuple(sorted(r)), tuple(sorted(c))) for r, c in comps.values()))


@dataclass
class FixedClasses:
    """Transpose-fixed classes of ``M(n, m)`` with their ``N^C``."""

    n: int
    m: int
    classes: list[OrbitClass]
    n_cs: list[ClassFunction]
    total: ClassFunction = field(repr=False)

    def __len__(self) -> int:
        return len(self.classes)


def transpose_fixed_classes(n: int, m: int, max_pairs: int = PAIR_MAX) -> FixedClasses:
    """Find ``T(n, m)/~`` from the sets ``{A : sigma_rho A^T = A}``.

    A member of a transpose-fixed class is conjugate to a ``sigma_rho``-fixed
    matrix for some ``rho``, so scanning these sets finds every class. The
    scan stops once the found classes account for every fixed matrix
    (``sum_C N^C(rho) = N^m(rho)`` for all ``rho``), which certifies
    completeness. Cycle types with the fewest fixed matrices go first, and
    only one matrix per component profile is canonicalised before falling
    back to canonicalising everything.
    """
    total = n_class_function(n, m)
    found: dict[IntMatrix, tuple[OrbitClass, ClassFunction]] = {}
    acc = {rho: Fraction(0) for rho in partitions_of(n)}

    def add(a: IntMatrix) -> None:
        rep = canonical_form(a)
        if rep in found:
            return
        c = make_class(rep)
        f = n_c_by_stabilizer(c, max_pairs)
        found[rep] = (c, f)
        for rho in acc:
            acc[rho] += f(rho)

    order = sorted(partitions_of(n), key=lambda rho: (total(rho), rho))
    for rho in order:
        if acc[rho] == total(rho):
            continue
        sigma = representative(rho)
        keys = set()
        for a in iter_fixed(sigma, m):
            k = _component_key(a)
            if k not in keys:
                keys.add(k)
                add(a)
                if acc[rho] == total(rho):
                    break
        if acc[rho] != total(rho):
            for a in iter_fixed(sigma, m):
                add(a)
                if acc[rho] == total(rho):
                    break
    reps = sorted(found)
    return FixedClasses(n, m, [found[r][0] for r in reps], [found[r][1] for r in reps], total)


# -- checks --------------------------------------------------------------------


def burnside_check(n: int, m: int, max_matrices: int = DEFAULT_MAX_MATRICES) -> Report:
    """``#{transpose-fixed orbits} == <1, N^m> == (1/n!) sum_sigma N^m(sigma)``."""
    classes = orbit_classes(n, m, max_matrices)
    orbit_count = sum(1 for c in classes if c.transpose_fixed)
    char = inner_product(trivial_character(n), n_class_function(n, m))
    details = {"orbit_count": orbit_count, "character_count": char, "all_orbits": len(classes)}
    return Report(f"twisted Burnside n={n} m={m}", char == orbit_count, details)


def m2_lambda(c: OrbitClass) -> Partition:
    """Block sizes of the decomposition of an ``m = 2`` class into irreducible summands."""
    if c.m != 2:
        raise ValueError("m2_lambda needs a class of M(n, 2)")
    return component_rows(c.canonical_rep)


def component_rows(a: IntMatrix) -> Partition:
    """Row counts of the connected components of the row/column support graph."""
    n = len(a)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for j in range(n):
        rows = [i for i in range(n) if a[i][j]]
        for i in rows[1:]:
            parent[find(i)] = find(rows[0])
    sizes = Counter(find(i) for i in range(n))
    return Partition(sorted(sizes.values(), reverse=True))


def m2_sign_check(n: int) -> Report:
    """Per-class sign rule for ``m = 2`` plus the two partition counts."""
    name = f"m=2 classification n={n}"
    fc = transpose_fixed_classes(n, 2)
    sgn = sign_character(n)
    lambdas = []
    per_class = {}
    for c, f in zip(fc.classes, fc.n_cs):
        lam = m2_lambda(c)
        lambdas.append(lam)
        value = inner_product(sgn, f)
        per_class[str(lam)] = value
        expected = 1 if all(p % 2 for p in lam) else 0
        if value != expected:
            return Report(name, False, {"per_class": per_class}, witness=lam)
    trivial = inner_product(trivial_character(n), fc.total)
    signed = inner_product(sgn, fc.total)
    details = {
        "classes": len(fc),
        "p(n)": partition_count(n),
        "<1,N^2>": trivial,
        "<sgn,N^2>": signed,
        "odd_part_partitions": count_odd_part_partitions(n),
        "per_class": per_class,
    }
    ok = (
        len(fc) == partition_count(n)
        and sorted(lambdas) == sorted(partitions_of(n))
        and trivial == partition_count(n)
        and signed == count_odd_part_partitions(n)
    )
    return Report(name, ok, details, witness=None if ok else "counts")


@dataclass
class FoulkesCell:
    n: int
    m: int
    orbit_count: int | None
    character_count: int | None

    @property
    def present(self) -> bool:
        return self.orbit_count is not None

    @property
    def routes_agree(self) -> bool:
        return self.orbit_count == self.character_count


def foulkes_table(
    n_max: int,
    m_max: int,
    max_n: int = CANONICAL_MAX_N,
    max_fixed: int = 200_000,
) -> dict[tuple[int, int], FoulkesCell]:
    """``#T(n, m)/~`` by the orbit and the character route; cells past the guards are absent."""
    table = {}
    for n in range(1, n_max + 1):
        for m in range(1, m_max + 1):
            orbit_count = char_count = None
            if n <= max_n:
                total = n_class_function(n, m)
                if max(total.values.values()) <= max_fixed:
                    char_count = int(inner_product(trivial_character(n), total))
                    try:
                        orbit_count = len(transpose_fixed_classes(n, m))
                    except GuardExceeded:
                        orbit_count = None
            table[(n, m)] = FoulkesCell(n, m, orbit_count, char_count if orbit_count is not None else None)
    return table


def foulkes_violations(table: dict[tuple[int, int], FoulkesCell]) -> list[tuple[int, int]]:
    """Pairs ``n <= m`` with both cells present and ``#T(n,m)/~ > #T(m,n)/~``."""
    bad = []
    for (n, m), cell in table.items():
        other = table.get((m, n))
        if n <= m and cell.present and other is not None and other.present:
            if cell.orbit_count > other.orbit_count:
                bad.append((n, m))
    return bad


def orbit_identities_check(n: int, m: int, max_matrices: int = DEFAULT_MAX_MATRICES) -> Report:
    """Decomposition ``N^m = sum_C N^C`` and the per-class inner-product identities.

    ``N^C`` is taken from orbit materialisation; the twisted-pair formula is
    checked against it for every ``chi^lam``.
    """
    name = f"orbit identities n={n} m={m}"
    classes = orbit_classes(n, m, max_matrices)
    total = n_class_function(n, m)
    acc = ClassFunction.constant(n, 0)
    trivial = trivial_character(n)
    chars = {lam: irreducible_character(lam) for lam in partitions_of(n)}
    dims = {lam: chi(Partition([1] * n)) for lam, chi in chars.items()}
    non_fixed = 0
    for c in classes:
        f = n_c(c)
        if not c.transpose_fixed:
            non_fixed += 1
            if inner_product(trivial, f) != 0:
                return Report(name, False, witness=(c.canonical_rep, "<1,N^s> != 0"))
            continue
        acc = acc + f
        if inner_product(trivial, f) != 1:
            return Report(name, False, witness=(c.canonical_rep, "<1,N^C> != 1"))
        if n_c_by_stabilizer(c) != f:
            return Report(name, False, witness=(c.canonical_rep, "twisted-pair N^C differs"))
        for lam, chi in chars.items():
            direct = inner_product(chi, f)
            if stabilizer_inner_product(c, lam) != direct:
                return Report(name, False, witness=(c.canonical_rep, lam, "stabilizer formula"))
            if abs(direct) > dims[lam] or direct.denominator != 1:
                return Report(name, False, witness=(c.canonical_rep, lam, "bound"))
    if acc != total:
        return Report(name, False, witness="sum of N^C differs from N^m")
    details = {"classes": len(classes), "transpose_fixed": len(classes) - non_fixed, "non_transpose_fixed": non_fixed}
    return Report(f"{name}: {len(classes)} classes, {non_fixed} not transpose-fixed", True, details)


def exceptional_classes(n: int, m: int) -> dict[str, list[IntMatrix]]:
    """Classes with ``s !~ s^T`` and transpose-fixed classes with ``<sgn, N^C> = -1``."""
    classes = orbit_classes(n, m)
    sgn = sign_character(n)
    not_fixed = [c.canonical_rep for c in classes if not c.transpose_fixed]
    negative = [
        c.canonical_rep
        for c in classes
        if c.transpose_fixed and inner_product(sgn, n_c_by_stabilizer(c)) < 0
    ]
    return {"not_transpose_fixed": not_fixed, "negative_sign": negative}
