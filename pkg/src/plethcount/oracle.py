"""Brute-force plethysm ``s_lam[s_m]`` in the power-sum basis.

Independent of the matrix counts: expand ``s_lam`` and ``s_m`` in power sums,
apply ``p_k[g] = g(p_j -> p_{jk})`` multiplicatively, then read off Schur
multiplicities with the Hall pairing ``<p_tau, s_nu> = chi^nu(tau)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping

from .characters import default_context
from .errors import ConsistencyError, GuardExceeded
from .partitions import Partition, partitions_of, z

SCHUR_MAX_N = 16
PLETHYSM_MAX_NM = 12


class PSymFunc:
    """Homogeneous symmetric function as a sparse map ``Partition -> Fraction`` over ``p_rho``."""

    __slots__ = ("degree", "terms")

    def __init__(self, terms: Mapping[Iterable[int], Fraction] | None = None, degree: int | None = None):
        clean: dict[Partition, Fraction] = {}
        for key, c in (terms or {}).items():
            key = Partition(sorted(key, reverse=True))
            clean[key] = clean.get(key, Fraction(0)) + Fraction(c)
        clean = {k: v for k, v in clean.items() if v}
        sizes = {k.size for k in clean}
        if len(sizes) > 1:
            raise ValueError(f"inhomogeneous terms of degrees {sorted(sizes)}")
        if sizes:
            (d,) = sizes
            if degree is not None and degree != d:
                raise ValueError(f"declared degree {degree}, terms have degree {d}")
            degree = d
        self.degree = degree or 0
        self.terms = clean

    def __getitem__(self, rho: Iterable[int]) -> Fraction:
        return self.terms.get(Partition(rho), Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, PSymFunc) and self.terms == other.terms and self.degree == other.degree

    def __repr__(self) -> str:
        body = ", ".join(f"{list(k)}: {v}" for k, v in sorted(self.terms.items(), reverse=True))
        return f"PSymFunc({{{body}}})"

    def __add__(self, other: PSymFunc) -> PSymFunc:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return PSymFunc(out, self.degree if not other.terms else other.degree)

    def scale(self, c) -> PSymFunc:
        return PSymFunc({k: v * c for k, v in self.terms.items()}, self.degree)


def schur_in_p(lam: Iterable[int]) -> PSymFunc:
    """``s_lam = sum_rho chi^lam(rho) / z_rho * p_rho``."""
    lam = Partition(lam)
    n = lam.size
    if n > SCHUR_MAX_N:
        raise GuardExceeded(f"Schur expansion limited to n <= {SCHUR_MAX_N}")
    if n == 0:
        return PSymFunc({(): 1}, 0)
    row = default_context().table(n)[lam]
    return PSymFunc({rho: Fraction(row[rho], z(rho)) for rho in partitions_of(n)}, n)


def p_plethysm(k: int, g: PSymFunc) -> PSymFunc:
    """``p_k[g]``: every part of every index partition multiplied by ``k``."""
    if k < 1:
        raise ValueError("k must be positive")
    return PSymFunc({tuple(k * part for part in rho): c for rho, c in g.terms.items()}, g.degree * k)


def multiply(f: PSymFunc, g: PSymFunc) -> PSymFunc:
    """Product in the power-sum basis (index partitions concatenate)."""
    out: dict[Partition, Fraction] = {}
    for a, x in f.terms.items():
        for b, y in g.terms.items():
            key = Partition(sorted(a + b, reverse=True))
            out[key] = out.get(key, 0) + x * y
    return PSymFunc(out, f.degree + g.degree)


@lru_cache(maxsize=None)
def _p_of_row(k: int, m: int) -> PSymFunc:
    return p_plethysm(k, schur_in_p([m]))


def schur_pairing(f: PSymFunc) -> dict[Partition, Fraction]:
    """``<f, s_nu>`` for every ``nu |- deg f``."""
    table = default_context().table(f.degree)
    return {nu: sum((c * table[nu][tau] for tau, c in f.terms.items()), Fraction(0)) for nu in partitions_of(f.degree)}


def _integral_multiplicities(values: Mapping[Partition, Fraction], what: str) -> dict[Partition, int]:
    out = {}
    for nu, a in values.items():
        if a.denominator != 1 or a < 0:
            raise ConsistencyError(f"{what}: coefficient of s_{list(nu)} is {a}")
        if a:
            out[nu] = int(a)
    return out


@dataclass(frozen=True)
class PlethysmResult:
    """Schur multiplicities ``a^nu`` of ``s_lam[s_m]`` (zero entries omitted)."""

    lam: Partition
    m: int
    coefficients: Mapping[Partition, int]
    expansion: PSymFunc

    @property
    def total(self) -> int:
        return sum(self.coefficients.values())

    def items(self):
        return sorted(self.coefficients.items(), reverse=True)


def plethysm_expansion(lam: Iterable[int], m: int) -> PSymFunc:
    """``s_lam[s_m]`` in the power-sum basis."""
    lam = Partition(lam)
    n = lam.size
    if n * m > PLETHYSM_MAX_NM:
        raise GuardExceeded(f"plethysm oracle limited to nm <= {PLETHYSM_MAX_NM}, got {n * m}")
    outer = schur_in_p(lam)
    total = PSymFunc(degree=n * m)
    for rho, c in outer.terms.items():
        term = PSymFunc({(): 1}, 0)
        for part in rho:
            term = multiply(term, _p_of_row(part, m))
        total = total + term.scale(c)
    return total


def plethysm_schur(lam: Iterable[int], m: int) -> PlethysmResult:
    lam = Partition(lam)
    if m < 1 or lam.size < 1:
        raise ValueError("need |lam| >= 1 and m >= 1")
    f = plethysm_expansion(lam, m)
    coeffs = _integral_multiplicities(schur_pairing(f), f"s_{list(lam)}[s_{m}]")
    return PlethysmResult(lam, m, coeffs, f)


def oracle_sum(lam: Iterable[int], m: int) -> int:
    return plethysm_schur(lam, m).total


def power_product_constituents(n: int, m: int) -> int:
    """Number of irreducible constituents of ``(s_m)^n`` with multiplicity."""
    if n * m > PLETHYSM_MAX_NM:
        raise GuardExceeded(f"limited to nm <= {PLETHYSM_MAX_NM}, got {n * m}")
    f = PSymFunc({(): 1}, 0)
    row = schur_in_p([m])
    for _ in range(n):
        f = multiply(f, row)
    return sum(_integral_multiplicities(schur_pairing(f), f"(s_{m})^{n}").values())


def dimension_identity(result: PlethysmResult) -> tuple[int, Fraction]:
    """Both sides of ``sum_nu a^nu chi^nu(1) = (nm)! * [p_1^{nm}] s_lam[s_m]``."""
    N = result.lam.size * result.m
    table = default_context().table(N)
    ones = Partition([1] * N)
    lhs = sum(a * table[nu][ones] for nu, a in result.coefficients.items())
    rhs = factorial(N) * result.expansion[ones]
    return lhs, rhs
