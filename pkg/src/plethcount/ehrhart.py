"""Quasipolynomial structure of ``m -> N_rho(m)``.

Counts are sampled with :func:`~plethcount.matrices.count_fixed`, fitted per
residue class by exact Newton interpolation, and the smallest period whose
constituents reproduce extra samples is accepted. Negative ``m`` only ever
reaches the fitted quasipolynomial, never the counter.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd, lcm
from typing import Iterable, Sequence

from .characters import irreducible_character
from .errors import FitError, GuardExceeded, Report
from .matrices import cell_orbits, count_fixed
from .partitions import Partition, eps, partitions_of, representative, z

DEFAULT_MAX_PERIOD = 12
DEFAULT_VALIDATION_POINTS = 3
MAX_SAMPLE_M = int(os.environ.get("PLETHCOUNT_MAX_SAMPLE_M", 400))


@dataclass(frozen=True)
class Quasipolynomial:
    """``f(m) = sum_k coeffs[m mod period][k] * m^k`` with exact rational coefficients."""

    period: int
    coeffs: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.period < 1 or len(self.coeffs) != self.period:
            raise ValueError("need one coefficient list per residue class")
        rows = [[Fraction(c) for c in row] for row in self.coeffs]
        d = max((k for row in rows for k, c in enumerate(row) if c), default=0)
        rows = [(row + [Fraction(0)] * (d + 1))[: d + 1] for row in rows]
        object.__setattr__(self, "coeffs", tuple(tuple(r) for r in rows))

    @property
    def degree(self) -> int:
        """Maximal degree over constituents; 0 for the zero quasipolynomial."""
        return len(self.coeffs[0]) - 1

    def is_zero(self) -> bool:
        return not any(c for row in self.coeffs for c in row)

    def __call__(self, m: int) -> Fraction:
        return evaluate(self, m)

    def leading_coefficients(self) -> tuple[Fraction, ...]:
        return tuple(row[-1] for row in self.coeffs)

    def with_period(self, period: int) -> Quasipolynomial:
        if period % self.period:
            raise ValueError(f"{period} is not a multiple of {self.period}")
        return Quasipolynomial(period, tuple(self.coeffs[r % self.period] for r in range(period)))

    def __add__(self, other: Quasipolynomial) -> Quasipolynomial:
        p = lcm(self.period, other.period)
        a, b = self.with_period(p), other.with_period(p)
        d = max(a.degree, b.degree) + 1
        rows = []
        for ra, rb in zip(a.coeffs, b.coeffs):
            ra = ra + (Fraction(0),) * (d - len(ra))
            rb = rb + (Fraction(0),) * (d - len(rb))
            rows.append(tuple(x + y for x, y in zip(ra, rb)))
        return Quasipolynomial(p, tuple(rows))

    def __mul__(self, c) -> Quasipolynomial:
        return Quasipolynomial(self.period, tuple(tuple(x * c for x in row) for row in self.coeffs))

    __rmul__ = __mul__

    def __sub__(self, other: Quasipolynomial) -> Quasipolynomial:
        return self + other * -1

    def reduced(self) -> Quasipolynomial:
        """Same function with the least period dividing the current one."""
        for p in range(1, self.period + 1):
            if self.period % p == 0 and all(
                self.coeffs[r] == self.coeffs[r % p] for r in range(self.period)
            ):
                return Quasipolynomial(p, self.coeffs[:p])
        return self

    def to_json(self) -> dict:
        return {
            "period": self.period,
            "degree": self.degree,
            "constituents": [[f"{c.numerator}/{c.denominator}" for c in row] for row in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> Quasipolynomial:
        q = cls(int(data["period"]), tuple(tuple(Fraction(c) for c in row) for row in data["constituents"]))
        if q.degree != int(data["degree"]):
            raise ValueError("degree field disagrees with the constituents")
        return q


def evaluate(q: Quasipolynomial, m: int) -> Fraction:
    row = q.coeffs[m % q.period]
    value = Fraction(0)
    for c in reversed(row):
        value = value * m + c
    return value


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Monomial coefficients of the polynomial through ``(xs, ys)``, via divided differences."""
    k = len(xs)
    table = [Fraction(y) for y in ys]
    newton = [table[0]]
    for level in range(1, k):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(k - level)]
        newton.append(table[0])
    poly = [newton[-1]]
    for j in range(k - 2, -1, -1):
        # poly * (x - xs[j]) + newton[j]
        shifted = [Fraction(0)] + poly
        for i, c in enumerate(poly):
            shifted[i] -= c * xs[j]
        shifted[0] += newton[j]
        poly = shifted
    return poly


def degree_formula(rho: Iterable[int]) -> int:
    """``sum_{i<j} gcd(rho_i, rho_j) + sum_i floor((rho_i - 1)/2)``."""
    rho = Partition(rho)
    pairs = sum(gcd(rho[i], rho[j]) for i in range(len(rho)) for j in range(i + 1, len(rho)))
    return pairs + sum((p - 1) // 2 for p in rho)


def free_cell_orbits(rho: Iterable[int]) -> int:
    """Number of cell orbits: an a-priori upper bound on the degree of ``N_rho``."""
    return len(cell_orbits(representative(rho).zero))


def fit(
    rho: Iterable[int],
    max_period: int = DEFAULT_MAX_PERIOD,
    validation_points: int = DEFAULT_VALIDATION_POINTS,
    degree: int | None = None,
    max_sample_m: int = MAX_SAMPLE_M,
) -> Quasipolynomial:
    """Fit ``N_rho`` as a quasipolynomial in ``m``.

    Each residue class gets a polynomial of degree ``degree`` (default: the
    closed-form degree) through its first ``degree + 1`` samples, which must
    then reproduce ``validation_points`` further samples exactly.
    """
    rho = Partition(rho)
    d = degree_formula(rho) if degree is None else degree
    sigma = representative(rho)
    for p in range(1, max_period + 1):
        top = p - 1 + p * (d + validation_points)
        if top > max_sample_m:
            raise GuardExceeded(f"fitting {list(rho)} at period {p} needs m up to {top} > {max_sample_m}")
        rows = []
        for r in range(p):
            xs = [r + k * p for k in range(d + 1 + validation_points)]
            ys = [count_fixed(sigma, x) for x in xs]
            poly = interpolate(xs[: d + 1], ys[: d + 1])
            q = Quasipolynomial(1, (tuple(poly),))
            if any(evaluate(q, x) != y for x, y in zip(xs[d + 1 :], ys[d + 1 :])):
                break
            rows.append(tuple(poly))
        else:
            return Quasipolynomial(p, tuple(rows))
    raise FitError(f"no period <= {max_period} fits N_{list(rho)} at degree {d}")


@lru_cache(maxsize=None)
def fits_for(n: int, max_period: int = DEFAULT_MAX_PERIOD, validation_points: int = DEFAULT_VALIDATION_POINTS) -> dict[Partition, Quasipolynomial]:
    return {rho: fit(rho, max_period, validation_points) for rho in partitions_of(n)}


def _reciprocity_sign(n: int, rho: Partition) -> int:
    s = -1 if (n * (n - 1) // 2) % 2 else 1
    return s * eps(rho) ** (n - 1)


def parity_check(rho: Iterable[int]) -> bool:
    """``(-1)^deg == (-1)^{n(n-1)/2} eps(rho)^{n-1}``."""
    rho = Partition(rho)
    return (-1) ** degree_formula(rho) == _reciprocity_sign(rho.size, rho)


def reciprocity_check(n: int, m_range: Iterable[int], fits: dict[Partition, Quasipolynomial] | None = None) -> Report:
    """``N_rho(m) = (-1)^{n(n-1)/2} eps^{n-1} N_rho(-m-n)`` and ``N_rho(m) = 0`` for ``-n < m < 0``."""
    fits = fits if fits is not None else fits_for(n)
    name = f"reciprocity n={n}"
    m_range = list(m_range)
    for rho, q in fits.items():
        sign = _reciprocity_sign(n, rho)
        for m in m_range:
            if evaluate(q, m) != sign * evaluate(q, -m - n):
                return Report(name, False, witness=(rho, m))
        for m in range(-n + 1, 0):
            if evaluate(q, m) != 0:
                return Report(name, False, witness=(rho, m, "vanishing window"))
    return Report(name, True, {"m_range": (min(m_range), max(m_range)) if m_range else None})


def sum_quasipolynomial(lam: Iterable[int], fits: dict[Partition, Quasipolynomial] | None = None) -> Quasipolynomial:
    """``sum_rho chi^lam(rho) / z_rho * N_rho`` on the lcm of the periods."""
    lam = Partition(lam)
    fits = fits if fits is not None else fits_for(lam.size)
    chi = irreducible_character(lam)
    total = Quasipolynomial(1, ((Fraction(0),),))
    for rho, q in fits.items():
        total = total + q * Fraction(chi(rho), z(rho))
    return total


def asymptotics_check(n: int, fits: dict[Partition, Quasipolynomial] | None = None) -> Report:
    """Leading term ``chi^lam(1)/n! * lead(N_{1^n})`` and the second-order degree bound."""
    fits = fits if fits is not None else fits_for(n)
    name = f"asymptotics n={n}"
    top = n * (n - 1) // 2
    identity = Partition([1] * n)
    volume = fits[identity].leading_coefficients()
    if len(set(volume)) != 1 or fits[identity].degree != top:
        return Report(name, False, witness="identity fit is not of the expected form")
    vol = volume[0]
    trivial_sum = sum_quasipolynomial([n], fits)
    details = {"volume": vol}
    for lam in partitions_of(n):
        s = sum_quasipolynomial(lam, fits)
        dim = irreducible_character(lam)(identity)
        expected = dim * vol / factorial(n)
        if s.degree != top or any(c != expected for c in s.leading_coefficients()):
            return Report(name, False, details, witness=(lam, "leading term"))
        diff = s - trivial_sum * dim
        if not diff.is_zero() and diff.degree > (n - 1) * (n - 2) // 2:
            return Report(name, False, details, witness=(lam, "second-order degree", diff.degree))
    return Report(name, True, details)


def degree_check(rho: Iterable[int], max_period: int = DEFAULT_MAX_PERIOD) -> Report:
    """Fit under the cell-orbit degree bound, compare with the closed form, test on fresh samples.

    The fresh points are the ``2 (d + 1) p`` integers right after the last
    sample the fit consumed.
    """
    rho = Partition(rho)
    bound = free_cell_orbits(rho)
    q = fit(rho, max_period=max_period, degree=bound)
    d = degree_formula(rho)
    p = q.period
    first_fresh = p * (bound + 1 + DEFAULT_VALIDATION_POINTS)
    fresh = range(first_fresh, first_fresh + 2 * (d + 1) * p)
    sigma = representative(rho)
    mismatch = next((m for m in fresh if evaluate(q, m) != count_fixed(sigma, m)), None)
    details = {"degree": q.degree, "formula": d, "period": p, "fresh": (fresh.start, fresh.stop - 1)}
    ok = q.degree == d and mismatch is None
    return Report(f"N_{list(rho)}: degree {q.degree} (formula {d}), period {p}", ok, details,
                  witness=None if ok else mismatch)
