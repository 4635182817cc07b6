"""The desk-scale verification battery behind ``plethcount paper-suite``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import ehrhart, matrices, orbits, oracle
from .characters import inner_product, sign_character, theta_identity_check, trivial_character
from .errors import Report
from .partitions import Partition, count_odd_part_partitions, partition_count, partitions_of

EXAMPLE_3_3 = {
    Partition([9]): 1,
    Partition([7, 2]): 1,
    Partition([6, 3]): 1,
    Partition([5, 2, 2]): 1,
    Partition([4, 4, 1]): 1,
}

CROSS_CHECK_RANGE = sorted(
    {(n, m) for n in range(1, 5) for m in range(1, 4)}
    | {(n, m) for n in range(1, 4) for m in range(1, 5)}
    | {(2, m) for m in range(1, 7)}
)

SKIP_NOTE = (
    "n=6, lambda=[6]: the degree-15 quasipolynomial (leading coefficient "
    "243653/1434705592320000) is not reproducible here; fitting it needs "
    "N_rho(m) samples at m far beyond what cell-orbit counting reaches at "
    "desk scale. The n <= 4 degree, reciprocity and asymptotics checks stand in."
)


@dataclass
class SuiteOptions:
    n_max: int = 4
    nm_max: int = 8
    theta_k: int = 6
    m2_n_max: int = 8
    counts_n_max: int = 10
    parity_n_max: int = 30
    foulkes_max: int = 4


def check_example(opts: SuiteOptions) -> list[Report]:
    res = oracle.plethysm_schur([3], 3)
    fixed = sum(1 for c in orbits.orbit_classes(3, 3) if c.transpose_fixed)
    return [
        Report("s_3[s_3] decomposition", dict(res.coefficients) == EXAMPLE_3_3, {"a": res.items()}),
        Report("<chi^3, N^3> = 5", matrices.plethysm_sum([3], 3) == 5),
        Report("#T(3,3)/~ = 5", fixed == 5, {"classes": fixed}),
    ]


def check_crosscheck(opts: SuiteOptions) -> list[Report]:
    out = []
    for n, m in CROSS_CHECK_RANGE:
        bad = [
            (lam, oracle.oracle_sum(lam, m), matrices.plethysm_sum(lam, m))
            for lam in partitions_of(n)
            if oracle.oracle_sum(lam, m) != matrices.plethysm_sum(lam, m)
        ]
        out.append(Report(f"oracle = <chi, N^m> n={n} m={m}", not bad, witness=bad[0] if bad else None))
    return out


def check_theta(opts: SuiteOptions) -> list[Report]:
    return [theta_identity_check(k) for k in range(1, opts.theta_k + 1)]


def check_fiber(opts: SuiteOptions) -> list[Report]:
    out = []
    for n in range(1, opts.nm_max + 1):
        for m in range(1, opts.nm_max // n + 1):
            reports = matrices.fiber_check_all(n, m)
            failed = next((r for r in reports if not r.passed), None)
            out.append(Report(f"fiber map n={n} m={m} ({len(reports)} sigma)", failed is None,
                              witness=failed.name if failed else None))
    return out


def check_parity(opts: SuiteOptions) -> list[Report]:
    bad = [rho for n in range(1, opts.parity_n_max + 1) for rho in partitions_of(n) if not ehrhart.parity_check(rho)]
    top_ok = all(
        ehrhart.degree_formula(rho) < n * (n - 1) // 2 or rho == Partition([1] * n)
        for n in range(1, opts.parity_n_max + 1)
        for rho in partitions_of(n)
    ) and all(ehrhart.degree_formula([1] * n) == n * (n - 1) // 2 for n in range(1, opts.parity_n_max + 1))
    return [
        Report(f"degree parity, all rho |- n <= {opts.parity_n_max}", not bad, witness=bad[0] if bad else None),
        Report(f"degree <= n(n-1)/2, equality only at 1^n, n <= {opts.parity_n_max}", top_ok),
    ]


def check_degree(opts: SuiteOptions) -> list[Report]:
    return [ehrhart.degree_check(rho) for n in range(1, opts.n_max + 1) for rho in partitions_of(n)]


def check_reciprocity(opts: SuiteOptions) -> list[Report]:
    return [ehrhart.reciprocity_check(n, range(0, 11)) for n in range(1, opts.n_max + 1)]


def check_asymptotics(opts: SuiteOptions) -> list[Report]:
    return [ehrhart.asymptotics_check(n) for n in range(1, opts.n_max + 1)]


def check_burnside(opts: SuiteOptions) -> list[Report]:
    return [orbits.burnside_check(n, m) for n in range(1, opts.n_max + 1) for m in range(1, 4)]


def check_orbits(opts: SuiteOptions) -> list[Report]:
    pairs = [(n, m) for n in range(1, opts.n_max + 1) for m in range(1, 4)] + [(4, 4), (3, 6)]
    return [orbits.orbit_identities_check(n, m) for n, m in pairs]


def check_m2(opts: SuiteOptions) -> list[Report]:
    out = [orbits.m2_sign_check(n) for n in range(1, opts.m2_n_max + 1)]
    for n in range(1, opts.counts_n_max + 1):
        total = matrices.n_class_function(n, 2)
        a = inner_product(trivial_character(n), total)
        b = inner_product(sign_character(n), total)
        ok = a == partition_count(n) and b == count_odd_part_partitions(n)
        out.append(Report(f"<1,N^2> = p({n}) = {a}, <sgn,N^2> = {b}", ok))
    return out


def check_foulkes(opts: SuiteOptions) -> list[Report]:
    table = orbits.foulkes_table(opts.foulkes_max, opts.foulkes_max)
    out = [
        Report(f"#T({n},{m})/~ = {cell.orbit_count} by both routes", cell.routes_agree)
        for (n, m), cell in sorted(table.items())
        if cell.present
    ]
    violations = orbits.foulkes_violations(table)
    out.append(Report("T(n,m) <= T(m,n) for n <= m (reported, not asserted)", True, {"violations": violations}))
    return out


def check_skip(opts: SuiteOptions) -> list[Report]:
    return [Report("n=6 degree-15 quasipolynomial: SKIPPED (documented)", True, {"note": SKIP_NOTE})]


CHECKS: dict[str, Callable[[SuiteOptions], list[Report]]] = {
    "example": check_example,
    "crosscheck": check_crosscheck,
    "theta": check_theta,
    "fiber": check_fiber,
    "parity": check_parity,
    "degree": check_degree,
    "reciprocity": check_reciprocity,
    "asymptotics": check_asymptotics,
    "burnside": check_burnside,
    "orbits": check_orbits,
    "m2": check_m2,
    "foulkes": check_foulkes,
    "skip": check_skip,
}


def run(only: list[str] | None, opts: SuiteOptions, emit: Callable[[str], None] = print) -> bool:
    ok = True
    for key in only or list(CHECKS):
        reports = CHECKS[key](opts)
        passed = all(r.passed for r in reports)
        ok &= passed
        emit(f"== {key}: {'PASS' if passed else 'FAIL'} ({len(reports)} checks)")
        for r in reports:
            emit("   " + r.line())
        if key == "skip":
            emit("   " + SKIP_NOTE)
    return ok
