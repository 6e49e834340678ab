"""除外ノルム ‖·‖₁ のスイート"""

from ...config.settings import settings
from ...core.axioms import axiom_check
from ...core.exclusion import (
    ExclusionParams,
    norm1,
    partition_bounds,
    size_from_norm1,
    union_bound_check,
)
from ...core.report import Report
from ...core.setcore import elements_of, popcount
from ..registry import suite


def _fg_cases(params, count):
    """(F, G) の組。G は 2..max_G（G 指定時はその値のみ）"""
    universes = [int(params["G"])] if "G" in params else range(2, int(params["max_G"]) + 1)
    return [(F, G) for G in universes for F in range(1, G)]


@suite(
    "exclusion.monotone",
    module="norm-exclusion",
    invariant="A subset of B implies norm1(A) <= norm1(B), exhaustive G <= 8",
    cases=_fg_cases,
    defaults={"max_G": 8},
)
def monotone(case, params, seed):
    p = ExclusionParams(*case)
    report = Report(name="exclusion.monotone")
    for A in range(1 << p.G):
        value = norm1(p, A)
        for v in range(p.G):
            if not A >> v & 1 and norm1(p, A | 1 << v) < value:
                report.add_violation("norm1 monotone", F=p.F, G=p.G, A=elements_of(A), added=v)
    return report


@suite(
    "exclusion.size_relationship",
    module="norm-exclusion",
    invariant="size_from_norm1(norm1(A)) = |A| exactly, G <= 8",
    cases=_fg_cases,
    defaults={"max_G": 8},
)
def size_relationship(case, params, seed):
    p = ExclusionParams(*case)
    report = Report(name="exclusion.size_relationship")
    for A in range(1 << p.G):
        if size_from_norm1(p, norm1(p, A)) != popcount(A):
            report.add_violation("size from norm", F=p.F, G=p.G, A=elements_of(A))
    return report


@suite(
    "exclusion.axioms",
    module="norm-exclusion",
    invariant="norm axioms hold for norm1 on P(G), exhaustive G <= 8",
    cases=_fg_cases,
    defaults={"max_G": 8},
)
def axioms(case, params, seed):
    p = ExclusionParams(*case)
    outcome = axiom_check(1, p, p.ground, seed=seed, exhaustive_limit=settings.exhaustive_axiom_limit)
    report = Report(name="exclusion.axioms", values={"F": p.F, "G": p.G, **outcome.values})
    report.violations.extend(outcome.violations)
    return report


@suite(
    "exclusion.partition_bounds",
    module="norm-exclusion",
    invariant="min <= 2F/(G+2) <= max over every partition (A,B) of G <= 10",
    cases=_fg_cases,
    defaults={"max_G": 10},
)
def partition(case, params, seed):
    p = ExclusionParams(*case)
    report = Report(name="exclusion.partition_bounds")
    for A in range(1 << p.G):
        report.violations.extend(partition_bounds(p, A, p.ground & ~A).violations)
    return report


def _union_cases(params, count):
    return [(F, G, A) for F, G in _fg_cases(params, count) for A in range(1 << G)]


@suite(
    "exclusion.union_bound",
    module="norm-exclusion",
    invariant="corrected union bound j <= F/Q (Q > 0) for all A, B, F < G <= 8",
    cases=_union_cases,
    defaults={"max_G": 8},
)
def union_bound(case, params, seed):
    F, G, A = case
    p = ExclusionParams(F, G)
    report = Report(name="exclusion.union_bound")
    for B in range(1 << G):
        outcome = union_bound_check(p, A, B)
        report.violations.extend(outcome.violations)
        # 記述の向きとの食い違いはケースごとに最初の一件だけ残す
        if outcome.discrepancies and not report.discrepancies:
            report.discrepancies.append({**outcome.discrepancies[0], "F": F, "G": G})
    return report
