"""組合せ恒等式のスイート"""

from ...core.combinatorics import (
    factorial_bounds,
    partial_count,
    pascal_holds,
    sandwiches_factorial,
    verify_identity_A,
    verify_identity_B,
)
from ...core.report import Report
from ..registry import suite


def _a_values(params, count):
    return list(range(1, int(params["max_a"]) + 1))


@suite(
    "comb.identity_a",
    module="combinatorics",
    invariant="alternating binomial sum identity for k-1 <= b <= a-k, a <= 20",
    cases=_a_values,
    defaults={"max_a": 20},
)
def identity_a(a, params, seed):
    report = Report(name="comb.identity_a")
    for k in range(1, a + 1):
        for b in range(max(1, k - 1), a - k + 1):
            check = verify_identity_A(k, a, b)
            if not check.holds:
                report.add_violation("identity A", k=k, a=a, b=b, **check.to_dict())
    return report


@suite(
    "comb.identity_b",
    module="combinatorics",
    invariant="cumulative binomial sum identity for k-1 <= b, b+k <= a, a <= 20",
    cases=_a_values,
    defaults={"max_a": 20},
)
def identity_b(a, params, seed):
    report = Report(name="comb.identity_b")
    for k in range(1, a + 1):
        for b in range(max(1, k - 1), a - k + 1):
            check = verify_identity_B(k, a, b)
            if not check.holds:
                report.add_violation("identity B", k=k, a=a, b=b, **check.to_dict())
    return report


def _partial_count_cases(params, count):
    return [(N, n) for N in range(1, int(params["max_N"]) + 1) for n in range(1, int(params["max_n"]) + 1)]


@suite(
    "comb.partial_count",
    module="combinatorics",
    invariant="sum C(N,i) n^i = (n+1)^N for N <= 12, n <= 8",
    cases=_partial_count_cases,
    defaults={"max_N": 12, "max_n": 8},
)
def partial_count_equality(case, params, seed):
    N, n = case
    report = Report(name="comb.partial_count")
    by_domain, by_value = partial_count(N, n)
    if by_domain != by_value:
        report.add_violation("partial function count", N=N, n=n, by_domain=by_domain, by_value=by_value)
    return report


def _pascal_cases(params, count):
    return list(range(int(params["max_c"]) + 1))


@suite(
    "comb.pascal",
    module="combinatorics",
    invariant="C(c,d) + C(c,d+1) = C(c+1,d+1) for c <= 64",
    cases=_pascal_cases,
    defaults={"max_c": 64},
)
def pascal(c, params, seed):
    report = Report(name="comb.pascal")
    for d in range(c + 1):
        if not pascal_holds(c, d):
            report.add_violation("Pascal recurrence", c=c, d=d)
    return report


def _factorial_cases(params, count):
    return list(range(1, int(params["max_m"]) + 1))


@suite(
    "comb.factorial_bounds",
    module="combinatorics",
    invariant="factorial_bounds sandwich m! for m <= 100",
    cases=_factorial_cases,
    defaults={"max_m": 100},
)
def factorial_sandwich(m, params, seed):
    report = Report(name="comb.factorial_bounds")
    if not sandwiches_factorial(m):
        lower, upper = factorial_bounds(m)
        report.add_violation("lower <= m! <= upper", m=m, lower=lower, upper=upper)
    return report
