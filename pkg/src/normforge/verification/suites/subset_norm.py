"""部分集合ノルム ‖·‖₂ のスイート"""

from fractions import Fraction
from functools import lru_cache
from math import ceil
from typing import List, Tuple

from ...core.combinatorics import binomial, verify_complement_sum
from ...core.report import Report
from ...core.setcore import Family
from ...core.subset_norm import (
    SubsetNormParams,
    baju_check,
    localize,
    norm2,
    ratio_upper_bound,
    universe_X,
)
from ..extremal import exhaustive_extremal
from ..generators import ALL, case_rng, exhaustive_cases, pick, random_cases, random_mask
from ..registry import suite

# これ以下の |X| なら族を全列挙
EXHAUSTIVE_X = 12


@lru_cache(maxsize=8)
def _norm_table(n: int, G: int) -> Tuple[Tuple[int, ...], List[int]]:
    """X の元の列と、全ての選択ビットに対する ‖·‖₂"""
    p = SubsetNormParams(n, G)
    ground = universe_X(p).members
    return ground, [norm2(p, Family(G, pick(ground, s)))[0] for s in range(1 << len(ground))]


def _family_cases(params, count):
    p = SubsetNormParams(int(params["n"]), int(params["G"]))
    if p.x_size <= EXHAUSTIVE_X:
        return exhaustive_cases(p.x_size)
    return random_cases(count)


@suite(
    "norm2.sandwich",
    module="norm-subset",
    invariant="max(|A|_2,|B|_2) <= |A u B|_2 <= |A|_2 + |B|_2 (exhaustive n=1,G=4; random n=1,G=6)",
    cases=_family_cases,
    defaults={"n": 1, "G": 4},
)
def sandwich(case, params, seed):
    n, G = int(params["n"]), int(params["G"])
    report = Report(name="norm2.sandwich")
    tag, value = case
    if tag == ALL:
        ground, table = _norm_table(n, G)
        a = table[value]
        for other in range(1 << len(ground)):
            b, joined = table[other], table[value | other]
            if not max(a, b) <= joined <= a + b:
                report.add_violation(
                    "max <= norm(A u B) <= sum",
                    A=Family(G, pick(ground, value)).as_lists(),
                    B=Family(G, pick(ground, other)).as_lists(),
                    norms=[a, b, joined],
                )
        return report

    p = SubsetNormParams(n, G)
    ground = universe_X(p).members
    rng = case_rng(seed, value)
    A = Family(G, pick(ground, random_mask(rng, len(ground), 0.3)))
    B = Family(G, pick(ground, random_mask(rng, len(ground), 0.3)))
    a, b, joined = norm2(p, A)[0], norm2(p, B)[0], norm2(p, A.union(B))[0]
    if not max(a, b) <= joined <= a + b:
        report.add_violation("max <= norm(A u B) <= sum", A=A.as_lists(), B=B.as_lists(), norms=[a, b, joined])
    return report


def _table_cases(params, count):
    p = SubsetNormParams(int(params["n"]), int(params["G"]))
    return exhaustive_cases(p.x_size)


@suite(
    "norm2.localize",
    module="norm-subset",
    invariant="|A(l)|_2 >= |A|_2 - 1 for all A, l (exhaustive n=1,G=4)",
    cases=_table_cases,
    defaults={"n": 1, "G": 4},
)
def localize_bound(case, params, seed):
    n, G = int(params["n"]), int(params["G"])
    p = SubsetNormParams(n, G)
    ground, table = _norm_table(n, G)
    A = Family(G, pick(ground, case[1]))
    report = Report(name="norm2.localize")
    for l in range(G):
        local = norm2(p, localize(A, l))[0]
        if local < table[case[1]] - 1:
            report.add_violation("norm(A(l)) >= norm(A) - 1", A=A.as_lists(), l=l, norm=table[case[1]], local=local)
    return report


@suite(
    "norm2.monotone",
    module="norm-subset",
    invariant="A subset of B implies |A|_2 <= |B|_2 (exhaustive n=1,G=4)",
    cases=_table_cases,
    defaults={"n": 1, "G": 4},
)
def monotone(case, params, seed):
    n, G = int(params["n"]), int(params["G"])
    ground, table = _norm_table(n, G)
    selector = case[1]
    report = Report(name="norm2.monotone")
    for i in range(len(ground)):
        if not selector >> i & 1 and table[selector | 1 << i] < table[selector]:
            report.add_violation(
                "norm2 monotone",
                A=Family(G, pick(ground, selector)).as_lists(),
                added=Family(G, (ground[i],)).as_lists()[0],
            )
    return report


def _k_cases(params, count):
    return [int(k) for k in params["ks"]]


@suite(
    "norm2.lower_bound",
    module="norm-subset",
    invariant="min{|A| : |A|_2 >= k+1} >= ceil(C(G,k)/C(H,k)) (exhaustive n=1,G=4, k in {0,1,2})",
    cases=_k_cases,
    defaults={"n": 1, "G": 4, "ks": [0, 1, 2]},
)
def lower_bound(k, params, seed):
    p = SubsetNormParams(int(params["n"]), int(params["G"]))
    bound = ceil(Fraction(binomial(p.G, k), binomial(p.H, k)))
    size, witness = exhaustive_extremal(2, {"n": p.n, "G": p.G}, "min_size_at_norm", k + 1)
    report = Report(name="norm2.lower_bound", values={"k": k, "min_size": size, "bound": bound})
    if size is not None and size < bound:
        report.add_violation("min size >= C(G,k)/C(H,k)", k=k, size=size, bound=bound, witness=witness)
    return report


def _grid_k_cases(params, count):
    cases = []
    for n, G in params["grid"]:
        p = SubsetNormParams(int(n), int(G))
        cases.extend((p.n, p.G, k) for k in range(1, p.H + 1))
    return cases


@suite(
    "norm2.upper_bound_tightness",
    module="norm-subset",
    invariant="max{|A| : |A|_2 <= k} = |X|(1 - prod (H-i)/(G-i)) (exhaustive (1,4) and (2,4))",
    cases=_grid_k_cases,
    defaults={"grid": [[1, 4], [2, 4]]},
)
def upper_bound_tightness(case, params, seed):
    n, G, k = case
    p = SubsetNormParams(n, G)
    expected = p.x_size * ratio_upper_bound(p, k)
    size, witness = exhaustive_extremal(2, {"n": n, "G": G}, "max_size_at_norm", k)
    report = Report(name="norm2.upper_bound_tightness", values={"n": n, "G": G, "k": k, "max_size": size, "expected": expected})
    if size != expected:
        report.add_violation("max size equals |X| * ratio", n=n, G=G, k=k, size=size, expected=expected)
    return report


def _g_cases(params, count):
    return list(range(1, int(params["max_G"]) + 1))


@suite(
    "norm2.complement_sum",
    module="norm-subset",
    invariant="C(G,H) - C(G-k,H-k) = sum C(G-i,H-i+1) for k <= H <= G <= 20",
    cases=_g_cases,
    defaults={"max_G": 20},
)
def complement_sum(G, params, seed):
    report = Report(name="norm2.complement_sum")
    for H in range(G + 1):
        for k in range(H + 1):
            check = verify_complement_sum(G, H, k)
            if not check.holds:
                report.add_violation("complement sum", G=G, H=H, k=k, **check.to_dict())
    return report


def _baju_cases(params, count):
    return [tuple(int(v) for v in row) for row in params["grid"]]


@suite(
    "norm2.baju",
    module="norm-subset",
    invariant="extremal family A* has norm k and ratio 1 - product, product < 2^(-nk)",
    cases=_baju_cases,
    defaults={"grid": [[1, 6, 2], [1, 8, 2], [2, 8, 2]]},
    supplementary=True,
)
def baju(case, params, seed):
    n, G, k = case
    outcome = baju_check(SubsetNormParams(n, G), k)
    outcome.values = {"n": n, "G": G, "k": k, **outcome.values}
    return outcome
