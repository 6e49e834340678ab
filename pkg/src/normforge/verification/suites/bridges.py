"""
ノルム間の橋渡しのスイート

プロファイル写像 P、P⁺・P* と ‖·‖₂/‖·‖₃/‖·‖₄ の関係を扱います。
"""

from functools import lru_cache
from itertools import combinations
from typing import Tuple

from ...core.bridges import (
    contrast_instances,
    edge_lemma_check,
    pplus_bounds_check,
    profile,
    profile_inverse,
    pstar_claim_scan,
    subset_bridge_check,
)
from ...core.partial_functions import FnSet, PartialFn, all_partial_functions
from ...core.report import Report
from ...core.setcore import Family, SubsetMask, full_mask, masks_of_size
from ..generators import ALL, case_rng, exhaustive_cases, pick, random_fnset, random_universe
from ..registry import suite


def _universe_cases(params, count):
    return list(range(1, int(params["max_N"]) + 1))


@suite(
    "bridges.profile_bijection",
    module="bridges",
    invariant="P is a bijection between total functions on N and subsets of N, N <= 6",
    cases=_universe_cases,
    defaults={"max_N": 6},
)
def profile_bijection(N, params, seed):
    report = Report(name="bridges.profile_bijection")
    seen = set()
    for p in range(1 << N):
        f = profile_inverse(N, p)
        if f.domain != full_mask(N) or profile(f) != p:
            report.add_violation("P(P^-1(p)) = p", N=N, p=p)
        seen.add(f)
    if len(seen) != 1 << N:
        report.add_violation("P^-1 injective", N=N, images=len(seen))
    return report


@lru_cache(maxsize=4)
def _half_sets(N: int, n: int) -> Tuple[SubsetMask, ...]:
    return tuple(masks_of_size(N, N >> n))


def _bridge_cases(params, count):
    return exhaustive_cases(len(_half_sets(int(params["N"]), int(params["n"]))))


@suite(
    "bridges.subset_bridge",
    module="bridges",
    invariant="norm4(P^-1[B]) <= norm2(B) + 1 for all B subset of X_1^4",
    cases=_bridge_cases,
    defaults={"N": 4, "n": 1},
)
def subset_bridge(case, params, seed):
    N, n = int(params["N"]), int(params["n"])
    B = Family(N, pick(_half_sets(N, n), case[1]))
    outcome = subset_bridge_check(n, N, B)
    outcome.values = {}
    return outcome


def _sigma_cases(params, count):
    return [(N, s.domain, s.ones) for N in range(1, int(params["max_N"]) + 1) for s in all_partial_functions(N)]


@suite(
    "bridges.edge_lemma",
    module="bridges",
    invariant="edges of dom(sigma) other than P(sigma) lie in P+(D({sigma})), all sigma with N <= 5",
    cases=_sigma_cases,
    defaults={"max_N": 5},
)
def edge_lemma(case, params, seed):
    N, domain, ones = case
    return edge_lemma_check(PartialFn(domain, ones), N)


def _pplus_cases(params, count):
    total = 1 << int(params["N"])
    small = [(ALL, combo) for size in range(int(params["max_size"]) + 1) for combo in combinations(range(total), size)]
    return small + [("random", i) for i in range(count)]


@suite(
    "bridges.pplus_bounds",
    module="bridges",
    invariant="splitting number of P+(A) against norm4(A), exhaustive |A| <= 4 at N=4 plus random N <= 6",
    cases=_pplus_cases,
    defaults={"N": 4, "max_size": 4, "max_N": 6, "density": 0.5},
)
def pplus_bounds(case, params, seed):
    tag, value = case
    if tag == ALL:
        A = FnSet(int(params["N"]), value)
    else:
        rng = case_rng(seed, value)
        A = random_fnset(rng, random_universe(rng, 2, int(params["max_N"])), float(params["density"]))
    outcome = pplus_bounds_check(A)
    outcome.values = {}
    return outcome


def _contrast_cases(params, count):
    return [int(N) for N in params["universes"]]


@suite(
    "bridges.contrast",
    module="bridges",
    invariant="weight-2 sets have N parts; two-block sets have norm4 N/2+1 and at most 2 parts",
    cases=_contrast_cases,
    defaults={"universes": [4, 6]},
)
def contrast(N, params, seed):
    instances = {item["name"]: item for item in contrast_instances(N)}
    report = Report(name="bridges.contrast", values={"N": N, "instances": list(instances.values())})
    weight2, two_block = instances["weight2"], instances["two_block"]
    if weight2["parts"] != N:
        report.add_violation("weight2 parts = N", N=N, parts=weight2["parts"])
    if weight2["norm4"] > N:
        report.add_violation("weight2 norm4 <= N", N=N, norm4=weight2["norm4"])
    if two_block["norm4"] != N // 2 + 1:
        report.add_violation("two_block norm4 = N/2 + 1", N=N, norm4=two_block["norm4"])
    if two_block["parts"] > 2:
        report.add_violation("two_block parts <= 2", N=N, parts=two_block["parts"])
    return report


def _scan_cases(params, count):
    return [int(N) for N in params["universes"]]


@suite(
    "bridges.pstar_scan",
    module="bridges",
    invariant="search for counterexamples to the P* profile proposition over small N",
    cases=_scan_cases,
    defaults={"universes": [2], "scan_budget": 100000},
    supplementary=True,
)
def pstar_scan(N, params, seed):
    return pstar_claim_scan(N, int(params["scan_budget"]))
