"""グラフ彩色ノルム ‖·‖₃ のスイート"""

from functools import lru_cache
from typing import Dict, List, Tuple

from ...config.settings import settings
from ...core.coloring import (
    BUILTIN_REDUCERS,
    clique_family,
    edge_systems_min,
    kgon_analysis,
    kgon_family,
    norm3,
    norm3_by_oracle,
    norm3_ge_oracle,
    norm_from_parts,
    norm_upper_bound,
    psi_step,
    rook_construction,
    size_bounds,
    splitting_number,
    star_family,
)
from ...core.report import Report
from ...core.setcore import Family, SubsetMask, popcount
from ..generators import exhaustive_cases, pick
from ..registry import suite

ROOK = "rook"


@lru_cache(maxsize=4)
def _table(N: int) -> Tuple[Tuple[SubsetMask, ...], List[int]]:
    """P_N の元の列と、全ての選択ビットに対する分割数"""
    ground = tuple(m for m in range(1 << N) if popcount(m) >= 2)
    return ground, [splitting_number(Family(N, pick(ground, s)))[0] for s in range(1 << len(ground))]


def _index(ground: Tuple[SubsetMask, ...]) -> Dict[SubsetMask, int]:
    return {m: i for i, m in enumerate(ground)}


def _selector_of(A: Family, index: Dict[SubsetMask, int]) -> int:
    return sum(1 << index[m] for m in A.members)


def _polygon_cases(params, count):
    N = int(params["N"])
    return exhaustive_cases(len(_table(N)[0]))


def _setting(case, params):
    N = int(params["N"])
    ground, parts = _table(N)
    selector = case[1]
    return N, ground, parts, selector, Family(N, pick(ground, selector))


@suite(
    "coloring.monotone",
    module="norm-coloring",
    invariant="A subset of B implies |A|_3 <= |B|_3, exhaustive over P_4",
    cases=_polygon_cases,
    defaults={"N": 4},
)
def monotone(case, params, seed):
    N, ground, parts, selector, A = _setting(case, params)
    report = Report(name="coloring.monotone")
    value = norm_from_parts(parts[selector])
    for i in range(len(ground)):
        if not selector >> i & 1 and norm_from_parts(parts[selector | 1 << i]) < value:
            report.add_violation("norm3 monotone", A=A.as_lists(), added=Family(N, (ground[i],)).as_lists()[0])
    return report


@suite(
    "coloring.oracle_equivalence",
    module="norm-coloring",
    invariant="norm3(A) = max{n : recursive oracle says |A|_3 >= n} for all 2048 families over P_4",
    cases=_polygon_cases,
    defaults={"N": 4},
)
def oracle_equivalence(case, params, seed):
    N, ground, parts, selector, A = _setting(case, params)
    report = Report(name="coloring.oracle_equivalence")
    fast, slow = norm_from_parts(parts[selector]), norm3_by_oracle(A)
    if fast != slow:
        report.add_violation("norm3 equals oracle", A=A.as_lists(), norm3=fast, oracle=slow)
    return report


@suite(
    "coloring.oracle_step_down",
    module="norm-coloring",
    invariant="oracle: |A|_3 >= n+1 implies |A|_3 >= n",
    cases=_polygon_cases,
    defaults={"N": 4},
)
def oracle_step_down(case, params, seed):
    N, ground, parts, selector, A = _setting(case, params)
    report = Report(name="coloring.oracle_step_down")
    levels = [norm3_ge_oracle(A, n) for n in range(N + 2)]
    for n in range(N + 1):
        if levels[n + 1] and not levels[n]:
            report.add_violation("oracle is downward closed", A=A.as_lists(), n=n)
    return report


def _split_union_cases(params, count):
    return [(ROOK, int(n)) for n in params["rook"]] + _polygon_cases(params, count)


@suite(
    "coloring.split_union",
    module="norm-coloring",
    invariant="c(A u B) <= c(A) c(B), exhaustive at N=4; rook construction tight at n=2",
    cases=_split_union_cases,
    defaults={"N": 4, "rook": [2]},
)
def split_union(case, params, seed):
    report = Report(name="coloring.split_union")
    if case[0] == ROOK:
        n = case[1]
        A, B = rook_construction(n)
        ca, cb, cu = splitting_number(A)[0], splitting_number(B)[0], splitting_number(A.union(B))[0]
        report.values = {"n": n, "c_A": ca, "c_B": cb, "c_union": cu}
        if (ca, cb, cu) != (n, n, n * n):
            report.add_violation("rook construction is tight", n=n, parts=[ca, cb, cu])
        return report

    N, ground, parts, selector, A = _setting(case, params)
    for other in range(1 << len(ground)):
        if parts[selector | other] > parts[selector] * parts[other]:
            report.add_violation(
                "c(A u B) <= c(A) c(B)",
                A=A.as_lists(), B=Family(N, pick(ground, other)).as_lists(),
            )
    return report


@suite(
    "coloring.triangle",
    module="norm-coloring",
    invariant="|A u B|_3 <= |A|_3 + |B|_3, exhaustive at N=4",
    cases=_polygon_cases,
    defaults={"N": 4},
)
def triangle(case, params, seed):
    N, ground, parts, selector, A = _setting(case, params)
    report = Report(name="coloring.triangle")
    a = norm_from_parts(parts[selector])
    for other in range(1 << len(ground)):
        if norm_from_parts(parts[selector | other]) > a + norm_from_parts(parts[other]):
            report.add_violation(
                "norm3 triangle inequality",
                A=A.as_lists(), B=Family(N, pick(ground, other)).as_lists(),
            )
    return report


@suite(
    "coloring.psi_monotone",
    module="norm-coloring",
    invariant="|A|_3 <= |psi_g(A)|_3 for every built-in reducer, exhaustive over P_4",
    cases=_polygon_cases,
    defaults={"N": 4},
)
def psi_monotone(case, params, seed):
    N, ground, parts, selector, A = _setting(case, params)
    index = _index(ground)
    report = Report(name="coloring.psi_monotone")
    value = norm_from_parts(parts[selector])
    for g in BUILTIN_REDUCERS:
        reduced = psi_step(A, g)
        if norm_from_parts(parts[_selector_of(reduced, index)]) < value:
            report.add_violation("psi does not lower the norm", A=A.as_lists(), reducer=g.kind)
    return report


@suite(
    "coloring.vertex_deletion",
    module="norm-coloring",
    invariant="|restrict(A, N minus {v})|_3 >= |A|_3 - 1, exhaustive N=4",
    cases=_polygon_cases,
    defaults={"N": 4},
)
def vertex_deletion(case, params, seed):
    N, ground, parts, selector, A = _setting(case, params)
    report = Report(name="coloring.vertex_deletion")
    value = norm_from_parts(parts[selector])
    for v in range(N):
        keep = sum(1 << i for i, m in enumerate(ground) if not m >> v & 1)
        if norm_from_parts(parts[selector & keep]) < value - 1:
            report.add_violation("vertex deletion lowers the norm by at most one", A=A.as_lists(), v=v)
    return report


def _star_cases(params, count):
    return [(N, v) for N in range(2, int(params["max_N"]) + 1) for v in range(N)]


@suite(
    "coloring.star",
    module="norm-coloring",
    invariant="|{a in P_N : v in a}|_3 = 1 for all v, N <= 6",
    cases=_star_cases,
    defaults={"max_N": 6},
)
def star(case, params, seed):
    N, v = case
    report = Report(name="coloring.star")
    value = norm3(star_family(N, v))[0]
    if value != 1:
        report.add_violation("star family has norm 1", N=N, v=v, norm=value)
    return report


@suite(
    "coloring.universe_extension",
    module="norm-coloring",
    invariant="embedding A subset of P_N into P_(N+1) preserves the norm, exhaustive N=4",
    cases=_polygon_cases,
    defaults={"N": 4},
)
def universe_extension(case, params, seed):
    N, ground, parts, selector, A = _setting(case, params)
    report = Report(name="coloring.universe_extension")
    lifted = norm3(A.with_universe(N + 1))[0]
    if lifted != norm_from_parts(parts[selector]):
        report.add_violation("norm unchanged by a larger universe", A=A.as_lists(), lifted=lifted)
    return report


@suite(
    "coloring.log_bound",
    module="norm-coloring",
    invariant="|A|_3 <= ceil(log2 N) because every family is split by N singletons",
    cases=_polygon_cases,
    defaults={"N": 4},
)
def log_bound(case, params, seed):
    N, ground, parts, selector, A = _setting(case, params)
    report = Report(name="coloring.log_bound")
    if parts[selector] > N or norm_from_parts(parts[selector]) > norm_upper_bound(N):
        report.add_violation("norm3 <= ceil(log2 N)", A=A.as_lists(), parts=parts[selector])
    return report


@suite(
    "coloring.size_bounds",
    module="norm-coloring",
    invariant="|A|_3 = k implies min_size <= |A| <= max_size, exhaustive N=4",
    cases=_polygon_cases,
    defaults={"N": 4},
)
def size_bound_contract(case, params, seed):
    N, ground, parts, selector, A = _setting(case, params)
    report = Report(name="coloring.size_bounds")
    k = norm_from_parts(parts[selector])
    if k >= 1:
        low, high = size_bounds(N, k)
        if not low <= len(A) <= high:
            report.add_violation("size within bounds", A=A.as_lists(), k=k, bounds=[low, high])
    return report


@suite(
    "coloring.edge_systems",
    module="norm-coloring",
    invariant="min norm over edge systems of A equals |A|_3, exhaustive N=4",
    cases=_polygon_cases,
    defaults={"N": 4},
)
def edge_systems(case, params, seed):
    N, ground, parts, selector, A = _setting(case, params)
    report = Report(name="coloring.edge_systems")
    value, system = edge_systems_min(A, product_limit=settings.selection_product_limit)
    if value != norm_from_parts(parts[selector]):
        report.add_violation("edge systems attain the norm", A=A.as_lists(), edge_norm=value, system=system.as_lists())
    return report


def _kgon_cases(params, count):
    top = int(params["max_N"])
    return [(N, k) for N in range(2, top + 1) for k in range(2, N + 1)]


def _kgon_summary(outcomes: List[Report], params) -> Dict:
    mismatches = [
        [o.params["N"], o.params["k"], o.values["exact"], o.values["stated"]]
        for o in outcomes if not o.values["match"]
    ]
    return {"pairs": len(outcomes), "mismatches": mismatches}


@suite(
    "coloring.kgon",
    module="norm-coloring",
    invariant="splitting number of all k-gons equals ceil(N/(k-1)) for 2 <= k <= N <= 10",
    cases=_kgon_cases,
    defaults={"max_N": 10},
    supplementary=True,
    summarize=_kgon_summary,
)
def kgon(case, params, seed):
    N, k = case
    return kgon_analysis(N, k)



def _clique_cases(params, count):
    N = int(params["N"])
    return [C for C in range(1 << N) if popcount(C) >= 2]


@suite(
    "coloring.clique",
    module="norm-coloring",
    invariant="a c-clique needs exactly c parts, supersets need at least c; k-gons inside c(k-1) vertices need c parts",
    cases=_clique_cases,
    defaults={"N": 6},
    supplementary=True,
)
def clique(C, params, seed):
    N = int(params["N"])
    size = popcount(C)
    report = Report(name="coloring.clique")
    edges = clique_family(C, N)
    parts = splitting_number(edges)[0]
    if parts != size:
        report.add_violation("clique needs |C| parts", C=Family(N, (C,)).as_lists()[0], parts=parts)
    extended = edges.union(kgon_family(N, 3))
    if splitting_number(extended)[0] < size:
        report.add_violation("family containing a clique needs >= |C| parts", C=Family(N, (C,)).as_lists()[0])
    for k in range(3, size + 1):
        if size % (k - 1):
            continue
        inside = splitting_number(kgon_family(N, k, within=C))[0]
        if inside != size // (k - 1):
            report.add_violation("k-gons inside C need |C|/(k-1) parts", k=k, parts=inside,
                                 C=Family(N, (C,)).as_lists()[0])
    return report
