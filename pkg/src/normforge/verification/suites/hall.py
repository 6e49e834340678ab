"""
Hall 型ノルム ‖·‖₄ のスイート

Δ/D の往復、順序関係、hn/HN、L/R 分割、接合・切断、サイズ下界を扱います。
"""

from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from ...config.settings import settings
from ...core.axioms import axiom_check
from ...core.errors import DomainError
from ...core.hall import (
    cone_family,
    cut_check,
    delta,
    delta_literal,
    dset,
    empty_R_bound_check,
    glue_check,
    hall_norm4,
    hall_norm_HN,
    hall_norm_HN_oracle,
    hall_size_lower_bound,
    hn,
    is_minimal_avoider,
    lr_split,
    preceq,
)
from ...core.partial_functions import FnFamily, FnSet, PartialFn, all_partial_functions
from ...core.report import Report
from ...core.setcore import full_mask, popcount
from ..extremal import exhaustive_extremal
from ..generators import (
    ALL,
    case_rng,
    exhaustive_cases,
    pick,
    random_cases,
    random_fnfamily,
    random_fnset,
    random_mask,
    random_pfn,
    random_universe,
)
from ..registry import suite

TOTAL = "total"
CONE = "cone"


@lru_cache(maxsize=4)
def _delta_table(N: int) -> List[FnFamily]:
    """ᴺ2 の全部分集合（選択ビット = 関数マスクの集合）の Δ"""
    return [delta(FnSet(N, pick(range(1 << N), s))) for s in range(1 << (1 << N))]


def _fnset_cases(params, count):
    return exhaustive_cases(1 << int(params["N"]))


def _strings(N: int, selector: int) -> List[str]:
    return FnSet(N, pick(range(1 << N), selector)).as_strings()


def _fnset(case, params) -> Tuple[int, int, FnSet]:
    N = int(params["N"])
    return N, case[1], FnSet(N, pick(range(1 << N), case[1]))


@suite(
    "hall.roundtrip",
    module="norm-hall",
    invariant="dset(delta(A)) = A for all A subset of 3-bit functions",
    cases=_fnset_cases,
    defaults={"N": 3},
)
def roundtrip(case, params, seed):
    N, selector, A = _fnset(case, params)
    report = Report(name="hall.roundtrip")
    if dset(_delta_table(N)[selector]) != A:
        report.add_violation("D(Delta(A)) = A", A=A.as_strings())
    return report


@suite(
    "hall.minimality",
    module="norm-hall",
    invariant="members of delta(A) are minimal; immediate-subfunction test equals the all-subfunction test",
    cases=_fnset_cases,
    defaults={"N": 3},
)
def minimality(case, params, seed):
    N, selector, A = _fnset(case, params)
    report = Report(name="hall.minimality")
    family = _delta_table(N)[selector]
    for sigma in family:
        if not is_minimal_avoider(A, sigma):
            report.add_violation("member of Delta(A) is a minimal avoider", A=A.as_strings(), sigma=sigma.as_mapping())
    if delta_literal(A) != family:
        report.add_violation("immediate and full minimality agree", A=A.as_strings())
    return report


@suite(
    "hall.subset_lemma",
    module="norm-hall",
    invariant="[sigma] disjoint from A implies some rho subset of sigma lies in delta(A), random N <= 6",
    defaults={"max_N": 6},
)
def subset_lemma(case, params, seed):
    rng = case_rng(seed, case[1])
    N = random_universe(rng, 1, int(params["max_N"]))
    A = random_fnset(rng, N, 0.4)
    sigma = random_pfn(rng, N)
    report = Report(name="hall.subset_lemma")
    if A.meets(sigma):
        return report
    if not any(rho.is_subfunction_of(sigma) for rho in delta(A)):
        report.add_violation("avoider contains a member of Delta(A)", A=A.as_strings(), sigma=sigma.as_mapping())
    return report


@suite(
    "hall.order_laws",
    module="norm-hall",
    invariant="delta injective; delta(A u {f}) <= delta(A); A subset of B iff delta(B) <= delta(A), exhaustive N=3",
    cases=_fnset_cases,
    defaults={"N": 3},
)
def order_laws(case, params, seed):
    N, selector, A = _fnset(case, params)
    table = _delta_table(N)
    mine = table[selector]
    report = Report(name="hall.order_laws")
    for other, theirs in enumerate(table):
        if other != selector and theirs == mine:
            report.add_violation("Delta is injective", A=A.as_strings(), B=_strings(N, other))
        contained = selector & ~other == 0
        if preceq(theirs, mine) != contained:
            report.add_violation("A subset of B iff Delta(B) <= Delta(A)", A=A.as_strings(), B=_strings(N, other))
        if popcount(other & ~selector) == 1 and contained and not preceq(theirs, mine):
            report.add_violation("adding a function refines Delta", A=A.as_strings(), B=_strings(N, other))
    return report


@lru_cache(maxsize=4)
def _pfn_ground(N: int) -> Tuple[PartialFn, ...]:
    return tuple(all_partial_functions(N))


@lru_cache(maxsize=4)
def _hn_table(N: int) -> List[int]:
    ground = _pfn_ground(N)
    return [hn(FnFamily(N, pick(ground, s))) for s in range(1 << len(ground))]


def _pfn_family_cases(params, count):
    return exhaustive_cases(len(_pfn_ground(int(params["N"]))))


@suite(
    "hall.hn_antitone",
    module="norm-hall",
    invariant="delta1 subset of delta2 implies hn(delta2) <= hn(delta1), exhaustive over families at N=2",
    cases=_pfn_family_cases,
    defaults={"N": 2},
)
def hn_antitone(case, params, seed):
    N = int(params["N"])
    ground, table = _pfn_ground(N), _hn_table(N)
    selector = case[1]
    report = Report(name="hall.hn_antitone")
    for i in range(len(ground)):
        if selector >> i & 1 and table[selector] > table[selector & ~(1 << i)]:
            report.add_violation(
                "hn antitone",
                family=[s.as_mapping() for s in pick(ground, selector)],
                removed=ground[i].as_mapping(),
            )
    return report


def _oracle_cases(params, count):
    return _pfn_family_cases(params, count) + random_cases(min(count, int(params["random_cases"])))


@suite(
    "hall.hn_oracle",
    module="norm-hall",
    invariant="hall_norm_HN equals max hn over refinements chosen member by member, N <= 4",
    cases=_oracle_cases,
    defaults={"N": 2, "random_N": 3, "max_members": 3, "random_cases": 200},
)
def hn_oracle(case, params, seed):
    tag, value = case
    if tag == ALL:
        N = int(params["N"])
        family = FnFamily(N, pick(_pfn_ground(N), value))
    else:
        rng = case_rng(seed, value)
        family = random_fnfamily(rng, int(params["random_N"]), int(params["max_members"]))
    report = Report(name="hall.hn_oracle")
    fast, slow = hall_norm_HN(family)[0], hall_norm_HN_oracle(
        family, product_limit=settings.selection_product_limit
    )
    if fast != slow:
        report.add_violation("HN equals oracle", family=family.as_mappings(), HN=fast, oracle=slow)
    return report


def _random_split(params, seed, index):
    rng = case_rng(seed, index)
    N = int(params["N"]) if "N" in params else random_universe(rng, 2, int(params["max_N"]))
    family = random_fnfamily(rng, N, int(params["max_members"]), min_size=1)
    Z = random_mask(rng, N)
    return N, family, Z


@suite(
    "hall.lr_min",
    module="norm-hall",
    invariant="HN(L u R) = min(HN(L), HN(R)) for lr_split outputs, random N <= 8",
    defaults={"max_N": 8, "max_members": 6},
    aliases=("hall.thm6.30",),
)
def lr_min(case, params, seed):
    N, family, Z = _random_split(params, seed, case[1])
    left, right = lr_split(family, Z)
    joined = hall_norm_HN(left.union(right))[0]
    expected = min(hall_norm_HN(left)[0], hall_norm_HN(right)[0])
    report = Report(name="hall.lr_min")
    if joined != expected:
        report.add_violation(
            "HN(L u R) = min(HN(L), HN(R))",
            N=N, family=family.as_mappings(), Z=Z, joined=joined, expected=expected,
        )
    return report


@suite(
    "hall.lr_half",
    module="norm-hall",
    invariant="hn(L) >= hn/2 and hn(R) >= hn/2 when hn > 1, random N <= 8",
    defaults={"max_N": 8, "max_members": 6},
    aliases=("hall.13A",),
)
def lr_half(case, params, seed):
    N, family, Z = _random_split(params, seed, case[1])
    report = Report(name="hall.lr_half")
    value = hn(family)
    if value <= 1:
        return report
    half = Fraction(value, 2)
    for side, part in zip(("L", "R"), lr_split(family, Z)):
        side_value = hn(part)
        if side_value < half:
            report.add_violation(
                "hn(side) >= hn/2",
                side=side, N=N, family=family.as_mappings(), Z=Z, hn=value, side_hn=side_value,
            )
    return report


def _axiom_cases(params, count):
    if "N" in params:
        return [int(params["N"])]
    return [int(N) for N in params["universes"]]


@suite(
    "hall.axiom_report",
    module="norm-hall",
    invariant="norm axioms for norm4: monotone holds, singleton bound reported as a discrepancy",
    cases=_axiom_cases,
    defaults={"universes": [2, 3]},
)
def axiom_report(N, params, seed):
    outcome = axiom_check(4, None, FnSet.full(N), seed=seed, exhaustive_limit=settings.exhaustive_axiom_limit)
    outcome.values = {"N": N, **outcome.values}
    return outcome


def _universe_cases(params, count):
    return list(range(1, int(params["max_N"]) + 1))


@suite(
    "hall.triangle_failure",
    module="norm-hall",
    invariant="norm4 of D({0->0}) and D({0->1}) is 2 while their union has norm N+1",
    cases=_universe_cases,
    defaults={"max_N": 4},
)
def triangle_failure(N, params, seed):
    zero = dset(FnFamily(N, (PartialFn(1, 0),)))
    one = dset(FnFamily(N, (PartialFn(1, 1),)))
    values = [hall_norm4(zero), hall_norm4(one), hall_norm4(zero.union(one))]
    report = Report(name="hall.triangle_failure", values={"N": N, "norms": values})
    if values != [2, 2, N + 1]:
        report.add_violation("triangle failure reproduced", N=N, norms=values)
    return report


@suite(
    "hall.cut",
    module="norm-hall",
    invariant="cut reconstruction lies in A and each side keeps half of norm4, random N <= 6",
    defaults={"max_N": 6, "density": 0.7},
    aliases=("hall.13B",),
)
def cut_suite(case, params, seed):
    rng = case_rng(seed, case[1])
    N = int(params["N"]) if "N" in params else random_universe(rng, 2, int(params["max_N"]))
    A = random_fnset(rng, N, float(params["density"]))
    Z = random_mask(rng, N)
    if hall_norm4(A) <= 1:
        return Report(name="hall.cut")
    return cut_check(A, Z)


def _glue_cases(params, count):
    return exhaustive_cases(1 << int(params["N"]))


@suite(
    "hall.glue",
    module="norm-hall",
    invariant="norm4 of a glued set >= min of the parts, exhaustive (N,M) = (2,4)",
    cases=_glue_cases,
    defaults={"N": 2, "M": 4},
    aliases=("hall.13X",),
)
def glue_suite(case, params, seed):
    N, M = int(params["N"]), int(params["M"])
    report = Report(name="hall.glue")
    first = FnSet(N, pick(range(1 << N), case[1]))
    if not first.functions or hall_norm4(first) <= 1:
        return report
    width = M - N
    for selector in range(1, 1 << (1 << width)):
        second = FnSet(width, pick(range(1 << width), selector))
        if hall_norm4(second) <= 1:
            continue
        report.violations.extend(glue_check(first, second).violations)
    return report


def _empty_r_cases(params, count):
    remarks = [(kind, int(N)) for N in params["remark_universes"] for kind in (TOTAL, CONE)]
    return remarks + random_cases(count)


@suite(
    "hall.empty_r",
    module="norm-hall",
    invariant="HN(L) >= HN - N/2 when R is empty, with the extremal equality cases",
    cases=_empty_r_cases,
    defaults={"max_N": 8, "max_members": 5, "remark_universes": [2, 4]},
)
def empty_r(case, params, seed):
    tag, value = case
    if tag in (TOTAL, CONE):
        N = value
        Z = full_mask(N // 2)
        if tag == TOTAL:
            family = FnFamily(N, (PartialFn.total(N, 0),))
        else:
            family = cone_family(PartialFn(Z, 0), N)
        outcome = empty_R_bound_check(family, Z)
        outcome.values = {"case": tag, "N": N, **outcome.values}
        if not outcome.values["extremal"]:
            outcome.add_discrepancy("empty_r_equality_case", case=tag, N=N, slack=outcome.values["slack"])
        return outcome

    rng = case_rng(seed, value)
    N = random_universe(rng, 2, int(params["max_N"]))
    Z = random_mask(rng, N)
    Zc = full_mask(N) & ~Z
    members = []
    for sigma in random_fnfamily(rng, N, int(params["max_members"])):
        if popcount(sigma.domain & Z) < popcount(sigma.domain & Zc):
            sigma = sigma.restrict(Z)
        members.append(sigma)
    outcome = empty_R_bound_check(FnFamily(N, tuple(members)), Z)
    outcome.values = {}
    return outcome


def _size_cases(params, count):
    N = int(params["N"])
    return list(range(1, N + 1))


@suite(
    "hall.size_bound",
    module="norm-hall",
    invariant="min{|A| : norm4(A) >= k+1} >= inclusion-exclusion bound, exhaustive N=3",
    cases=_size_cases,
    defaults={"N": 3},
)
def size_bound(k, params, seed):
    N = int(params["N"])
    bound = hall_size_lower_bound(N, k)
    size, witness = exhaustive_extremal(4, {"N": N}, "min_size_at_norm", k + 1)
    report = Report(name="hall.size_bound", values={"N": N, "k": k, "min_size": size, "bound": bound})
    if size is None:
        raise DomainError(f"ノルム {k + 1} の集合がありません: N={N}")
    if size < bound:
        report.add_violation("size >= inclusion-exclusion bound", N=N, k=k, size=size, bound=bound, witness=witness)
    return report
