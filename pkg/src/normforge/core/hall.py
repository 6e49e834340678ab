"""
Hall 型ノルム ‖·‖₄

全関数の集合 A ⊆ ᴺ2 を、A を避ける極小な部分関数の族 Δ(A) で表し、
hn / HN と k-セレクターを通して ‖A‖₄ = HN(Δ(A)) を計算します。
L/R 分割、接合（glue）、切断（cut）、包除原理によるサイズ下界も提供します。
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from .combinatorics import BigCount, binomial
from .errors import DomainError, check_budget
from .partial_functions import (
    EMPTY_FN,
    FnFamily,
    FnSet,
    PartialFn,
    immediate_subfunctions,
    relabel_family,
    relabel_mask,
    subfunctions,
)
from .report import Report
from .setcore import SubsetMask, elements_of, full_mask, mask_of, popcount, submasks

logger = logging.getLogger(__name__)

DELTA_LIMIT = 12
DSET_LIMIT = 16
HN_MEMBER_LIMIT = 15
ORACLE_LIMIT = 4
ORACLE_PRODUCT_LIMIT = 200_000


@dataclass(frozen=True)
class Selector:
    """k-セレクター（各元に互いに素な k 点を割り当てる）"""
    k: int
    assignment: Tuple[Tuple[PartialFn, SubsetMask], ...]

    def as_dict(self) -> Dict[PartialFn, SubsetMask]:
        return dict(self.assignment)


@dataclass(frozen=True)
class HallWitness:
    """δ ⪯ δ* で、δ* の元は互いに素なサイズ k の定義域を持つ"""
    refined: FnFamily
    k: int


# ---------------------------------------------------------------------------
# Δ と D
# ---------------------------------------------------------------------------

def _projections(A: FnSet) -> List[Set[SubsetMask]]:
    """各定義域 d について {f & d : f ∈ A}"""
    N = A.universe
    full = full_mask(N)
    proj: List[Set[SubsetMask]] = [set() for _ in range(1 << N)]
    proj[full] = set(A.functions)
    for d in range(full - 1, -1, -1):
        missing = full & ~d
        parent = d | (missing & -missing)
        proj[d] = {x & d for x in proj[parent]}
    return proj


def delta(A: FnSet, limit: int = DELTA_LIMIT) -> FnFamily:
    """Δ(A)：[σ] ∩ A = ∅ となる極小な σ すべて"""
    N = A.universe
    check_budget(N, limit, "delta")
    proj = _projections(A)
    found = []
    for d in range(1 << N):
        points = elements_of(d)
        seen = proj[d]
        for ones in submasks(d):
            if ones in seen:
                continue
            # 一点を除いた部分関数がすべて A と交われば極小
            if all((ones & ~(1 << p)) in proj[d & ~(1 << p)] for p in points):
                found.append(PartialFn(d, ones))
    logger.debug(f"Δ を計算: N={N}, |A|={len(A)}, |Δ|={len(found)}")
    return FnFamily(N, tuple(found))


def delta_literal(A: FnSet, limit: int = 8) -> FnFamily:
    """全ての真の部分関数で極小性を確かめる版（小規模の照合用）"""
    N = A.universe
    check_budget(N, limit, "delta_literal")
    found = []
    for d in range(1 << N):
        for ones in submasks(d):
            sigma = PartialFn(d, ones)
            if A.meets(sigma):
                continue
            if all(A.meets(rho) for rho in subfunctions(sigma) if rho != sigma):
                found.append(sigma)
    return FnFamily(N, tuple(found))


def is_minimal_avoider(A: FnSet, sigma: PartialFn) -> bool:
    """[σ] ∩ A = ∅ かつ一点を除いた部分関数がすべて A と交わる"""
    return not A.meets(sigma) and all(A.meets(rho) for rho in immediate_subfunctions(sigma))


def dset(family: FnFamily, limit: int = DSET_LIMIT) -> FnSet:
    """D(δ)：δ のどの元も拡張しない全関数"""
    N = family.universe
    check_budget(N, limit, "dset")
    members = family.members
    return FnSet(N, tuple(f for f in range(1 << N) if not any(s.extended_by(f) for s in members)))


def preceq(first: FnFamily, second: FnFamily) -> bool:
    """δ₁ ⪯ δ₂：δ₁ の各元が δ₂ の元を部分関数として含む"""
    return all(any(rho.is_subfunction_of(sigma) for rho in second.members) for sigma in first.members)


# ---------------------------------------------------------------------------
# hn / HN / セレクター
# ---------------------------------------------------------------------------

def hn(family: FnFamily, limit: int = HN_MEMBER_LIMIT) -> int:
    """
    hn(δ) = 1 + max{k ≤ N : 全ての δ' ⊆ δ が定義域の互いに素な δ'' ⊆ δ' で
    |∪dom δ''| ≥ k|δ'| を満たす}

    部分族ごとの最大被覆 best[S] をビット DP で求め、min ⌊best[S]/|S|⌋ を取ります。
    """
    N = family.universe
    members = family.members
    m = len(members)
    check_budget(m, limit, "hn")
    if m == 0:
        return N + 1
    sizes = [popcount(s.domain) for s in members]
    compatible = []
    for i, s in enumerate(members):
        mask = 0
        for j, t in enumerate(members):
            if i != j and s.domain & t.domain == 0:
                mask |= 1 << j
        compatible.append(mask)

    best = [0] * (1 << m)
    k = N
    for S in range(1, 1 << m):
        low = S & -S
        i = low.bit_length() - 1
        rest = S & ~low
        best[S] = max(best[rest], sizes[i] + best[rest & compatible[i]])
        k = min(k, best[S] // popcount(S))
    return k + 1


def find_selector(family: FnFamily, k: int, limit: int = HN_MEMBER_LIMIT) -> Optional[Selector]:
    """k-セレクター（存在しなければ None）"""
    if k < 1:
        raise DomainError(f"k は正の整数です: k={k}")
    check_budget(len(family), limit, "find_selector")
    order = sorted(family.members, key=lambda s: (popcount(s.domain), s))
    picks: List[Tuple[PartialFn, SubsetMask]] = []

    def search(i: int, used: SubsetMask) -> bool:
        if i == len(order):
            return True
        sigma = order[i]
        free = elements_of(sigma.domain & ~used)
        for combo in combinations(free, k):
            pick = mask_of(combo)
            picks.append((sigma, pick))
            if search(i + 1, used | pick):
                return True
            picks.pop()
        return False

    if not search(0, 0):
        return None
    return Selector(k, tuple(sorted(picks)))


def _refine(members: Tuple[PartialFn, ...], k: int) -> Optional[Tuple[PartialFn, ...]]:
    """
    各元 σ に対し σ のサイズ k の部分関数 ρ_σ を選び、選ばれた ρ の集合が
    互いに素な定義域を持つようにする（同じ ρ の共有は可）
    """
    chosen: List[PartialFn] = []
    failed: Set[FrozenSet[PartialFn]] = set()

    def search(used: SubsetMask) -> bool:
        key = frozenset(chosen)
        if key in failed:
            return False
        target, target_free, target_options = None, 0, 0
        for sigma in members:
            if any(rho.is_subfunction_of(sigma) for rho in chosen):
                continue
            free = sigma.domain & ~used
            count = popcount(free)
            if count < k:
                failed.add(key)
                return False
            options = binomial(count, k)
            if target is None or options < target_options:
                target, target_free, target_options = sigma, free, options
        if target is None:
            return True
        for combo in combinations(elements_of(target_free), k):
            d = mask_of(combo)
            chosen.append(PartialFn(d, target.ones & d))
            if search(used | d):
                return True
            chosen.pop()
        failed.add(key)
        return False

    if search(0):
        return tuple(chosen)
    return None


def hall_norm_HN(family: FnFamily) -> Tuple[int, HallWitness]:
    """
    HN(δ) = max{hn(δ') : δ ⪯ δ'} を、定義域の互いに素なサイズ k の細分の
    存在に置き換えて計算（HN(∅) = N+1）
    """
    N = family.universe
    members = family.members
    if not members:
        return N + 1, HallWitness(FnFamily(N), N)
    best_k = 0
    best = FnFamily(N, (EMPTY_FN,))
    cap = min(popcount(s.domain) for s in members)
    for k in range(1, cap + 1):
        refined = _refine(members, k)
        if refined is None:
            break
        best_k, best = k, FnFamily(N, refined)
    return best_k + 1, HallWitness(best, best_k)


def hall_norm_HN_oracle(family: FnFamily, limit: int = ORACLE_LIMIT,
                        product_limit: int = ORACLE_PRODUCT_LIMIT) -> int:
    """各元の部分関数を一つずつ選んだ δ' 全てで hn の最大値を取るオラクル"""
    N = family.universe
    check_budget(N, limit, "hall_norm_HN_oracle")
    if not family.members:
        return N + 1
    options = [list(subfunctions(s)) for s in family.members]
    combos = 1
    for opts in options:
        combos *= len(opts)
    check_budget(combos, product_limit, "hall_norm_HN_oracle")
    seen: Dict[Tuple[PartialFn, ...], int] = {}
    best = 1
    for choice in product(*options):
        refined = FnFamily(N, choice)
        if refined.members not in seen:
            seen[refined.members] = hn(refined)
        best = max(best, seen[refined.members])
    return best


def hall_norm4(A: FnSet) -> int:
    """‖A‖₄ = HN(Δ(A))"""
    return hall_norm_HN(delta(A))[0]


def hall_norm4_witness(A: FnSet) -> Tuple[int, HallWitness]:
    return hall_norm_HN(delta(A))


# ---------------------------------------------------------------------------
# δ_Z と L/R 分割
# ---------------------------------------------------------------------------

def restrict_delta(family: FnFamily, Z: SubsetMask) -> FnFamily:
    """δ_Z = {σ ∈ δ : dom(σ) ⊆ Z}"""
    return FnFamily(family.universe, tuple(s for s in family.members if s.domain & ~Z == 0))


def lr_split(family: FnFamily, Z: SubsetMask) -> Tuple[FnFamily, FnFamily]:
    """L = {σ↾Z : |σ↾Z| ≥ |σ↾Zᶜ|}, R = {σ↾Zᶜ : |σ↾Z| < |σ↾Zᶜ|}"""
    N = family.universe
    Zc = full_mask(N) & ~Z
    left, right = [], []
    for sigma in family.members:
        inside, outside = sigma.restrict(Z), sigma.restrict(Zc)
        if inside.size >= outside.size:
            left.append(inside)
        else:
            right.append(outside)
    return FnFamily(N, tuple(left)), FnFamily(N, tuple(right))


# ---------------------------------------------------------------------------
# 接合と切断
# ---------------------------------------------------------------------------

def glue(first: FnSet, second: FnSet) -> FnSet:
    """
    N 上の A₁ と [N, M) 上の A₂（宇宙 M-N に付け替え済み）から
    {f ∪ g} を作る
    """
    if not first.functions or not second.functions:
        raise DomainError("接合する集合は空であってはいけません")
    if hall_norm4(first) <= 1 or hall_norm4(second) <= 1:
        raise DomainError("接合する集合のノルムは 1 より大きい必要があります")
    shift = first.universe
    return FnSet(
        shift + second.universe,
        tuple(f | (g << shift) for f in first.functions for g in second.functions),
    )


def glue_check(first: FnSet, second: FnSet) -> Report:
    """‖A₁ ∪· A₂‖₄ ≥ min(‖A₁‖₄, ‖A₂‖₄)"""
    glued = glue(first, second)
    a, b, c = hall_norm4(first), hall_norm4(second), hall_norm4(glued)
    report = Report(
        name="hall.glue",
        params={"N": first.universe, "M": glued.universe},
        cases_run=1,
        values={"norm_first": a, "norm_second": b, "norm_glued": c},
    )
    if c < min(a, b):
        report.add_violation(
            "norm(glue) >= min",
            first=first.as_strings(), second=second.as_strings(), norms=[a, b, c],
        )
    return report


@dataclass(frozen=True)
class CutResult:
    """切断の結果（A_L は宇宙 |Z|、A_R は宇宙 |Zᶜ| に付け替え済み）"""
    Z: SubsetMask
    left_family: FnFamily
    right_family: FnFamily
    left: FnSet
    right: FnSet
    norm: int


def cut(A: FnSet, Z: SubsetMask) -> CutResult:
    """HN の証拠 δ* を Z で L/R に分け、A_L = D_Z(L), A_R = D_{Zᶜ}(R) を作る"""
    N = A.universe
    if Z & ~full_mask(N):
        raise DomainError(f"Z が宇宙の外の点を含みます: {elements_of(Z)}")
    value, witness = hall_norm4_witness(A)
    if value <= 1:
        raise DomainError(f"‖A‖₄ > 1 が必要です: ‖A‖₄={value}")
    Zc = full_mask(N) & ~Z
    left, right = lr_split(witness.refined, Z)
    return CutResult(
        Z=Z,
        left_family=left,
        right_family=right,
        left=dset(relabel_family(left, Z)),
        right=dset(relabel_family(right, Zc)),
        norm=value,
    )


def cut_check(A: FnSet, Z: SubsetMask) -> Report:
    """
    切断の包含関係と半分の評価を検証

    片側の宇宙が小さく |side|+1 < ‖A‖₄/2 となる場合は、どの部分集合でも
    届かないため違反ではなく不一致として記録します。
    """
    N = A.universe
    result = cut(A, Z)
    Zc = full_mask(N) & ~Z
    report = Report(name="hall.cut", params={"N": N, "Z": elements_of(Z)}, cases_run=1)

    left_set, right_set = set(result.left.functions), set(result.right.functions)
    members = set(A.functions)
    for f in range(1 << N):
        if relabel_mask(f & Z, Z) in left_set and relabel_mask(f & Zc, Zc) in right_set and f not in members:
            report.add_violation("reconstruction is contained in A", function=f)
            break

    half = Fraction(result.norm, 2)
    norms = {}
    for side, side_set, side_mask in (("left", result.left, Z), ("right", result.right, Zc)):
        side_norm = hall_norm4(side_set)
        norms[side] = side_norm
        if side_norm >= half:
            continue
        if popcount(side_mask) + 1 < half:
            report.add_discrepancy(
                "cut_half_bound_unattainable",
                side=side, universe=popcount(side_mask), norm=result.norm, side_norm=side_norm,
            )
        else:
            report.add_violation("side norm >= norm/2", side=side, norm=result.norm, side_norm=side_norm)
    report.values = {"norm": result.norm, "norm_left": norms["left"], "norm_right": norms["right"]}
    return report


def empty_R_bound_check(family: FnFamily, Z: SubsetMask) -> Report:
    """R(δ,Z) = ∅ のとき HN(L(δ,Z)) ≥ HN(δ) - N/2"""
    N = family.universe
    left, right = lr_split(family, Z)
    if right.members:
        raise DomainError("R(δ,Z) が空ではありません")
    total = hall_norm_HN(family)[0]
    left_value = hall_norm_HN(left)[0]
    bound = total - Fraction(N, 2)
    slack = left_value - bound
    report = Report(
        name="hall.empty_r",
        params={"N": N, "Z": elements_of(Z)},
        cases_run=1,
        values={"HN": total, "HN_L": left_value, "bound": bound, "slack": slack, "extremal": slack == 0},
    )
    if left_value < bound:
        report.add_violation("HN(L) >= HN - N/2", HN=total, HN_L=left_value, bound=bound)
    return report


# ---------------------------------------------------------------------------
# サイズ下界と構成例
# ---------------------------------------------------------------------------

def hall_size_lower_bound(N: int, k: int) -> BigCount:
    """2^N - Σ_{j=1..⌊N/k⌋} (-1)^{j-1} C(⌊N/k⌋, j) 2^{N-jk}"""
    if not 1 <= k <= N:
        raise DomainError(f"1 <= k <= N を満たしません: N={N}, k={k}")
    m = N // k
    excluded = sum((-1) ** (j - 1) * binomial(m, j) * 2 ** (N - j * k) for j in range(1, m + 1))
    return 2 ** N - excluded


def two_block_instance(N: int) -> FnFamily:
    """大きさ ⌊N/2⌋ の二つの互いに素なブロック上の恒等 0 関数"""
    h = N // 2
    if h < 1:
        raise DomainError(f"N は 2 以上です: N={N}")
    first = PartialFn((1 << h) - 1, 0)
    second = PartialFn(((1 << h) - 1) << h, 0)
    return FnFamily(N, (first, second))


def cone_family(rho: PartialFn, N: int) -> FnFamily:
    """ρ を拡張する部分関数すべて"""
    free = full_mask(N) & ~rho.domain
    members = []
    for extra in submasks(free):
        for ones in submasks(extra):
            members.append(PartialFn(rho.domain | extra, rho.ones | ones))
    return FnFamily(N, tuple(members))
