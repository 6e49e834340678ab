"""
ノルム間の橋渡し

全関数をその 1 の位置（プロファイル）へ送る写像 P と、その制限 P*・P⁺ を通して
‖·‖₂・‖·‖₃ と ‖·‖₄ を結ぶ命題を検証します。
"""

import logging
from itertools import combinations
from typing import Any, Dict, List, Optional

from .coloring import edges_of, norm3, splitting_number
from .errors import DomainError, check_budget
from .hall import delta, dset, hall_norm4, two_block_instance
from .partial_functions import FnFamily, FnSet, PartialFn
from .report import Report
from .setcore import Family, SubsetMask, elements_of, full_mask, masks_of_size, popcount
from .subset_norm import SubsetNormParams, norm2

logger = logging.getLogger(__name__)

PPLUS_LIMIT = 10
PSTAR_SCAN_LIMIT = 6


def profile(sigma: PartialFn) -> SubsetMask:
    """P(σ) = {a ∈ dom(σ) : σ(a) = 1}"""
    return sigma.ones


def profile_inverse(N: int, p: SubsetMask) -> PartialFn:
    """全関数への逆写像"""
    if p & ~full_mask(N):
        raise DomainError(f"集合が宇宙の外の点を含みます: {elements_of(p)}")
    return PartialFn.total(N, p)


def subset_bridge_check(n: int, N: int, B: Family) -> Report:
    """k = ‖B‖₂（台集合 N）のとき ‖P⁻¹[B]‖₄ ≤ k + 1"""
    params = SubsetNormParams(n, N)
    k, witness = norm2(params, B)
    A = FnSet(N, B.members)
    value = hall_norm4(A)
    report = Report(
        name="bridges.subset_bridge",
        params={"n": n, "N": N},
        cases_run=1,
        values={"norm2": k, "witness": witness.as_list(), "norm4": value},
    )
    if value > k + 1:
        report.add_violation("norm4(P^-1[B]) <= norm2(B) + 1", family=B.as_lists(), norm2=k, norm4=value)
    return report


def pstar(A: FnSet, n: int) -> Family:
    """P*(A)：ちょうど H = N/2ⁿ 個の 1 を持つ元のプロファイル"""
    N = A.universe
    if n < 1 or N % (1 << n):
        raise DomainError(f"2^n が N を割り切りません: n={n}, N={N}")
    H = N >> n
    return Family(N, tuple(f for f in A.functions if popcount(f) == H))


def pstar_claim_scan(N: int, budget: int, n: Optional[int] = None) -> Report:
    """
    「σ ∈ Δ(A) なら P(σ) はどの p ∈ P*(A) にも含まれない」の反例探索

    族はサイズ、次に正準順で走査し、最初の反例を values に残します。
    反例は違反ではなく不一致として数えます。
    """
    check_budget(N, PSTAR_SCAN_LIMIT, "pstar_claim_scan")
    levels = [n] if n is not None else [m for m in range(1, N.bit_length()) if N % (1 << m) == 0]
    report = Report(name="bridges.pstar_scan", params={"N": N, "budget": budget, "n": levels})
    first: Optional[Dict[str, Any]] = None
    examined = 0
    total = 1 << N

    for size in range(total + 1):
        for combo in combinations(range(total), size):
            if examined >= budget:
                report.wall_budget_exceeded = True
                break
            examined += 1
            A = FnSet(N, combo)
            deltas = None
            for level in levels:
                targets = pstar(A, level).members
                if not targets:
                    continue
                if deltas is None:
                    deltas = delta(A).members
                for sigma in deltas:
                    hit = next((p for p in targets if sigma.ones & ~p == 0), None)
                    if hit is None:
                        continue
                    payload = {
                        "n": level,
                        "A": A.as_strings(),
                        "sigma": sigma.as_mapping(),
                        "p": elements_of(hit),
                    }
                    report.add_discrepancy("pstar_proposition", **payload)
                    if first is None:
                        first = payload
        if report.wall_budget_exceeded:
            break

    report.cases_run = examined
    report.values = {"counterexample": first, "count": len(report.discrepancies)}
    logger.info(f"P* 反例探索: N={N}, 族={examined}, 反例={len(report.discrepancies)}")
    return report


def pplus(A: FnSet) -> Family:
    """P⁺(A) = {P(f) : f ∈ A, |P(f)| ≥ 2}"""
    return Family(A.universe, tuple(f for f in A.functions if popcount(f) >= 2))


def edge_lemma_check(sigma: PartialFn, N: int) -> Report:
    """dom(σ) の辺のうち P(σ) 以外はすべて P⁺(D({σ})) に入る"""
    family = pplus(dset(FnFamily(N, (sigma,))))
    members = set(family.members)
    report = Report(name="bridges.edge_lemma", params={"N": N, "sigma": sigma.as_mapping()}, cases_run=1)
    for edge in edges_of(sigma.domain) if popcount(sigma.domain) >= 2 else []:
        if edge != sigma.ones and edge not in members:
            report.add_violation("edge of dom(sigma) lies in P+(D({sigma}))", edge=elements_of(edge))
    return report


def _common_part(family: FnFamily, N: int) -> PartialFn:
    """全ての元に含まれる最大の部分関数（族が空なら恒等 0 の全関数）"""
    if not family.members:
        return PartialFn.total(N, 0)
    domain = full_mask(N)
    for sigma in family.members:
        domain &= sigma.domain
    reference = family.members[0].ones
    for sigma in family.members:
        domain &= ~(sigma.ones ^ reference)
    ones = reference & domain
    return PartialFn(domain, ones)


def _has_superset(family: Family) -> List[bool]:
    """各 p について P⁺ に p の上位集合があるか"""
    N = family.universe
    full = full_mask(N)
    up = [False] * (1 << N)
    for m in family.members:
        up[m] = True
    for p in range(full, -1, -1):
        if up[p]:
            continue
        missing = full & ~p
        while missing:
            bit = missing & -missing
            if up[p | bit]:
                up[p] = True
                break
            missing &= ~bit
    return up


def pplus_bounds_check(A: FnSet) -> Report:
    """
    P⁺(A) と ‖A‖₄ の関係

    (i) Δ(A) の共通部分 σ について、P⁺(A) の分割数 ≥ |σ| - 1
    (ii) ‖A‖₄ = k+2 かつ 2(k+1) > N のとき分割数 ≥ k
    (iii) |p| ≥ 2 で P⁺(A) に上位集合がなければ ‖A‖₄ ≤ |p| + 1
    記述上 |p| ≤ 1 や境界 2(k+1) = N まで述べられている部分は、
    崩れた場合に不一致として記録します。
    """
    N = A.universe
    check_budget(N, PPLUS_LIMIT, "pplus_bounds_check")
    value = hall_norm4(A)
    family = pplus(A)
    parts, _ = splitting_number(family)
    report = Report(
        name="bridges.pplus_bounds",
        params={"N": N},
        cases_run=1,
        values={"norm4": value, "parts": parts, "pplus_size": len(family)},
    )
    payload = {"A": A.as_strings()}

    common = _common_part(delta(A), N)
    if parts < popcount(common.domain) - 1:
        report.add_violation("parts >= |sigma| - 1", sigma=common.as_mapping(), parts=parts, **payload)

    k = value - 2
    if k >= 1 and 2 * value >= N + 2:
        if 2 * (k + 1) > N:
            if parts < k:
                report.add_violation("parts >= k", k=k, parts=parts, **payload)
        elif parts < k:
            report.add_discrepancy("pplus_parts_corollary_boundary", k=k, parts=parts, **payload)

    up = _has_superset(family)
    for p in range(1 << N):
        if up[p] or value <= popcount(p) + 1:
            continue
        if popcount(p) >= 2:
            report.add_violation("norm4 <= |p| + 1", p=elements_of(p), norm4=value, **payload)
        else:
            report.add_discrepancy("pplus_small_p", p=elements_of(p), norm4=value, **payload)

    largest = max((popcount(p) for p in family.members), default=0)
    report.values["max_profile"] = largest
    if value > largest + 1:
        report.add_discrepancy("pplus_max_size_corollary", max_profile=largest, norm4=value, **payload)
        if 2 <= largest + 1 <= N and value > largest + 2:
            report.add_violation("norm4 <= max|p| + 2", max_profile=largest, norm4=value, **payload)
    return report


def weight2_instance(N: int) -> FnSet:
    """ちょうど 2 個の 1 を持つ全関数"""
    return FnSet(N, tuple(masks_of_size(N, 2)))


def contrast_instances(N: int) -> List[Dict[str, Any]]:
    """
    ‖·‖₃ と ‖·‖₄ が連動しない具体例

    重み 2 の集合は ‖P⁺‖₃ が大きく ‖·‖₄ が小さく、二ブロック構成はその逆です。
    """
    instances = []
    for name, A in (
        ("weight2", weight2_instance(N)),
        ("two_block", dset(two_block_instance(N))),
    ):
        norm_three, witness = norm3(pplus(A))
        instances.append({
            "name": name,
            "N": N,
            "size": len(A),
            "norm3": norm_three,
            "parts": witness.parts_count,
            "norm4": hall_norm4(A),
        })
    return instances
