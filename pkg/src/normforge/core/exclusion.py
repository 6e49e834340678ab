"""
除外ノルム ‖·‖₁

‖A‖₁ = F/(|G∖A|+1)。値はすべて既約分数で扱います。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .combinatorics import ExactRatio
from .errors import DomainError
from .report import Report
from .setcore import SubsetMask, elements_of, full_mask, popcount


@dataclass(frozen=True)
class ExclusionParams:
    """除外ノルムのパラメータ（0 < F < G）"""
    F: int
    G: int

    def __post_init__(self):
        if not (0 < self.F < self.G):
            raise DomainError(f"0 < F < G を満たしません: F={self.F}, G={self.G}")

    @property
    def ground(self) -> SubsetMask:
        return full_mask(self.G)


def _check_within(p: ExclusionParams, A: SubsetMask) -> None:
    if A < 0 or A & ~p.ground:
        raise DomainError(f"集合が G の外の要素を含みます: {elements_of(A)} (G={p.G})")


def norm1(p: ExclusionParams, A: SubsetMask) -> ExactRatio:
    """‖A‖₁ = F/(|G∖A|+1)"""
    _check_within(p, A)
    return Fraction(p.F, p.G - popcount(A) + 1)


def size_from_norm1(p: ExclusionParams, k: ExactRatio) -> ExactRatio:
    """ノルム値からサイズを逆算: G + 1 - F/k"""
    k = Fraction(k)
    if k <= 0:
        raise DomainError(f"ノルム値は正である必要があります: k={k}")
    return p.G + 1 - Fraction(p.F) / k


def partition_threshold(p: ExclusionParams) -> ExactRatio:
    return Fraction(2 * p.F, p.G + 2)


def partition_bounds(p: ExclusionParams, A: SubsetMask, B: SubsetMask) -> Report:
    """G の分割 (A,B) で一方は 2F/(G+2) 以上、他方は以下"""
    _check_within(p, A)
    _check_within(p, B)
    if A & B or A | B != p.ground:
        raise DomainError(f"(A,B) は G の分割ではありません: A={elements_of(A)}, B={elements_of(B)}")
    a, b = norm1(p, A), norm1(p, B)
    threshold = partition_threshold(p)
    report = Report(
        name="exclusion.partition_bounds",
        params={"F": p.F, "G": p.G},
        cases_run=1,
        values={"norm_A": a, "norm_B": b, "threshold": threshold},
    )
    if not (min(a, b) <= threshold <= max(a, b)):
        report.add_violation("min <= 2F/(G+2) <= max", A=elements_of(A), B=elements_of(B))
    return report


def triangle_counterexample(
    p: ExclusionParams,
) -> Optional[Tuple[SubsetMask, SubsetMask, Tuple[ExactRatio, ExactRatio, ExactRatio]]]:
    """
    ‖A∪B‖₁ > ‖A‖₁ + ‖B‖₁ となる分割を探す

    まず均等な分割（先頭 ⌊G/2⌋ 点）を試し、だめなら全分割を数値順に走査します。
    見つからない場合は None。
    """
    ground = p.ground
    whole = norm1(p, ground)

    def check(A: SubsetMask):
        B = ground & ~A
        a, b = norm1(p, A), norm1(p, B)
        if whole > a + b:
            return A, B, (a, b, whole)
        return None

    found = check(full_mask(p.G // 2))
    if found:
        return found
    for A in range(1 << p.G):
        found = check(A)
        if found:
            return found
    return None


def union_quotient(p: ExclusionParams, A: SubsetMask, B: SubsetMask) -> ExactRatio:
    """Q = F/k + F/l - G - 1"""
    return Fraction(p.F) / norm1(p, A) + Fraction(p.F) / norm1(p, B) - p.G - 1


def union_bound_check(p: ExclusionParams, A: SubsetMask, B: SubsetMask) -> Report:
    """
    和集合の評価 j ≤ F/Q（Q > 0 のとき）を検証

    記述上の向き j ≥ F/Q が崩れる場合は不一致として記録します。
    """
    j = norm1(p, A | B)
    Q = union_quotient(p, A, B)
    report = Report(
        name="exclusion.union_bound",
        params={"F": p.F, "G": p.G},
        cases_run=1,
        values={"j": j, "Q": Q},
    )
    if Q > 0:
        bound = Fraction(p.F) / Q
        report.values["bound"] = bound
        if not j <= bound:
            report.add_violation("j <= F/Q", A=elements_of(A), B=elements_of(B), j=j, bound=bound)
        if not j >= bound:
            report.add_discrepancy(
                "union_bound_direction",
                A=elements_of(A), B=elements_of(B), j=j, bound=bound,
            )
    return report
