"""
部分集合ノルム ‖·‖₂

宇宙 Xₙᴳ（G の H 元部分集合すべて、H = G/2ⁿ）上の族 A に対し、
どの元にも含まれない x ⊆ G の最小サイズをノルムとします。
比の評価・極値族・反例構成もここにまとめています。
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .combinatorics import ExactRatio, binomial
from .errors import DomainError, check_budget
from .report import Report
from .setcore import Family, SubsetMask, all_sets_of_size, elements_of, masks_of_size, popcount

UNIVERSE_X_LIMIT = 10 ** 6


@dataclass(frozen=True)
class SubsetNormParams:
    """部分集合ノルムのパラメータ（2ⁿ | G）"""
    n: int
    G: int

    def __post_init__(self):
        if self.n < 1 or self.G < 1:
            raise DomainError(f"n と G は正の整数です: n={self.n}, G={self.G}")
        if self.G % (1 << self.n):
            raise DomainError(f"2^n が G を割り切りません: n={self.n}, G={self.G}")

    @property
    def H(self) -> int:
        return self.G >> self.n

    @property
    def x_size(self) -> int:
        return binomial(self.G, self.H)


@dataclass(frozen=True)
class Norm2Witness:
    """最小の証拠集合 x"""
    x: SubsetMask

    def as_list(self):
        return elements_of(self.x)


def universe_X(p: SubsetNormParams, limit: int = UNIVERSE_X_LIMIT) -> Family:
    """Xₙᴳ（正準順）"""
    check_budget(p.x_size, limit, "universe_X")
    return all_sets_of_size(p.G, p.H)


def _check_members(p: SubsetNormParams, A: Family) -> None:
    if A.universe != p.G:
        raise DomainError(f"族の宇宙が G と一致しません: {A.universe} != {p.G}")
    for a in A.members:
        if popcount(a) != p.H:
            raise DomainError(f"元のサイズが H={p.H} ではありません: {elements_of(a)}")


def norm2(p: SubsetNormParams, A: Family) -> Tuple[int, Norm2Witness]:
    """‖A‖₂ と数値最小の証拠 x"""
    _check_members(p, A)
    members = A.members
    for size in range(p.H + 2):
        for x in masks_of_size(p.G, size):
            if all(x & ~a for a in members):
                return size, Norm2Witness(x)
    # サイズ H+1 の x はどの元にも含まれないので到達しない
    raise AssertionError("unreachable")


def localize(A: Family, l: int) -> Family:
    """A(l) = {x ∈ A : l ∈ x}"""
    if not 0 <= l < A.universe:
        raise DomainError(f"点が宇宙の外です: l={l}")
    return Family(A.universe, tuple(a for a in A.members if a >> l & 1))


def _falling_ratio(p: SubsetNormParams, k: int) -> ExactRatio:
    """Π_{i<k} (H-i)/(G-i)"""
    product = Fraction(1)
    for i in range(k):
        product *= Fraction(p.H - i, p.G - i)
    return product


def _check_k(p: SubsetNormParams, k: int) -> None:
    if not 0 <= k <= p.H:
        raise DomainError(f"0 <= k <= H を満たしません: k={k}, H={p.H}")


def ratio_lower_bound(p: SubsetNormParams, k: int) -> ExactRatio:
    """(G-H)!(H-k)!/(G-k)!"""
    _check_k(p, k)
    return Fraction(
        math.factorial(p.G - p.H) * math.factorial(p.H - k),
        math.factorial(p.G - k),
    )


def ratio_upper_bound(p: SubsetNormParams, k: int) -> ExactRatio:
    """1 - Π_{i<k} (H-i)/(G-i)"""
    _check_k(p, k)
    return 1 - _falling_ratio(p, k)


def extremal_family(p: SubsetNormParams, k: int) -> Family:
    """A* = {x ∈ X : {0..k-1} ⊄ x}（ノルム k の最大族）"""
    if not 1 <= k <= p.H:
        raise DomainError(f"1 <= k <= H を満たしません: k={k}, H={p.H}")
    head = (1 << k) - 1
    return Family(p.G, tuple(x for x in universe_X(p).members if head & ~x))


def stirling_ratio_bound(p: SubsetNormParams, k: int) -> float:
    """
    ratio_lower_bound のスターリング近似による下界

    (2π/e)·√((G-H)(H-k)/(G-k))·(G-H)^{G-H}(H-k)^{H-k}/(G-k)^{G-k} を対数空間で評価します。
    """
    G, H = p.G, p.H
    if not 0 < k < H < G:
        raise DomainError(f"0 < k < H < G を満たしません: k={k}, H={H}, G={G}")
    a, b, c = G - H, H - k, G - k
    log_value = (
        math.log(2 * math.pi) - 1
        + 0.5 * (math.log(a) + math.log(b) - math.log(c))
        + a * math.log(a) + b * math.log(b) - c * math.log(c)
    )
    return math.exp(log_value)


def baju_check(p: SubsetNormParams, k: int) -> Report:
    """
    極値族 A* による反例の再現

    (i) ‖A*‖₂ = k、(ii) |A*|/|X| = 1 - Π、(iii) Π < 2^{-nk} を確認し、
    |A*|/|X| > 1 - 2^{-nk} となることを反例として記録します。
    """
    if not 2 <= k <= p.H:
        raise DomainError(f"2 <= k <= H を満たしません: k={k}, H={p.H}")
    family = extremal_family(p, k)
    norm, witness = norm2(p, family)
    product = _falling_ratio(p, k)
    ratio = Fraction(len(family), p.x_size)
    threshold = Fraction(1, 1 << (p.n * k))

    report = Report(
        name="norm2.baju",
        params={"n": p.n, "G": p.G, "k": k},
        cases_run=1,
        values={
            "norm": norm,
            "witness": witness.as_list(),
            "size": len(family),
            "x_size": p.x_size,
            "product": product,
            "threshold": threshold,
            "ratio": ratio,
            "refuted": False,
        },
    )
    if norm != k:
        report.add_violation("norm(A*) = k", norm=norm, k=k)
    if ratio != 1 - product:
        report.add_violation("|A*|/|X| = 1 - product", ratio=ratio, product=product)
    if not product < threshold:
        report.add_violation("product < 2^(-nk)", product=product, threshold=threshold)
    report.values["refuted"] = report.passed and ratio > 1 - threshold
    return report
