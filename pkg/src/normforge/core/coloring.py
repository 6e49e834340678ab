"""
グラフ彩色ノルム ‖·‖₃

P_N 上の族 A を「どの部分にも A の元が入らない」分割で割る最小部分数
（分割数、弱彩色数）を分枝限定法で求め、‖A‖₃ = ⌈log₂ c⌉ とします。
定義どおりの再帰判定は小規模用のオラクルとして残しています。
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from math import ceil, log2
from typing import Dict, List, Optional, Tuple

from .combinatorics import BigCount, binomial
from .errors import DomainError, check_budget
from .report import Report
from .setcore import (
    Family,
    Partition,
    SubsetMask,
    elements_of,
    full_mask,
    mask_of,
    masks_of_size,
    popcount,
)

logger = logging.getLogger(__name__)

SPLIT_LIMIT = 16
ORACLE_LIMIT = 10
EDGE_SYSTEM_LIMIT = 10
EDGE_SYSTEM_PRODUCT_LIMIT = 200_000


@dataclass(frozen=True)
class SplitWitness:
    """分割による証拠"""
    partition: Partition

    @property
    def parts_count(self) -> int:
        return len(self.partition)


def check_polygons(A: Family) -> Family:
    """P_N の族か（全ての元のサイズが 2 以上）"""
    for a in A.members:
        if popcount(a) < 2:
            raise DomainError(f"元のサイズが 2 未満です: {elements_of(a)}")
    return A


def splitting_number(A: Family, limit: int = SPLIT_LIMIT) -> Tuple[int, SplitWitness]:
    """
    A を分割する最小部分数と分割

    頂点を 0 から順に既存の部分か新しい部分へ置く（新しい部分は最小要素順に生まれる）
    探索で、現在の最良値より部分数が増える枝は切ります。
    """
    check_polygons(A)
    N = A.universe
    check_budget(N, limit, "splitting_number")
    if not A.members:
        parts = (full_mask(N),) if N else ()
        return 1, SplitWitness(Partition(N, parts))

    # 最大要素ごとに元を分類（頂点 v を置いた時点で判定できる元）
    closing: List[List[SubsetMask]] = [[] for _ in range(N)]
    for a in A.members:
        closing[a.bit_length() - 1].append(a)

    best = [N, tuple(1 << v for v in range(N))]
    parts: List[SubsetMask] = []

    class _Done(Exception):
        pass

    def search(v: int) -> None:
        if v == N:
            if len(parts) < best[0]:
                best[0], best[1] = len(parts), tuple(parts)
                if best[0] == 2:
                    raise _Done
            return
        bit = 1 << v
        for i, part in enumerate(parts):
            merged = part | bit
            if any(a & ~merged == 0 for a in closing[v]):
                continue
            parts[i] = merged
            search(v + 1)
            parts[i] = part
        if len(parts) + 1 < best[0]:
            parts.append(bit)
            search(v + 1)
            parts.pop()

    try:
        search(0)
    except _Done:
        pass
    logger.debug(f"分割数を計算: N={N}, |A|={len(A)}, c={best[0]}")
    return best[0], SplitWitness(Partition(N, best[1]))


def norm_from_parts(c: int) -> int:
    """c 部分で割れるときの ‖·‖₃ = ⌈log₂ c⌉"""
    return (c - 1).bit_length()


def norm3(A: Family) -> Tuple[int, SplitWitness]:
    c, witness = splitting_number(A)
    return norm_from_parts(c), witness


def norm3_ge_oracle(A: Family, n: int, limit: int = ORACLE_LIMIT) -> bool:
    """
    定義どおりの再帰による ‖A‖₃ ≥ n の判定

    ‖A‖₃ ≥ 1 ⇔ A ≠ ∅、‖A‖₃ ≥ n+1 ⇔ 全ての z ⊆ N で
    ‖A↾z‖₃ ≥ n または ‖A↾(N∖z)‖₃ ≥ n。
    """
    check_polygons(A)
    N = A.universe
    check_budget(N, limit, "norm3_ge_oracle")
    if n < 0:
        raise DomainError(f"n は非負整数です: n={n}")
    memo: Dict[Tuple[Tuple[SubsetMask, ...], int], bool] = {}

    def ge(members: Tuple[SubsetMask, ...], level: int) -> bool:
        if level == 0:
            return True
        if level == 1:
            return bool(members)
        key = (members, level)
        if key not in memo:
            result = True
            for z in range(1 << N):
                left = tuple(a for a in members if a & ~z == 0)
                right = tuple(a for a in members if a & z == 0)
                if not (ge(left, level - 1) or ge(right, level - 1)):
                    result = False
                    break
            memo[key] = result
        return memo[key]

    return ge(A.members, n)


def norm3_by_oracle(A: Family) -> int:
    """オラクルによる ‖A‖₃（最大の n）"""
    n = 0
    while norm3_ge_oracle(A, n + 1):
        n += 1
    return n


def rank_encode(a: SubsetMask, N: int) -> BigCount:
    """f(a) = Σ a_i·N^i（a₀ < a₁ < … の昇順列挙）"""
    if a == 0:
        raise DomainError("空集合は符号化できません")
    return sum(e * N ** i for i, e in enumerate(elements_of(a)))


@dataclass(frozen=True)
class ReducerSpec:
    """多角形を辺へ落とす関数 g（g(a) ⊆ a、g(a) = a ⇔ |a| = 2）"""
    kind: str = "lex_min_edge"
    table: Optional[Dict[SubsetMask, SubsetMask]] = field(default=None, hash=False, compare=False)

    def __post_init__(self):
        if self.kind not in ("lex_min_edge", "lex_max_edge", "table"):
            raise DomainError(f"未知の縮約関数です: {self.kind}")
        if self.kind == "table":
            if not self.table:
                raise DomainError("table 型の縮約関数には対応表が必要です")
            for polygon, edge in self.table.items():
                if popcount(polygon) < 3 or popcount(edge) != 2 or edge & ~polygon:
                    raise DomainError(
                        f"対応表が不正です: {elements_of(polygon)} → {elements_of(edge)}"
                    )

    def apply(self, a: SubsetMask) -> SubsetMask:
        if popcount(a) == 2:
            return a
        if popcount(a) < 2:
            raise DomainError(f"サイズ 2 未満の集合には適用できません: {elements_of(a)}")
        points = elements_of(a)
        if self.kind == "lex_min_edge":
            return mask_of(points[:2])
        if self.kind == "lex_max_edge":
            return mask_of(points[-2:])
        if a not in self.table:
            raise DomainError(f"対応表に多角形がありません: {points}")
        return self.table[a]


BUILTIN_REDUCERS = (ReducerSpec("lex_min_edge"), ReducerSpec("lex_max_edge"))


def psi_step(A: Family, g: ReducerSpec) -> Family:
    """f-符号が最大の元 a を g(a) に置き換える（ψ_g(∅) = ∅）"""
    check_polygons(A)
    if not A.members:
        return A
    top = max(A.members, key=lambda a: rank_encode(a, A.universe))
    rest = tuple(a for a in A.members if a != top)
    return Family(A.universe, rest + (g.apply(top),))


def edges_of(a: SubsetMask) -> List[SubsetMask]:
    """a に含まれる辺（数値順）"""
    points = elements_of(a)
    return sorted(mask_of((points[i], points[j])) for i in range(len(points)) for j in range(i + 1, len(points)))


def edge_systems_min(A: Family, product_limit: int = EDGE_SYSTEM_PRODUCT_LIMIT) -> Tuple[int, Family]:
    """
    辺系 𝓔_A 上の ‖·‖₃ の最小値と達成する辺系

    ノルムは単調なので、各元から辺を一本ずつ選ぶ極小な辺系だけを調べれば足ります。
    """
    check_polygons(A)
    check_budget(A.universe, EDGE_SYSTEM_LIMIT, "edge_systems_min")
    choices = [edges_of(a) for a in A.members]
    combos = 1
    for options in choices:
        combos *= len(options)
    check_budget(combos, product_limit, "edge_systems_min")

    seen: Dict[Tuple[SubsetMask, ...], int] = {}
    best: Optional[Tuple[int, Family]] = None
    for chosen in product(*choices):
        system = Family(A.universe, chosen)
        if system.members not in seen:
            seen[system.members] = norm3(system)[0]
        value = seen[system.members]
        if best is None or value < best[0]:
            best = (value, system)
    return best


def kgon_family(N: int, k: int, within: Optional[SubsetMask] = None) -> Family:
    """k 元部分集合すべて（within 指定時はその内部のみ）"""
    if k < 2:
        raise DomainError(f"k は 2 以上です: k={k}")
    scope = full_mask(N) if within is None else within
    return Family(N, tuple(m for m in masks_of_size(N, k) if m & ~scope == 0))


def kgon_exact_formula(N: int, k: int) -> int:
    """全 k 角形の分割数 ⌈N/(k-1)⌉（各部分のサイズは k-1 以下）"""
    return -(-N // (k - 1))


def kgon_stated_formula(N: int, k: int) -> int:
    """記述された式 min{⌈N/(k-1)⌉, ⌊N/k + 1⌋}"""
    return min(kgon_exact_formula(N, k), N // k + 1)


def kgon_analysis(N: int, k: int) -> Report:
    """全 k 角形の族の分割数を厳密に求め、二つの式と比較"""
    if not 2 <= k <= N <= 12:
        raise DomainError(f"2 <= k <= N <= 12 を満たしません: N={N}, k={k}")
    exact, witness = splitting_number(kgon_family(N, k))
    formula = kgon_exact_formula(N, k)
    stated = kgon_stated_formula(N, k)
    report = Report(
        name="coloring.kgon",
        params={"N": N, "k": k},
        cases_run=1,
        values={
            "exact": exact,
            "formula": formula,
            "stated": stated,
            "match": exact == stated,
            "partition": witness.partition.as_lists(),
        },
    )
    if exact != formula:
        report.add_violation("splitting number = ceil(N/(k-1))", N=N, k=k, exact=exact, formula=formula)
    if exact != stated:
        report.add_discrepancy("kgon_formula", N=N, k=k, exact=exact, stated=stated)
    return report


def size_bounds(N: int, k: int) -> Tuple[BigCount, BigCount]:
    """
    ‖A‖₃ = k となる族のサイズの範囲

    最小は C(2^{k-1}+1, 2)（完全グラフ）、最大は 2^N - 2^k·2^{N/2^k} + 2^k - 1。
    2^k ∤ N のときは実数値を切り捨てます。
    """
    if k < 1 or N < 1:
        raise DomainError(f"N, k は正の整数です: N={N}, k={k}")
    parts = 1 << k
    min_size = binomial((1 << (k - 1)) + 1, 2)
    if N % parts == 0:
        max_size = (1 << N) - parts * (1 << (N // parts)) + parts - 1
    else:
        real = (1 << N) - parts * 2 ** (N / parts) + parts - 1
        max_size = int(real // 1)
    return min_size, max_size


def norm_upper_bound(N: int) -> int:
    """‖A‖₃ ≤ ⌈log₂ N⌉（一点ずつの分割で割れる）"""
    return ceil(log2(N)) if N > 1 else 0


def clique_family(C: SubsetMask, N: int) -> Family:
    """頂点集合 C 上の完全グラフの辺"""
    return Family(N, tuple(edges_of(C)) if popcount(C) >= 2 else ())


def star_family(N: int, v: int) -> Family:
    """{a ∈ P_N : v ∈ a}"""
    return Family(N, tuple(m for m in range(1 << N) if popcount(m) >= 2 and m >> v & 1))


def rook_construction(n: int) -> Tuple[Family, Family]:
    """
    N = n² 上の二つの辺族

    頂点 i·n + j を格子の (i, j) と見て、A は異なる行を結ぶ辺、B は同じ行の辺。
    c(A) = c(B) = n で、A ∪ B は完全グラフなので c(A ∪ B) = n²。
    """
    if n < 1:
        raise DomainError(f"n は正の整数です: n={n}")
    N = n * n
    row_of = [v // n for v in range(N)]
    cross, inner = [], []
    for u in range(N):
        for v in range(u + 1, N):
            (cross if row_of[u] != row_of[v] else inner).append((1 << u) | (1 << v))
    return Family(N, tuple(cross)), Family(N, tuple(inner))
