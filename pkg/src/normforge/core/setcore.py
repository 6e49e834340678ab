"""
集合の基本データモデル

宇宙 {0..N-1}、ビットマスクによる部分集合、集合族、分割、
制限演算 A↾z と計数ノルムを提供します。
値はすべて不変で、順序はビットベクトルの数値順を正準とします。
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, List, Sequence, Tuple

from .combinatorics import BigCount
from .errors import DomainError

# 部分集合はビットマスク（int）で表す
SubsetMask = int

MAX_UNIVERSE = 24


def check_universe(N: int, limit: int = MAX_UNIVERSE, minimum: int = 1) -> int:
    """
    宇宙サイズの検証（入力は 1 ≤ N）

    切断の片側のように内部で宇宙が空になる値は minimum=0 で受け付けます。
    """
    if not isinstance(N, int) or N < minimum or N > limit:
        raise DomainError(f"宇宙サイズが範囲外です: N={N} ({minimum}..{limit})")
    return N


def full_mask(N: int) -> SubsetMask:
    return (1 << N) - 1


def mask_of(elements: Iterable[int]) -> SubsetMask:
    mask = 0
    for e in elements:
        if e < 0:
            raise DomainError(f"要素は非負整数です: {e}")
        mask |= 1 << e
    return mask


def elements_of(mask: SubsetMask) -> List[int]:
    """昇順の要素リスト"""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: SubsetMask) -> int:
    return mask.bit_count()


def is_subset(a: SubsetMask, b: SubsetMask) -> bool:
    return a & ~b == 0


def masks_of_size(N: int, k: int) -> Iterator[SubsetMask]:
    """サイズ k の部分集合を数値の昇順に列挙（Gosper）"""
    if k < 0 or k > N:
        return
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    limit = 1 << N
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


def submasks(mask: SubsetMask) -> Iterator[SubsetMask]:
    """mask の部分集合を数値の昇順に列挙"""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def canonical_set_key(mask: SubsetMask) -> Tuple[int, List[int]]:
    """出力用の並び（サイズ、辞書式）"""
    return popcount(mask), elements_of(mask)


@dataclass(frozen=True)
class Family:
    """宇宙 N 上の部分集合の族（重複なし、数値順）"""
    universe: int
    members: Tuple[SubsetMask, ...] = ()

    def __post_init__(self):
        check_universe(self.universe, minimum=0)
        limit = full_mask(self.universe)
        for m in self.members:
            if m < 0 or m & ~limit:
                raise DomainError(f"要素が宇宙の外にあります: {elements_of(m)} (universe {self.universe})")
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    @classmethod
    def of(cls, universe: int, sets: Iterable[Iterable[int]]) -> "Family":
        return cls(universe, tuple(mask_of(s) for s in sets))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[SubsetMask]:
        return iter(self.members)

    def __contains__(self, mask: object) -> bool:
        return mask in self.members

    def as_lists(self) -> List[List[int]]:
        return [elements_of(m) for m in sorted(self.members, key=canonical_set_key)]

    def union(self, other: "Family") -> "Family":
        check_same_universe(self, other)
        return Family(self.universe, self.members + other.members)

    def subfamily(self, selector: int) -> "Family":
        """ビット selector で選んだ部分族"""
        return Family(self.universe, tuple(m for i, m in enumerate(self.members) if selector >> i & 1))

    def with_universe(self, universe: int) -> "Family":
        return Family(universe, self.members)

    def is_subfamily_of(self, other: "Family") -> bool:
        return set(self.members) <= set(other.members)


def check_same_universe(a: Family, b: Family) -> None:
    if a.universe != b.universe:
        raise DomainError(f"宇宙が一致しません: {a.universe} != {b.universe}")


def all_sets_of_size(N: int, k: int) -> Family:
    """N 上のサイズ k の部分集合すべて"""
    return Family(N, tuple(masks_of_size(N, k)))


def polygon_universe(N: int) -> Family:
    """P_N = サイズ 2 以上の部分集合すべて"""
    return Family(N, tuple(m for m in range(1 << N) if popcount(m) >= 2))


@dataclass(frozen=True)
class Partition:
    """宇宙の分割（各部分は非空、最小要素順）"""
    universe: int
    parts: Tuple[SubsetMask, ...]

    def __post_init__(self):
        covered = 0
        for part in self.parts:
            if part == 0:
                raise DomainError("空の部分は許されません")
            if covered & part:
                raise DomainError("部分が互いに素ではありません")
            covered |= part
        if covered != full_mask(self.universe):
            raise DomainError("部分の和集合が宇宙と一致しません")
        ordered = sorted(self.parts, key=lambda p: (p & -p))
        object.__setattr__(self, "parts", tuple(ordered))

    def __len__(self) -> int:
        return len(self.parts)

    def as_lists(self) -> List[List[int]]:
        return [elements_of(p) for p in self.parts]

    def splits(self, family: Family) -> bool:
        """どの部分にも族の元が含まれないか"""
        return all(restrict(family, part).members == () for part in self.parts)


def restrict(A: Family, z: SubsetMask) -> Family:
    """A↾z = {a ∈ A : a ⊆ z}"""
    if z < 0 or z & ~full_mask(A.universe):
        raise DomainError(f"制限集合が宇宙の外にあります: {elements_of(z)} (universe {A.universe})")
    return Family(A.universe, tuple(a for a in A.members if a & ~z == 0))


def delete_vertex(A: Family, v: int) -> Family:
    """頂点 v を含まない元だけを残す（補集合 N∖{v} への制限）"""
    return restrict(A, full_mask(A.universe) & ~(1 << v))


def counting_norm(A: Family) -> BigCount:
    """計数ノルム |A|"""
    return len(A)


def families_over(ground: Sequence[SubsetMask], universe: int, size: int) -> Iterator[Family]:
    """ground から size 個選んだ族を正準順（辞書式の添字順）に列挙"""
    for combo in combinations(ground, size):
        yield Family(universe, combo)
