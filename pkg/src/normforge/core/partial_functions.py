"""
部分関数モデル

{0..N-1} 上の 0/1 値部分関数（PartialFn）、全関数の集合（FnSet）、
部分関数の族（FnFamily）と、柱状集合 [σ] の演算を提供します。
部分関数は (domain, ones) の二つのビットマスクで表し、ones ⊆ domain です。
全関数 f は ones マスクそのもの（domain = 全体）で表します。
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .errors import DomainError, check_budget
from .setcore import SubsetMask, check_universe, elements_of, full_mask, popcount, submasks

CYLINDER_LIMIT = 16


@dataclass(frozen=True, order=True)
class PartialFn:
    """0/1 値の部分関数"""
    domain: SubsetMask
    ones: SubsetMask = 0

    def __post_init__(self):
        if self.domain < 0 or self.ones < 0 or self.ones & ~self.domain:
            raise DomainError(f"ones は domain の部分集合である必要があります: domain={self.domain}, ones={self.ones}")

    @classmethod
    def from_mapping(cls, mapping: Dict[int, int]) -> "PartialFn":
        domain = ones = 0
        for point, value in mapping.items():
            if value not in (0, 1):
                raise DomainError(f"値は 0 または 1 です: {point}↦{value}")
            domain |= 1 << point
            if value:
                ones |= 1 << point
        return cls(domain, ones)

    @classmethod
    def total(cls, N: int, ones: SubsetMask) -> "PartialFn":
        return cls(full_mask(N), ones)

    @property
    def size(self) -> int:
        return popcount(self.domain)

    def restrict(self, z: SubsetMask) -> "PartialFn":
        """σ↾z"""
        return PartialFn(self.domain & z, self.ones & z)

    def is_subfunction_of(self, other: "PartialFn") -> bool:
        """self ⊆ other（グラフとして）"""
        return self.domain & ~other.domain == 0 and other.ones & self.domain == self.ones

    def extended_by(self, f: SubsetMask) -> bool:
        """全関数 f（ones マスク）が self を拡張するか"""
        return f & self.domain == self.ones

    def as_mapping(self) -> Dict[int, int]:
        return {p: (self.ones >> p) & 1 for p in elements_of(self.domain)}

    def __repr__(self) -> str:
        body = ",".join(f"{p}↦{v}" for p, v in self.as_mapping().items())
        return f"PartialFn({{{body}}})"


EMPTY_FN = PartialFn(0, 0)


def function_string(N: int, f: SubsetMask) -> str:
    """全関数の文字列表現（添字 0 が左端）"""
    return "".join("1" if f >> i & 1 else "0" for i in range(N))


def parse_function_string(text: str) -> SubsetMask:
    return sum(1 << i for i, ch in enumerate(text) if ch == "1")


@dataclass(frozen=True)
class FnSet:
    """全関数の集合 A ⊆ ᴺ2（ones マスクの昇順）"""
    universe: int
    functions: Tuple[SubsetMask, ...] = ()

    def __post_init__(self):
        check_universe(self.universe, minimum=0)
        limit = full_mask(self.universe)
        for f in self.functions:
            if f < 0 or f & ~limit:
                raise DomainError(f"関数が宇宙の外の点に値を持ちます: {f} (N={self.universe})")
        object.__setattr__(self, "functions", tuple(sorted(set(self.functions))))

    @classmethod
    def of_strings(cls, N: int, texts: Iterable[str]) -> "FnSet":
        return cls(N, tuple(parse_function_string(t) for t in texts))

    @classmethod
    def full(cls, N: int) -> "FnSet":
        return cls(N, tuple(range(1 << N)))

    def __len__(self) -> int:
        return len(self.functions)

    def __iter__(self) -> Iterator[SubsetMask]:
        return iter(self.functions)

    def __contains__(self, f: object) -> bool:
        return f in self.functions

    def as_strings(self) -> List[str]:
        return [function_string(self.universe, f) for f in self.functions]

    def union(self, other: "FnSet") -> "FnSet":
        _check_same(self.universe, other.universe)
        return FnSet(self.universe, self.functions + other.functions)

    def is_subset_of(self, other: "FnSet") -> bool:
        return set(self.functions) <= set(other.functions)

    def subset(self, selector: int) -> "FnSet":
        return FnSet(self.universe, tuple(f for i, f in enumerate(self.functions) if selector >> i & 1))

    def meets(self, sigma: PartialFn) -> bool:
        """[σ] ∩ A ≠ ∅"""
        return any(sigma.extended_by(f) for f in self.functions)


@dataclass(frozen=True)
class FnFamily:
    """部分関数の族 δ（重複なし）"""
    universe: int
    members: Tuple[PartialFn, ...] = ()

    def __post_init__(self):
        check_universe(self.universe, minimum=0)
        limit = full_mask(self.universe)
        for sigma in self.members:
            if sigma.domain & ~limit:
                raise DomainError(f"部分関数の定義域が宇宙の外にあります: {sigma!r} (N={self.universe})")
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    @classmethod
    def of_mappings(cls, N: int, mappings: Iterable[Dict[int, int]]) -> "FnFamily":
        return cls(N, tuple(PartialFn.from_mapping(m) for m in mappings))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[PartialFn]:
        return iter(self.members)

    def __contains__(self, sigma: object) -> bool:
        return sigma in self.members

    def union(self, other: "FnFamily") -> "FnFamily":
        _check_same(self.universe, other.universe)
        return FnFamily(self.universe, self.members + other.members)

    def as_mappings(self) -> List[Dict[int, int]]:
        return [sigma.as_mapping() for sigma in self.members]


def _check_same(a: int, b: int) -> None:
    if a != b:
        raise DomainError(f"宇宙が一致しません: {a} != {b}")


def cylinder(sigma: PartialFn, N: int) -> FnSet:
    """[σ] = σ の全関数への拡張すべて"""
    check_budget(N, CYLINDER_LIMIT, "cylinder")
    if sigma.domain & ~full_mask(N):
        raise DomainError(f"部分関数の定義域が宇宙の外にあります: {sigma!r}")
    free = full_mask(N) & ~sigma.domain
    return FnSet(N, tuple(sigma.ones | extra for extra in submasks(free)))


def cylinder_meet(s1: PartialFn, s2: PartialFn) -> Optional[PartialFn]:
    """[σ₁] ∩ [σ₂] = [σ₁ ∪ σ₂]。共通点で値が食い違えば None"""
    common = s1.domain & s2.domain
    if (s1.ones ^ s2.ones) & common:
        return None
    return PartialFn(s1.domain | s2.domain, s1.ones | s2.ones)


def subfunctions(sigma: PartialFn) -> Iterator[PartialFn]:
    """σ の部分関数すべて（σ 自身を含む）"""
    for d in submasks(sigma.domain):
        yield PartialFn(d, sigma.ones & d)


def immediate_subfunctions(sigma: PartialFn) -> Iterator[PartialFn]:
    """一点だけ取り除いた部分関数"""
    for p in elements_of(sigma.domain):
        yield sigma.restrict(sigma.domain & ~(1 << p))


def all_partial_functions(N: int) -> Iterator[PartialFn]:
    """N 上の部分関数すべて（定義域サイズの昇順）"""
    for size in range(N + 1):
        for domain in range(1 << N):
            if popcount(domain) != size:
                continue
            for ones in submasks(domain):
                yield PartialFn(domain, ones)


def relabel_mask(mask: SubsetMask, z: SubsetMask) -> SubsetMask:
    """z の元を昇順に 0..|z|-1 へ付け替えたときの mask の像"""
    out = 0
    for i, p in enumerate(elements_of(z)):
        if mask >> p & 1:
            out |= 1 << i
    return out


def unrelabel_mask(mask: SubsetMask, z: SubsetMask) -> SubsetMask:
    """relabel_mask の逆"""
    out = 0
    for i, p in enumerate(elements_of(z)):
        if mask >> i & 1:
            out |= 1 << p
    return out


def relabel_fn(sigma: PartialFn, z: SubsetMask) -> PartialFn:
    return PartialFn(relabel_mask(sigma.domain, z), relabel_mask(sigma.ones, z))


def relabel_family(delta: FnFamily, z: SubsetMask) -> FnFamily:
    """定義域が z に含まれる族を宇宙 |z| へ付け替え"""
    for sigma in delta.members:
        if sigma.domain & ~z:
            raise DomainError(f"定義域が付け替え先の外にあります: {sigma!r}")
    return FnFamily(popcount(z), tuple(relabel_fn(s, z) for s in delta.members))
