"""
ケース生成

全列挙ケースは「族のサイズ → 選択ビットの数値」の順に並べます。
この順序で最初に見つかった違反が最小の反例になります。
乱数ケースは (seed, ケース番号) ごとに独立な Philox 乱数列から作ります。
"""

from typing import Any, List, Sequence, Tuple

import numpy as np

from ..core.partial_functions import FnFamily, FnSet, PartialFn
from ..core.sampling import case_rng, random_choice_mask, random_mask
from ..core.setcore import Family, SubsetMask, popcount

# 乱数ケース・全列挙ケースの識別タグ
RANDOM = "random"
ALL = "all"


def selectors_by_size(m: int) -> List[int]:
    """m 個の原子の選び方すべて（サイズ、数値の順）"""
    return sorted(range(1 << m), key=lambda s: (popcount(s), s))


def exhaustive_cases(m: int) -> List[Tuple[str, int]]:
    return [(ALL, s) for s in selectors_by_size(m)]


def random_cases(count: int) -> List[Tuple[str, int]]:
    return [(RANDOM, i) for i in range(count)]


def pick(ground: Sequence[Any], selector: int) -> Tuple[Any, ...]:
    return tuple(g for i, g in enumerate(ground) if selector >> i & 1)


def random_family(rng: np.random.Generator, ground: Sequence[SubsetMask], universe: int,
                  density: float = 0.3) -> Family:
    return Family(universe, pick(ground, random_mask(rng, len(ground), density)))


def random_fnset(rng: np.random.Generator, N: int, density: float = 0.5) -> FnSet:
    return FnSet(N, pick(range(1 << N), random_mask(rng, 1 << N, density)))


def random_pfn(rng: np.random.Generator, N: int, min_size: int = 0) -> PartialFn:
    size = int(rng.integers(min_size, N + 1))
    domain = random_choice_mask(rng, N, size)
    return PartialFn(domain, domain & random_mask(rng, N))


def random_fnfamily(rng: np.random.Generator, N: int, max_members: int, min_size: int = 0) -> FnFamily:
    count = int(rng.integers(1, max_members + 1))
    return FnFamily(N, tuple(random_pfn(rng, N, min_size) for _ in range(count)))


def random_universe(rng: np.random.Generator, low: int, high: int) -> int:
    """low 以上 high 以下の宇宙サイズ"""
    return int(rng.integers(low, high + 1))


__all__ = [
    "ALL",
    "RANDOM",
    "case_rng",
    "selectors_by_size",
    "exhaustive_cases",
    "random_cases",
    "pick",
    "random_family",
    "random_fnset",
    "random_pfn",
    "random_fnfamily",
    "random_universe",
    "random_mask",
]
