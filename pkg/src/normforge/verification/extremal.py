"""
全列挙による極値探索

ノルムの単調性を使い、最小化はサイズの昇順、最大化は降順に調べて
最初に条件を満たしたサイズで打ち切ります。証拠は同じサイズの中で正準順最初の族です。
"""

import logging
from itertools import combinations
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

from ..config.settings import settings
from ..core.coloring import norm3
from ..core.errors import DomainError, check_budget
from ..core.exclusion import ExclusionParams, norm1
from ..core.hall import hall_norm4
from ..core.partial_functions import FnSet
from ..core.setcore import Family, check_universe, popcount
from ..core.subset_norm import SubsetNormParams, norm2, universe_X

logger = logging.getLogger(__name__)

OBJECTIVES = ("min_size_at_norm", "max_size_at_norm")

Atoms = Tuple[Any, ...]


def _instance(
    norm_id: int, params: Dict[str, Any]
) -> Tuple[Sequence[Any], Callable[[Atoms], Any], Callable[[Atoms], Any]]:
    """(原子の列, 原子の組 → ノルム, 原子の組 → 証拠) を返す"""
    if norm_id == 0:
        N = check_universe(int(params["N"]))
        ground = tuple(range(1 << N))
        return ground, len, lambda atoms: Family(N, atoms)
    if norm_id == 1:
        p = ExclusionParams(int(params["F"]), int(params["G"]))
        ground = tuple(1 << i for i in range(p.G))
        return ground, lambda atoms: norm1(p, sum(atoms)), lambda atoms: sorted(a.bit_length() - 1 for a in atoms)
    if norm_id == 2:
        p = SubsetNormParams(int(params["n"]), int(params["G"]))
        ground = universe_X(p, limit=settings.universe_x_limit).members
        return ground, lambda atoms: norm2(p, Family(p.G, atoms))[0], lambda atoms: Family(p.G, atoms)
    if norm_id == 3:
        N = check_universe(int(params["N"]))
        ground = tuple(m for m in range(1 << N) if popcount(m) >= 2)
        return ground, lambda atoms: norm3(Family(N, atoms))[0], lambda atoms: Family(N, atoms)
    if norm_id == 4:
        N = check_universe(int(params["N"]))
        ground = tuple(range(1 << N))
        return ground, lambda atoms: hall_norm4(FnSet(N, atoms)), lambda atoms: FnSet(N, atoms)
    raise DomainError(f"未知のノルム番号です: {norm_id}")


def exhaustive_extremal(
    norm_id: int,
    params: Dict[str, Any],
    objective: str,
    target: Any,
    limit: Optional[int] = None,
) -> Tuple[Optional[int], Any]:
    """
    min_size_at_norm: ノルム ≥ target となる最小サイズ
    max_size_at_norm: ノルム ≤ target となる最大サイズ

    該当する族がなければ (None, None)。
    """
    if objective not in OBJECTIVES:
        raise DomainError(f"未知の目的関数です: {objective}")
    ground, evaluate, witness = _instance(norm_id, params)
    m = len(ground)
    check_budget(1 << m, settings.family_enumeration_limit if limit is None else limit, "exhaustive_extremal")

    if objective == "min_size_at_norm":
        sizes, accept = range(0, m + 1), (lambda value: value >= target)
    else:
        sizes, accept = range(m, -1, -1), (lambda value: value <= target)

    for size in sizes:
        for atoms in combinations(ground, size):
            if accept(evaluate(atoms)):
                logger.debug(f"極値探索: norm{norm_id} {objective} target={target} → {size}")
                return size, witness(atoms)
    return None, None

