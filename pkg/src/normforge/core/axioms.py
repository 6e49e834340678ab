"""
ノルム公理の検査

集合上の関数が単調性・全体での正値性・一点集合で 1 以下、を満たすかを
全列挙（原子数が上限以下）または乱数標本で調べます。
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, List, Sequence, Union

from .coloring import check_polygons, norm3
from .errors import DomainError
from .exclusion import ExclusionParams, norm1
from .hall import hall_norm4
from .partial_functions import FnSet
from .report import Report
from .sampling import case_rng, random_mask
from .setcore import Family, SubsetMask, counting_norm, elements_of
from .subset_norm import SubsetNormParams, norm2

logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 12
SAMPLE_PAIRS = 2000


@dataclass(frozen=True)
class _Ground:
    """原子の列と、原子の部分集合（ビット選択）に対するノルム評価"""
    atoms: Sequence[Any]
    evaluate: Callable[[int], Any]


def _ground_for(norm_id: int, params: Any, A: Union[Family, FnSet, SubsetMask]) -> _Ground:
    if norm_id == 0:
        if not isinstance(A, Family):
            raise DomainError("‖·‖₀ の入力は集合族です")
        return _Ground(A.members, lambda sel: counting_norm(A.subfamily(sel)))
    if norm_id == 1:
        if not isinstance(params, ExclusionParams) or not isinstance(A, int):
            raise DomainError("‖·‖₁ の入力は ExclusionParams と G の部分集合マスクです")
        points = elements_of(A)

        def value(sel: int) -> Any:
            return norm1(params, sum(1 << p for i, p in enumerate(points) if sel >> i & 1))

        return _Ground(points, value)
    if norm_id == 2:
        if not isinstance(params, SubsetNormParams) or not isinstance(A, Family):
            raise DomainError("‖·‖₂ の入力は SubsetNormParams と X の部分族です")
        return _Ground(A.members, lambda sel: norm2(params, A.subfamily(sel))[0])
    if norm_id == 3:
        if not isinstance(A, Family):
            raise DomainError("‖·‖₃ の入力は P_N の部分族です")
        check_polygons(A)
        return _Ground(A.members, lambda sel: norm3(A.subfamily(sel))[0])
    if norm_id == 4:
        if not isinstance(A, FnSet):
            raise DomainError("‖·‖₄ の入力は全関数の集合です")
        return _Ground(A.functions, lambda sel: hall_norm4(A.subset(sel)))
    raise DomainError(f"未知のノルム番号です: {norm_id}")


def axiom_check(
    norm_id: int,
    params: Any,
    A: Union[Family, FnSet, SubsetMask],
    seed: int = 0,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
    sample_pairs: int = SAMPLE_PAIRS,
) -> Report:
    """
    ノルム公理を検査し、成り立つ公理を values に記録

    ‖·‖₄ の一点集合の公理が崩れるのは既知の不一致として扱い、違反にはしません。
    """
    ground = _ground_for(norm_id, params, A)
    m = len(ground.atoms)
    full = (1 << m) - 1
    report = Report(name=f"axioms.norm{norm_id}", params={"atoms": m}, seed=seed)
    failures: List[dict] = []

    if m <= exhaustive_limit:
        values = [ground.evaluate(sel) for sel in range(1 << m)]
        monotone = True
        for sel in range(1 << m):
            missing = full & ~sel
            while missing:
                bit = missing & -missing
                report.cases_run += 1
                if values[sel] > values[sel | bit]:
                    monotone = False
                    failures.append({"axiom": "monotone", "smaller": sel, "larger": sel | bit})
                missing &= ~bit
        value_of = values.__getitem__
    else:
        cache = {}

        def value_of(sel: int) -> Any:
            if sel not in cache:
                cache[sel] = ground.evaluate(sel)
            return cache[sel]

        monotone = True
        for index in range(sample_pairs):
            rng = case_rng(seed, index)
            sel = random_mask(rng, m)
            missing = [i for i in range(m) if not sel >> i & 1]
            if not missing:
                continue
            bit = 1 << missing[int(rng.integers(len(missing)))]
            report.cases_run += 1
            if value_of(sel) > value_of(sel | bit):
                monotone = False
                failures.append({"axiom": "monotone", "smaller": sel, "larger": sel | bit})

    positive = m <= 1 or value_of(full) > 0
    if not positive:
        failures.append({"axiom": "positive", "value": value_of(full)})
    singleton = True
    for i in range(m):
        if value_of(1 << i) > 1:
            singleton = False
            failures.append({"axiom": "singleton", "atom": i, "value": value_of(1 << i)})
            break

    report.values = {"monotone": monotone, "positive": positive, "singleton": singleton}
    for failure in failures:
        if norm_id == 4 and failure["axiom"] == "singleton":
            report.add_discrepancy("norm4_singleton_axiom", **failure)
        else:
            report.add_violation(f"norm{norm_id} axiom {failure['axiom']}", **failure)
    return report
