"""
検証結果レポート

各チェック関数と検証スイートが返す構造化結果です。
違反（violations）は主張の反例、不一致（discrepancies）は記述との食い違いの記録で、
後者はスイートの失敗とはみなしません。
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class Report:
    """検証の結果"""
    name: str
    params: Dict[str, Any] = field(default_factory=dict)
    seed: int = 0
    cases_run: int = 0
    violations: List[Dict[str, Any]] = field(default_factory=list)
    discrepancies: List[Dict[str, Any]] = field(default_factory=list)
    values: Dict[str, Any] = field(default_factory=dict)
    wall_budget_exceeded: bool = False

    @property
    def passed(self) -> bool:
        return not self.violations

    def add_violation(self, claim: str, **payload: Any) -> None:
        self.violations.append({"claim": claim, **payload})

    def add_discrepancy(self, discrepancy_id: str, **payload: Any) -> None:
        self.discrepancies.append({"id": discrepancy_id, **payload})

    def merge(self, other: "Report") -> None:
        """他の結果を取り込む（件数は加算、リストは連結）"""
        self.cases_run += other.cases_run
        self.violations.extend(other.violations)
        self.discrepancies.extend(other.discrepancies)
        self.wall_budget_exceeded = self.wall_budget_exceeded or other.wall_budget_exceeded
