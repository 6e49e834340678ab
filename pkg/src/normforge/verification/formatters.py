"""
レポートフォーマッター

Report を機械可読な JSON（正準形）と CSV（スイートごとに一行）へ変換します。
"""

import json
from typing import Any, Dict, List, Sequence

import pandas as pd

from ..core.codecs import canonical_dumps, to_jsonable
from ..core.report import Report

SUMMARY_COLUMNS = [
    "suite",
    "seed",
    "cases",
    "violations",
    "discrepancies",
    "passed",
    "wall_budget_exceeded",
    "params",
]


class ReportFormatter:
    """検証レポートのフォーマッター"""

    def format_json(self, reports: Sequence[Report]) -> str:
        """一件ならそのオブジェクト、複数なら配列"""
        if len(reports) == 1:
            return canonical_dumps(reports[0])
        return canonical_dumps(list(reports))

    def summary_rows(self, reports: Sequence[Report]) -> List[Dict[str, Any]]:
        rows = []
        for report in reports:
            rows.append({
                "suite": report.name,
                "seed": report.seed,
                "cases": report.cases_run,
                "violations": len(report.violations),
                "discrepancies": len(report.discrepancies),
                "passed": report.passed,
                "wall_budget_exceeded": report.wall_budget_exceeded,
                "params": json.dumps(to_jsonable(report.params), sort_keys=True, separators=(",", ":")),
            })
        return rows

    def format_csv(self, reports: Sequence[Report]) -> str:
        frame = pd.DataFrame(self.summary_rows(reports), columns=SUMMARY_COLUMNS)
        return frame.to_csv(index=False, lineterminator="\n")

    def format(self, reports: Sequence[Report], output_format: str) -> str:
        if output_format == "csv":
            return self.format_csv(reports)
        return self.format_json(reports)


def rows_to_csv(rows: Sequence[Dict[str, Any]], columns: Sequence[str]) -> str:
    """走査結果（scan）の行を CSV に変換。セル内の値は JSON 表現にそろえる"""
    normalized = []
    for row in rows:
        cells = {}
        for column in columns:
            value = to_jsonable(row.get(column))
            cells[column] = value if isinstance(value, (int, str, bool)) or value is None else json.dumps(
                value, sort_keys=True, separators=(",", ":"), ensure_ascii=False
            )
        normalized.append(cells)
    return pd.DataFrame(normalized, columns=list(columns)).to_csv(index=False, lineterminator="\n")
