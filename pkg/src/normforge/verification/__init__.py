"""
性質検証ハーネス（propcheck）

スイートの登録・実行、極値探索、不一致レポート、出力整形を提供します。
"""

from .discrepancies import discrepancy_report, standing_ids
from .engine import SuiteSpec, make_spec, report_bytes, run_suite
from .extremal import OBJECTIVES, exhaustive_extremal
from .formatters import ReportFormatter, rows_to_csv
from .registry import MODULES, SuiteDef, get_suite, list_suites, suite

__all__ = [
    "SuiteSpec",
    "SuiteDef",
    "MODULES",
    "run_suite",
    "make_spec",
    "report_bytes",
    "get_suite",
    "list_suites",
    "suite",
    "exhaustive_extremal",
    "OBJECTIVES",
    "discrepancy_report",
    "standing_ids",
    "ReportFormatter",
    "rows_to_csv",
]
