"""
不一致レポート

カタログの既知項目と、スイート実行で得た具体的な反例をまとめます。
カタログにない ID の不一致（実行時に見つかったもの）も項目として追加します。
"""

import logging
from typing import Any, Dict, Iterable, List, Optional

from ..config.constants import DiscrepancyCatalog, discrepancy_catalog
from ..core.report import Report

logger = logging.getLogger(__name__)

# 一項目あたりに残す具体例の上限
MAX_PAYLOADS = 5


def discrepancy_report(
    reports: Optional[Iterable[Report]] = None,
    catalog: Optional[DiscrepancyCatalog] = None,
) -> Report:
    """カタログ項目ごとに、スイートから得た具体例と件数を付けたレポート"""
    catalog = catalog or discrepancy_catalog
    entries: Dict[str, Dict[str, Any]] = {}
    for entry in catalog.entries:
        entries[entry["id"]] = {**entry, "occurrences": 0, "payloads": []}

    report = Report(name="discrepancies")
    for source in reports or ():
        report.cases_run += source.cases_run
        for item in source.discrepancies:
            payload = {k: v for k, v in item.items() if k != "id"}
            entry = entries.setdefault(item["id"], {
                "id": item["id"],
                "suite": source.name,
                "occurrences": 0,
                "payloads": [],
            })
            entry["occurrences"] += 1
            if len(entry["payloads"]) < MAX_PAYLOADS:
                entry["payloads"].append(payload)

    report.discrepancies = [entries[key] for key in sorted(entries)]
    report.values = {"entries": len(report.discrepancies)}
    logger.info(f"不一致レポート作成: {len(report.discrepancies)}件")
    return report


def standing_ids(catalog: Optional[DiscrepancyCatalog] = None) -> List[str]:
    return sorted(entry["id"] for entry in (catalog or discrepancy_catalog).entries)
