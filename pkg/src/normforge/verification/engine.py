"""
検証エンジン

SuiteSpec を受け取り、スイートのケースを生成・評価して一つの Report にまとめます。
ケースは独立した乱数列を持つので、ワーカー数を変えても結果は変わりません。
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

from ..config.settings import settings
from ..core.codecs import canonical_dumps, to_jsonable
from ..core.report import Report
from ..utils.cache_manager import ReportCache, spec_digest
from ..utils.log_config import log_suite_activity
from .registry import SuiteDef, get_suite

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuiteSpec:
    """スイート実行の指定（jobs は結果に影響しない）"""
    name: str
    params: Dict[str, Any] = field(default_factory=dict)
    seed: int = 1
    cases: int = 1000
    budget: int = 100_000
    jobs: int = 1

    def payload(self) -> Dict[str, Any]:
        """キャッシュキー用の正準表現"""
        return {
            "name": self.name,
            "params": to_jsonable(self.params),
            "seed": self.seed,
            "cases": self.cases,
            "budget": self.budget,
        }


def _evaluate(task: Tuple[str, Any, Dict[str, Any], int]) -> Report:
    """ワーカーで一ケースを評価"""
    name, case, params, seed = task
    return get_suite(name).check(case, params, seed)


def _map_cases(tasks: List[Tuple[str, Any, Dict[str, Any], int]], jobs: int) -> Iterable[Report]:
    if jobs <= 1 or len(tasks) <= 1:
        return map(_evaluate, tasks)
    chunksize = max(1, len(tasks) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        # map は入力順を保つ
        return list(executor.map(_evaluate, tasks, chunksize=chunksize))


def _merge(definition: SuiteDef, spec: SuiteSpec, params: Dict[str, Any],
           outcomes: Iterable[Report], truncated: bool) -> Report:
    report = Report(name=definition.name, params=params, seed=spec.seed,
                    wall_budget_exceeded=truncated)
    collected: List[Report] = []
    counts: Dict[str, int] = {}
    for index, outcome in enumerate(outcomes):
        report.cases_run += 1
        for violation in outcome.violations:
            report.violations.append({"case": index, **violation})
        for item in outcome.discrepancies:
            counts[item["id"]] = counts.get(item["id"], 0) + 1
            if counts[item["id"]] <= definition.discrepancy_limit:
                report.discrepancies.append(item)
        report.wall_budget_exceeded = report.wall_budget_exceeded or outcome.wall_budget_exceeded
        collected.append(outcome)

    if definition.summarize is not None:
        report.values = definition.summarize(collected, params)
    else:
        case_values = [outcome.values for outcome in collected if outcome.values]
        if case_values:
            report.values = {"cases": case_values}
    if counts:
        report.values["discrepancy_counts"] = dict(sorted(counts.items()))
    return report


def run_suite(spec: SuiteSpec, cache: Optional[ReportCache] = None) -> Report:
    """
    スイートを実行して Report を返す

    ケース数が予算を超える場合は先頭から予算分だけ評価し、
    wall_budget_exceeded を立てます（失敗扱いではありません）。
    """
    definition = get_suite(spec.name)
    params = {**definition.defaults, **spec.params}

    key = None
    if cache is not None:
        key = spec_digest(spec.payload())
        stored = cache.get(key)
        if stored is not None:
            log_suite_activity(logger, spec.name, "cached")
            return _report_from_payload(stored)

    start = time.time()
    log_suite_activity(logger, spec.name, "start", details={"seed": spec.seed, "jobs": spec.jobs})
    cases = definition.cases(params, spec.cases)
    truncated = len(cases) > spec.budget
    if truncated:
        logger.warning(f"ケース数が予算を超えました: {len(cases)} > {spec.budget} ({spec.name})")
        cases = cases[: spec.budget]

    tasks = [(spec.name, case, params, spec.seed) for case in cases]
    try:
        report = _merge(definition, spec, params, _map_cases(tasks, spec.jobs), truncated)
    except Exception as e:
        log_suite_activity(logger, spec.name, "error", execution_time=time.time() - start, error=e)
        raise

    log_suite_activity(
        logger, spec.name, "finish",
        cases_run=report.cases_run,
        violations=len(report.violations),
        execution_time=time.time() - start,
    )
    if cache is not None and key is not None:
        cache.set(key, spec.name, to_jsonable(report))
    return report


def _report_from_payload(payload: Dict[str, Any]) -> Report:
    """JSON 化済みレポートの復元（値は JSON 表現のまま）"""
    return Report(
        name=payload["suite"],
        params=payload["params"],
        seed=payload["seed"],
        cases_run=payload["cases"],
        violations=payload["violations"],
        discrepancies=payload["discrepancies"],
        values=payload["values"],
        wall_budget_exceeded=payload["wall_budget_exceeded"],
    )


def make_spec(name: str, params: Optional[Dict[str, Any]] = None, seed: Optional[int] = None,
              cases: Optional[int] = None, budget: Optional[int] = None,
              jobs: Optional[int] = None) -> SuiteSpec:
    """未指定の値を設定ファイルの既定値で埋めた SuiteSpec"""
    return SuiteSpec(
        name=name,
        params=dict(params or {}),
        seed=settings.default_seed if seed is None else seed,
        cases=settings.default_cases if cases is None else cases,
        budget=settings.default_budget if budget is None else budget,
        jobs=settings.jobs if jobs is None else jobs,
    )


def report_bytes(report: Report) -> bytes:
    """決定性の比較用"""
    return canonical_dumps(report).encode("utf-8")
