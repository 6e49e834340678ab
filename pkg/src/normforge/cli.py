"""
normforge コマンドラインインターフェース

ノルムの計算（証拠付き）、検証スイートの実行、パラメータ走査、
不一致レポートの出力を提供します。

終了コード:
    0 成功 / 1 違反または反例の発見 / 2 使い方・入力のエラー / 3 予算超過
"""

import json
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

import click

from .config.constants import APP_CONSTANTS, discrepancy_catalog
from .config.settings import settings
from .core.bridges import pplus, pplus_bounds_check, pstar_claim_scan, subset_bridge_check
from .core.codecs import (
    canonical_dumps,
    fnfamily_payload,
    fnset_payload,
    parse_family,
    parse_fnfamily,
    parse_fnset,
    parse_subset,
)
from .core.coloring import kgon_analysis, norm3, norm3_by_oracle
from .core.errors import BudgetExceededError, CodecError, NormforgeError, UnknownSuiteError
from .core.exclusion import ExclusionParams, norm1
from .core.hall import delta, dset, hall_norm4_witness, hall_norm_HN, hall_size_lower_bound, hn
from .core.report import Report
from .core.setcore import counting_norm
from .core.subset_norm import SubsetNormParams, baju_check, norm2
from .utils.cache_manager import ReportCache
from .utils.log_config import setup_logging
from .verification import (
    ReportFormatter,
    discrepancy_report,
    exhaustive_extremal,
    list_suites,
    make_spec,
    rows_to_csv,
    run_suite,
)

logger = logging.getLogger(__name__)

EXIT = APP_CONSTANTS.EXIT_CODES

KGON_COLUMNS = ["N", "k", "exact", "formula", "stated", "match"]
BAJU_COLUMNS = ["n", "G", "k", "norm", "size", "x_size", "product", "threshold", "ratio", "refuted"]
HALL_SIZE_COLUMNS = ["N", "k", "min_size", "bound"]


@dataclass(frozen=True)
class CliOptions:
    """全サブコマンド共通のオプション"""
    output_format: str
    jobs: Optional[int]
    seed: Optional[int]
    budget: int


class NormforgeGroup(click.Group):
    """例外を終了コードに変換するグループ"""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except BudgetExceededError as e:
            click.echo(f"{APP_CONSTANTS.ERROR_MESSAGES.BUDGET_ERROR}: {e}", err=True)
            ctx.exit(EXIT.BUDGET)
        except UnknownSuiteError as e:
            click.echo(f"{APP_CONSTANTS.ERROR_MESSAGES.UNKNOWN_SUITE}: {e}", err=True)
            ctx.exit(EXIT.USAGE)
        except CodecError as e:
            click.echo(f"{APP_CONSTANTS.ERROR_MESSAGES.PARSE_ERROR}: {e}", err=True)
            ctx.exit(EXIT.USAGE)
        except NormforgeError as e:
            click.echo(f"{APP_CONSTANTS.ERROR_MESSAGES.DOMAIN_ERROR}: {e}", err=True)
            ctx.exit(EXIT.USAGE)


def _options(ctx: click.Context) -> CliOptions:
    return ctx.find_root().obj


def _emit(ctx: click.Context, payload: Dict[str, Any]) -> None:
    """単一結果の出力（CSV 指定時は一行の表）"""
    if _options(ctx).output_format == "csv":
        click.echo(rows_to_csv([payload], list(payload)), nl=False)
    else:
        click.echo(canonical_dumps(payload), nl=False)


def _emit_rows(ctx: click.Context, rows: List[Dict[str, Any]], columns: Sequence[str]) -> None:
    if _options(ctx).output_format == "csv":
        click.echo(rows_to_csv(rows, columns), nl=False)
    else:
        click.echo(canonical_dumps([{c: row.get(c) for c in columns} for row in rows]), nl=False)


def _emit_reports(ctx: click.Context, reports: Sequence[Report]) -> None:
    click.echo(ReportFormatter().format(reports, _options(ctx).output_format), nl=False)


def _report_exit(ctx: click.Context, reports: Sequence[Report]) -> None:
    """違反があれば 1、違反なしで予算超過なら 3"""
    if any(report.violations for report in reports):
        ctx.exit(EXIT.VIOLATION)
    if any(report.wall_budget_exceeded for report in reports):
        ctx.exit(EXIT.BUDGET)


def _parse_param(raw: str) -> Dict[str, Any]:
    """key=value（値は JSON として解釈し、失敗すれば文字列）"""
    if "=" not in raw:
        raise click.BadParameter(f"key=value の形式で指定してください: {raw}", param_hint="--param")
    key, text = raw.split("=", 1)
    try:
        value = json.loads(text)
    except json.JSONDecodeError:
        value = text
    return {key.strip(): value}


json_file = click.File("r", encoding="utf-8")


@click.group(cls=NormforgeGroup)
@click.option("--format", "output_format", type=click.Choice(APP_CONSTANTS.OUTPUT.FORMATS),
              default=APP_CONSTANTS.OUTPUT.DEFAULT_FORMAT, help="出力形式")
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="ワーカー数（結果は変わりません）")
@click.option("--seed", type=click.IntRange(min=0, max=2 ** 64 - 1), default=None, help="乱数シード")
@click.option("--budget", type=click.IntRange(min=0), default=None,
              help="ケース数の予算（既定は NORMFORGE_BUDGET または settings.ini）")
@click.version_option(version=APP_CONSTANTS.APP_VERSION, prog_name=APP_CONSTANTS.APP_NAME)
@click.pass_context
def main(ctx: click.Context, output_format: str, jobs: Optional[int], seed: Optional[int],
         budget: Optional[int]) -> None:
    """normforge: 集合ノルムの厳密計算と性質検証"""
    setup_logging(settings.log_level)
    if budget is None:
        try:
            budget = settings.default_budget
        except ValueError as e:
            raise click.UsageError(str(e)) from e
    ctx.obj = CliOptions(output_format=output_format, jobs=jobs, seed=seed, budget=budget)


# ---------------------------------------------------------------------------
# ノルムの計算
# ---------------------------------------------------------------------------

@main.command("norm0")
@click.option("--family", "family_file", type=json_file, required=True, help="集合族の JSON")
@click.pass_context
def norm0_command(ctx, family_file):
    """計数ノルム |A|"""
    A = parse_family(family_file.read())
    _emit(ctx, {"norm": counting_norm(A)})


@main.command("norm1")
@click.option("--F", "F", type=int, required=True)
@click.option("--G", "G", type=int, required=True)
@click.option("--set", "subset", required=True, help='部分集合の JSON 配列（例: "[0, 2]"）')
@click.pass_context
def norm1_command(ctx, F, G, subset):
    """除外ノルム ‖A‖₁ = F/(|G∖A|+1)"""
    p = ExclusionParams(F, G)
    A = parse_subset(subset, G)
    _emit(ctx, {"norm": norm1(p, A)})


@main.command("norm2")
@click.option("--n", "n", type=int, required=True)
@click.option("--G", "G", type=int, required=True)
@click.option("--family", "family_file", type=json_file, required=True)
@click.option("--witness/--no-witness", default=True, help="証拠集合 x を出力（既定で出力）")
@click.pass_context
def norm2_command(ctx, n, G, family_file, witness):
    """部分集合ノルム ‖A‖₂"""
    value, certificate = norm2(SubsetNormParams(n, G), parse_family(family_file.read()))
    payload: Dict[str, Any] = {"norm": value}
    if witness:
        payload["witness"] = certificate.as_list()
    _emit(ctx, payload)


@main.command("norm3")
@click.option("--family", "family_file", type=json_file, required=True)
@click.option("--witness", is_flag=True, help="分割を出力")
@click.option("--oracle-check", is_flag=True, help="定義どおりの再帰オラクルと照合")
@click.pass_context
def norm3_command(ctx, family_file, witness, oracle_check):
    """グラフ彩色ノルム ‖A‖₃"""
    A = parse_family(family_file.read())
    value, certificate = norm3(A)
    payload: Dict[str, Any] = {"norm": value}
    if witness:
        payload["partition"] = certificate.partition.as_lists()
    if oracle_check:
        oracle = norm3_by_oracle(A)
        payload["oracle"] = oracle
        payload["oracle_agrees"] = oracle == value
    _emit(ctx, payload)
    if oracle_check and not payload["oracle_agrees"]:
        ctx.exit(EXIT.VIOLATION)


@main.command("norm4")
@click.option("--functions", "functions_file", type=json_file, required=True, help="全関数の集合の JSON")
@click.option("--witness", is_flag=True, help="細分 δ* と k を出力")
@click.pass_context
def norm4_command(ctx, functions_file, witness):
    """Hall 型ノルム ‖A‖₄ = HN(Δ(A))"""
    value, certificate = hall_norm4_witness(parse_fnset(functions_file.read()))
    payload: Dict[str, Any] = {"norm": value}
    if witness:
        payload["witness"] = {"k": certificate.k, "refined": fnfamily_payload(certificate.refined)}
    _emit(ctx, payload)


# ---------------------------------------------------------------------------
# hall サブコマンド
# ---------------------------------------------------------------------------

@main.group("hall", cls=NormforgeGroup)
def hall_group():
    """部分関数族の hn / HN と Δ / D"""


@hall_group.command("hn")
@click.option("--pfns", "pfns_file", type=json_file, required=True, help="部分関数族の JSON")
@click.pass_context
def hall_hn_command(ctx, pfns_file):
    _emit(ctx, {"hn": hn(parse_fnfamily(pfns_file.read()))})


@hall_group.command("HN")
@click.option("--pfns", "pfns_file", type=json_file, required=True)
@click.option("--witness", is_flag=True)
@click.pass_context
def hall_HN_command(ctx, pfns_file, witness):
    value, certificate = hall_norm_HN(parse_fnfamily(pfns_file.read()))
    payload: Dict[str, Any] = {"HN": value}
    if witness:
        payload["witness"] = {"k": certificate.k, "refined": fnfamily_payload(certificate.refined)}
    _emit(ctx, payload)


@hall_group.command("delta")
@click.option("--functions", "functions_file", type=json_file, required=True)
@click.pass_context
def hall_delta_command(ctx, functions_file):
    """Δ(A)：A を避ける極小の部分関数"""
    _emit(ctx, fnfamily_payload(delta(parse_fnset(functions_file.read()))))


@hall_group.command("D")
@click.option("--pfns", "pfns_file", type=json_file, required=True)
@click.pass_context
def hall_D_command(ctx, pfns_file):
    """D(δ)：δ のどの元も拡張しない全関数"""
    _emit(ctx, fnset_payload(dset(parse_fnfamily(pfns_file.read()))))


# ---------------------------------------------------------------------------
# bridge サブコマンド
# ---------------------------------------------------------------------------

@main.group("bridge", cls=NormforgeGroup)
def bridge_group():
    """プロファイル写像によるノルム間の関係"""


@bridge_group.command("subset")
@click.option("--n", "n", type=int, required=True)
@click.option("--N", "N", type=int, required=True)
@click.option("--family", "family_file", type=json_file, required=True)
@click.pass_context
def bridge_subset_command(ctx, n, N, family_file):
    """‖P⁻¹[B]‖₄ ≤ ‖B‖₂ + 1 の確認"""
    report = subset_bridge_check(n, N, parse_family(family_file.read()))
    _emit_reports(ctx, [report])
    _report_exit(ctx, [report])


@bridge_group.command("pplus")
@click.option("--functions", "functions_file", type=json_file, required=True)
@click.pass_context
def bridge_pplus_command(ctx, functions_file):
    """P⁺(A) と ‖A‖₄ の関係"""
    A = parse_fnset(functions_file.read())
    report = pplus_bounds_check(A)
    report.values["pplus"] = pplus(A).as_lists()
    _emit_reports(ctx, [report])
    _report_exit(ctx, [report])


@bridge_group.command("pstar-scan")
@click.option("--N", "N", type=int, required=True)
@click.option("--n", "n", type=int, default=None, help="H = N/2ⁿ（省略時は割り切る n すべて）")
@click.option("--budget", "scan_budget", type=click.IntRange(min=0), default=None,
              help="走査する族の数（省略時は共通の --budget）")
@click.pass_context
def bridge_pstar_scan_command(ctx, N, n, scan_budget):
    """P* の命題の反例探索（反例発見で終了コード 1）"""
    budget = _options(ctx).budget if scan_budget is None else scan_budget
    report = pstar_claim_scan(N, budget, n)
    _emit_reports(ctx, [report])
    if report.discrepancies:
        ctx.exit(EXIT.VIOLATION)
    _report_exit(ctx, [report])


# ---------------------------------------------------------------------------
# 検証・走査・レポート
# ---------------------------------------------------------------------------

@main.command("verify")
@click.option("--suite", "suite_names", multiple=True, required=True, help="スイート名（複数指定可）")
@click.option("--N", "N", type=int, default=None)
@click.option("--n", "n", type=int, default=None)
@click.option("--G", "G", type=int, default=None)
@click.option("--F", "F", type=int, default=None)
@click.option("--k", "k", type=int, default=None)
@click.option("--param", "extra", multiple=True, help="追加パラメータ key=value")
@click.option("--cases", type=click.IntRange(min=0), default=None, help="乱数ケース数")
@click.option("--cache/--no-cache", "use_cache", default=None, help="結果キャッシュを使う")
@click.option("--seed", "suite_seed", type=click.IntRange(min=0, max=2 ** 64 - 1), default=None,
              help="乱数シード（共通の --seed より優先）")
@click.option("--budget", "suite_budget", type=click.IntRange(min=0), default=None,
              help="ケース数の予算（共通の --budget より優先）")
@click.pass_context
def verify_command(ctx, suite_names, N, n, G, F, k, extra, cases, use_cache, suite_seed, suite_budget):
    """検証スイートを実行"""
    options = _options(ctx)
    seed = options.seed if suite_seed is None else suite_seed
    budget = options.budget if suite_budget is None else suite_budget
    params: Dict[str, Any] = {key: value for key, value in (("N", N), ("n", n), ("G", G), ("F", F), ("k", k))
                              if value is not None}
    for raw in extra:
        params.update(_parse_param(raw))

    enabled = settings.cache_enabled if use_cache is None else use_cache
    cache = ReportCache() if enabled else None
    reports = []
    for name in suite_names:
        spec = make_spec(name, params, seed=seed, cases=cases, budget=budget, jobs=options.jobs)
        reports.append(run_suite(spec, cache=cache))
    _emit_reports(ctx, reports)
    _report_exit(ctx, reports)


@main.command("scan")
@click.argument("target", type=click.Choice(["kgon", "baju", "hall-size"]))
@click.option("--max-N", "max_N", type=int, default=None, help="走査する宇宙サイズの上限")
@click.option("--max-G", "max_G", type=int, default=8, help="baju の G の上限")
@click.pass_context
def scan_command(ctx, target, max_N, max_G):
    """パラメータ格子を走査して CSV / JSON で出力"""
    if target == "kgon":
        top = max_N or 10
        rows = [{"N": N, "k": k, **kgon_analysis(N, k).values}
                for N in range(2, top + 1) for k in range(2, N + 1)]
        _emit_rows(ctx, rows, KGON_COLUMNS)
    elif target == "baju":
        rows = []
        for G in range(2, max_G + 1):
            for n in range(1, G.bit_length()):
                if G % (1 << n):
                    continue
                p = SubsetNormParams(n, G)
                for k in range(2, p.H + 1):
                    rows.append({"n": n, "G": G, "k": k, **baju_check(p, k).values})
        _emit_rows(ctx, rows, BAJU_COLUMNS)
    else:
        top = max_N or 3
        rows = []
        for N in range(1, top + 1):
            for k in range(1, N + 1):
                size, _ = exhaustive_extremal(4, {"N": N}, "min_size_at_norm", k + 1)
                rows.append({"N": N, "k": k, "min_size": size, "bound": hall_size_lower_bound(N, k)})
        _emit_rows(ctx, rows, HALL_SIZE_COLUMNS)


@main.command("refute-baju")
@click.option("--n", "n", type=int, required=True)
@click.option("--G", "G", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.pass_context
def refute_baju_command(ctx, n, G, k):
    """極値族による反例の再現（再現できれば終了コード 1）"""
    report = baju_check(SubsetNormParams(n, G), k)
    _emit_reports(ctx, [report])
    if report.values["refuted"] or report.violations:
        ctx.exit(EXIT.VIOLATION)


@main.command("kgon")
@click.option("--N", "N", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.pass_context
def kgon_command(ctx, N, k):
    """全 k 角形の族の分割数と二つの式の比較"""
    report = kgon_analysis(N, k)
    _emit_reports(ctx, [report])
    _report_exit(ctx, [report])


@main.command("report")
@click.option("--run", "run_suites", is_flag=True, help="カタログに紐づくスイートを実行して具体例を付ける")
@click.option("--cases", type=click.IntRange(min=0), default=None)
@click.pass_context
def report_command(ctx, run_suites, cases):
    """既知の不一致の一覧（機械可読）"""
    options = _options(ctx)
    reports = []
    if run_suites:
        names = sorted({entry["suite"] for entry in discrepancy_catalog.entries if entry.get("suite")})
        for name in names:
            spec = make_spec(name, seed=options.seed, cases=cases, budget=options.budget, jobs=options.jobs)
            reports.append(run_suite(spec))
    summary = discrepancy_report(reports)
    if options.output_format == "csv":
        rows = [{"id": entry["id"], "suite": entry.get("suite"), "occurrences": entry["occurrences"],
                 "replay": entry.get("replay")} for entry in summary.discrepancies]
        click.echo(rows_to_csv(rows, ["id", "suite", "occurrences", "replay"]), nl=False)
    else:
        click.echo(canonical_dumps(summary), nl=False)


@main.command("suites")
@click.option("--all", "include_all", is_flag=True, help="補助スイートも含める")
@click.pass_context
def suites_command(ctx, include_all):
    """登録済みスイートの一覧"""
    rows = [
        {"name": d.name, "module": d.module, "invariant": d.invariant, "supplementary": d.supplementary}
        for d in list_suites()
        if include_all or not d.supplementary
    ]
    _emit_rows(ctx, rows, ["name", "module", "invariant", "supplementary"])


if __name__ == "__main__":
    main()
