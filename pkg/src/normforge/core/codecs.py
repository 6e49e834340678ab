"""
JSON コーデック

集合族・関数集合・部分関数族の JSON 形式と、機械出力の正準化を扱います。

- Family:   {"universe": N, "sets": [[0, 1], [2, 3]]}
- FnSet:    {"N": N, "functions": ["0110", ...]}（添字 0 が左端）
- FnFamily: {"N": N, "pfns": [{"0": 1, "3": 0}, ...]}

出力は常に同じ入力に対してバイト単位で同一です。有理数は "p/q" 文字列、
浮動小数点は {"type": "float", "value": x} として出力します。
"""

import dataclasses
import json
import logging
from fractions import Fraction
from typing import Any, Dict, Union

from .errors import CodecError
from .partial_functions import FnFamily, FnSet, PartialFn
from .report import Report
from .setcore import Family, SubsetMask, check_universe

logger = logging.getLogger(__name__)

FLOAT_TAG = "float"


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise CodecError(f"JSONの構文エラー: {e.msg}", position=f"line {e.lineno} column {e.colno}") from e


def _require(payload: Any, key: str) -> Any:
    if not isinstance(payload, dict):
        raise CodecError("JSONオブジェクトが必要です", position="$")
    if key not in payload:
        raise CodecError(f"キー '{key}' がありません", position="$")
    return payload[key]


def _as_int(value: Any, position: str) -> int:
    # bool は int のサブクラスなので除外
    if isinstance(value, bool) or not isinstance(value, int):
        raise CodecError(f"整数が必要です: {value!r}", position=position)
    return value


def _universe(value: Any, position: str) -> int:
    N = _as_int(value, position)
    try:
        return check_universe(N)
    except ValueError as e:
        raise CodecError(str(e), position=position) from e


def parse_subset(payload: Any, universe: int, position: str = "$") -> SubsetMask:
    """要素リスト（JSON 配列）を宇宙内の部分集合マスクに変換"""
    if isinstance(payload, str):
        payload = _load(payload)
    if not isinstance(payload, list):
        raise CodecError("要素の配列が必要です", position=position)
    mask = 0
    for j, raw in enumerate(payload):
        e = _as_int(raw, f"{position}[{j}]")
        if e < 0:
            raise CodecError(f"element {e} < 0", position=f"{position}[{j}]")
        if e >= universe:
            raise CodecError(f"element {e} ≥ universe", position=f"{position}[{j}]")
        mask |= 1 << e
    return mask


def parse_family(text: str) -> Family:
    payload = _load(text)
    N = _universe(_require(payload, "universe"), "$.universe")
    sets = _require(payload, "sets")
    if not isinstance(sets, list):
        raise CodecError("'sets' は配列です", position="$.sets")
    members = tuple(parse_subset(s, N, f"$.sets[{i}]") for i, s in enumerate(sets))
    return Family(N, members)


def family_payload(A: Family) -> Dict[str, Any]:
    return {"universe": A.universe, "sets": A.as_lists()}


def emit_family(A: Family) -> str:
    return _dumps_ordered(family_payload(A))


def codec_family(direction: str, payload: Union[str, Family]) -> Union[Family, str]:
    """direction が "parse" なら JSON → Family、"emit" なら Family → 正準 JSON"""
    if direction == "parse":
        if not isinstance(payload, str):
            raise CodecError("parse にはJSON文字列を渡してください")
        return parse_family(payload)
    if direction == "emit":
        if not isinstance(payload, Family):
            raise CodecError("emit には Family を渡してください")
        return emit_family(payload)
    raise CodecError(f"未知の方向です: {direction}")


def parse_fnset(text: str) -> FnSet:
    payload = _load(text)
    N = _universe(_require(payload, "N"), "$.N")
    functions = _require(payload, "functions")
    if not isinstance(functions, list):
        raise CodecError("'functions' は配列です", position="$.functions")
    masks = []
    for i, f in enumerate(functions):
        if not isinstance(f, str) or len(f) != N or set(f) - {"0", "1"}:
            raise CodecError(f"長さ {N} の 0/1 文字列が必要です: {f!r}", position=f"$.functions[{i}]")
        masks.append(sum(1 << j for j, ch in enumerate(f) if ch == "1"))
    return FnSet(N, tuple(masks))


def fnset_payload(A: FnSet) -> Dict[str, Any]:
    return {"N": A.universe, "functions": A.as_strings()}


def emit_fnset(A: FnSet) -> str:
    return _dumps_ordered(fnset_payload(A))


def _parse_pfn(raw: Any, N: int, position: str) -> PartialFn:
    if not isinstance(raw, dict):
        raise CodecError("部分関数はオブジェクトです", position=position)
    domain = ones = 0
    for key, value in raw.items():
        try:
            p = int(key)
        except ValueError as e:
            raise CodecError(f"点は整数です: {key!r}", position=position) from e
        if p < 0 or p >= N:
            raise CodecError(f"element {p} ≥ universe", position=f"{position}.{key}")
        if value not in (0, 1) or isinstance(value, bool):
            raise CodecError(f"値は 0 か 1 です: {value!r}", position=f"{position}.{key}")
        domain |= 1 << p
        ones |= value << p
    return PartialFn(domain, ones)


def parse_fnfamily(text: str) -> FnFamily:
    payload = _load(text)
    N = _universe(_require(payload, "N"), "$.N")
    pfns = _require(payload, "pfns")
    if not isinstance(pfns, list):
        raise CodecError("'pfns' は配列です", position="$.pfns")
    return FnFamily(N, tuple(_parse_pfn(raw, N, f"$.pfns[{i}]") for i, raw in enumerate(pfns)))


def pfn_payload(sigma: PartialFn) -> Dict[str, int]:
    return {str(p): v for p, v in sigma.as_mapping().items()}


def fnfamily_payload(family: FnFamily) -> Dict[str, Any]:
    return {"N": family.universe, "pfns": [pfn_payload(s) for s in family.members]}


def emit_fnfamily(family: FnFamily) -> str:
    return _dumps_ordered(fnfamily_payload(family))


def render_ratio(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def report_payload(report: Report) -> Dict[str, Any]:
    return {
        "suite": report.name,
        "params": report.params,
        "seed": report.seed,
        "cases": report.cases_run,
        "violations": report.violations,
        "discrepancies": report.discrepancies,
        "values": report.values,
        "wall_budget_exceeded": report.wall_budget_exceeded,
    }


def to_jsonable(value: Any) -> Any:
    """計算結果を JSON で表せる値に変換"""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return render_ratio(value)
    if isinstance(value, float):
        return {"type": FLOAT_TAG, "value": value}
    if isinstance(value, Report):
        return to_jsonable(report_payload(value))
    if isinstance(value, Family):
        return family_payload(value)
    if isinstance(value, FnSet):
        return fnset_payload(value)
    if isinstance(value, FnFamily):
        return fnfamily_payload(value)
    if isinstance(value, PartialFn):
        return pfn_payload(value)
    if isinstance(value, dict):
        if value.keys() == {"type", "value"} and value["type"] == FLOAT_TAG:
            return value
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return [to_jsonable(v) for v in sorted(value)]
    if dataclasses.is_dataclass(value):
        return to_jsonable(dataclasses.asdict(value))
    raise CodecError(f"JSONに変換できない値です: {type(value).__name__}")


def canonical_dumps(value: Any) -> str:
    """キーを整列した正準 JSON（末尾改行付き）"""
    return json.dumps(to_jsonable(value), sort_keys=True, ensure_ascii=False, separators=(",", ":")) + "\n"


def _dumps_ordered(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":")) + "\n"

