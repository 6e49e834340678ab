"""
検証スイートの登録簿

各スイートはモジュールの不変条件一つに対応します。チェック関数は
モジュールのトップレベルに置き、ワーカープロセスからも名前で引けるようにします。
"""

import importlib
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ..core.errors import UnknownSuiteError
from ..core.report import Report
from .generators import random_cases

logger = logging.getLogger(__name__)

CaseBuilder = Callable[[Dict[str, Any], int], List[Any]]
CaseCheck = Callable[[Any, Dict[str, Any], int], Report]
Summarizer = Callable[[List[Report], Dict[str, Any]], Dict[str, Any]]

# 不変条件を持つモジュール（登録簿テストで網羅性を確認）
MODULES = (
    "combinatorics",
    "setcore",
    "norm-exclusion",
    "norm-subset",
    "norm-coloring",
    "norm-hall",
    "bridges",
)


@dataclass(frozen=True)
class SuiteDef:
    """登録済みスイート"""
    name: str
    module: str
    invariant: str
    check: CaseCheck
    cases: CaseBuilder
    defaults: Dict[str, Any] = field(default_factory=dict)
    # True なら不変条件一覧の外の補助スイート（数値例・不一致の再現など）
    supplementary: bool = False
    summarize: Optional[Summarizer] = None
    # 別名（定理番号による呼び名）。get_suite で正式名に解決される
    aliases: Tuple[str, ...] = ()
    # 不一致 ID ごとに Report に残す具体例の数（件数は values に全数を記録）
    discrepancy_limit: int = 20


_SUITES: Dict[str, SuiteDef] = {}
_ALIASES: Dict[str, str] = {}
_loaded = False


def suite(
    name: str,
    module: str,
    invariant: str,
    cases: Optional[CaseBuilder] = None,
    defaults: Optional[Dict[str, Any]] = None,
    supplementary: bool = False,
    summarize: Optional[Summarizer] = None,
    aliases: Sequence[str] = (),
) -> Callable[[CaseCheck], CaseCheck]:
    """チェック関数をスイートとして登録するデコレーター"""
    if module not in MODULES:
        raise ValueError(f"未知のモジュールです: {module}")

    def decorator(check: CaseCheck) -> CaseCheck:
        for taken in (name, *aliases):
            if taken in _SUITES or taken in _ALIASES:
                raise ValueError(f"スイート名が重複しています: {taken}")
        _SUITES[name] = SuiteDef(
            name=name,
            module=module,
            invariant=invariant,
            check=check,
            cases=cases or (lambda params, count: random_cases(count)),
            defaults=dict(defaults or {}),
            supplementary=supplementary,
            summarize=summarize,
            aliases=tuple(aliases),
        )
        for alias in aliases:
            _ALIASES[alias] = name
        return check

    return decorator


def load_builtin_suites() -> None:
    global _loaded
    if not _loaded:
        importlib.import_module(f"{__package__}.suites")
        _loaded = True
        logger.debug(f"スイート登録完了: {len(_SUITES)}件")


def get_suite(name: str) -> SuiteDef:
    load_builtin_suites()
    try:
        return _SUITES[_ALIASES.get(name, name)]
    except KeyError:
        raise UnknownSuiteError(f"未登録のスイートです: {name}") from None


def list_suites() -> List[SuiteDef]:
    load_builtin_suites()
    return [_SUITES[name] for name in sorted(_SUITES)]
