"""
例外定義

計算カーネルと検証エンジンが送出する例外の階層です。
CLIは例外の種類から終了コードを決定します。
"""

from typing import Optional


class NormforgeError(Exception):
    """全例外の基底クラス"""


class DomainError(NormforgeError, ValueError):
    """前提条件違反（定義域外の入力）"""


class CodecError(DomainError):
    """JSON入力の解析エラー（位置情報付き）"""

    def __init__(self, message: str, position: Optional[str] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)


class BudgetExceededError(NormforgeError):
    """列挙・探索の予算超過"""

    def __init__(self, message: str, required: Optional[int] = None, limit: Optional[int] = None):
        self.required = required
        self.limit = limit
        if required is not None and limit is not None:
            message = f"{message}: required={required}, limit={limit}"
        super().__init__(message)


class NumericRangeError(NormforgeError, ArithmeticError):
    """浮動小数点の表現範囲外"""


class UnknownSuiteError(NormforgeError, KeyError):
    """未登録の検証スイート名"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown suite"


def check_budget(required: int, limit: int, what: str) -> None:
    """予算チェック（超過時は BudgetExceededError）"""
    if required > limit:
        raise BudgetExceededError(f"{what} の探索予算を超過しました", required=required, limit=limit)
