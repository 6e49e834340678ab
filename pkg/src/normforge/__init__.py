"""
normforge - 集合ノルムの厳密計算と性質検証

計数・除外・部分集合・グラフ彩色・Hall 型の五つのノルムを有理数と整数で
厳密に計算し、各ノルムの性質を名前付きスイートで検証します。

Version: 0.3.0
"""

__version__ = "0.3.0"
__author__ = "normforge team"

# 主要コンポーネントの公開
from .core import (
    FnSet,
    Family,
    Report,
    counting_norm,
    hall_norm4,
    norm1,
    norm2,
    norm3,
)
from .verification import SuiteSpec, run_suite

__all__ = [
    "Family",
    "FnSet",
    "Report",
    "counting_norm",
    "norm1",
    "norm2",
    "norm3",
    "hall_norm4",
    "SuiteSpec",
    "run_suite",
]
