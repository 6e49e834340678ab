"""
Utils Module - ユーティリティ機能

ログ設定とレポートキャッシュを提供します。
"""

from .log_config import setup_logging, get_logger, log_suite_activity
from .cache_manager import ReportCache, spec_digest

__all__ = [
    "setup_logging",
    "get_logger",
    "log_suite_activity",
    "ReportCache",
    "spec_digest",
]
