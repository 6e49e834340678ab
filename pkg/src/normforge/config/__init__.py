"""
設定モジュール

アプリケーションの設定管理機能を提供します。
"""

from .settings import Settings, settings
from .constants import APP_CONSTANTS, DiscrepancyCatalog, discrepancy_catalog

__all__ = [
    "Settings",
    "settings",
    "APP_CONSTANTS",
    "DiscrepancyCatalog",
    "discrepancy_catalog",
]
