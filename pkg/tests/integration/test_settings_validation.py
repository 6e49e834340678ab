"""
設定管理の統合テスト

settings.ini の読み込み、環境変数による上書き、定数定義を確認します。
"""

import sys
from pathlib import Path

import pytest

# プロジェクトの src を追加
sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

from normforge.config.constants import APP_CONSTANTS
from normforge.config.settings import Settings, settings


def test_settings_file_exists():
    """設定ファイルの存在確認"""
    config_path = Path(__file__).parent.parent.parent / "src" / "normforge" / "config" / "settings.ini"
    assert config_path.exists(), f"設定ファイルが見つかりません: {config_path}"
    print(f"✅ 設定ファイル確認: {config_path}")


def test_budget_configuration(monkeypatch):
    """予算設定の既定値と検証"""
    monkeypatch.delenv("NORMFORGE_BUDGET", raising=False)
    assert settings.default_budget == 100000
    assert settings.selection_product_limit == 200000
    assert settings.exhaustive_axiom_limit == 12
    assert settings.validate_budget_config()


def test_budget_environment_override(monkeypatch):
    monkeypatch.setenv("NORMFORGE_BUDGET", "250")
    assert Settings().default_budget == 250
    monkeypatch.setenv("NORMFORGE_BUDGET", "many")
    with pytest.raises(ValueError):
        Settings().default_budget


def test_log_level_override(monkeypatch):
    monkeypatch.delenv("NORMFORGE_LOG_LEVEL", raising=False)
    assert settings.log_level == "WARNING"
    monkeypatch.setenv("NORMFORGE_LOG_LEVEL", "DEBUG")
    assert settings.log_level == "DEBUG"


def test_verify_and_cache_configuration():
    assert settings.default_seed == 1
    assert settings.default_cases == 1000
    assert settings.jobs >= 1
    assert settings.cache_enabled is False
    assert settings.cache_duration_hours > 0


def test_app_constants():
    """アプリケーション定数"""
    assert APP_CONSTANTS.APP_NAME == "normforge"
    assert APP_CONSTANTS.OUTPUT.DEFAULT_FORMAT in APP_CONSTANTS.OUTPUT.FORMATS
    codes = APP_CONSTANTS.EXIT_CODES
    assert (codes.OK, codes.VIOLATION, codes.USAGE, codes.BUDGET) == (0, 1, 2, 3)
    print(f"✅ {APP_CONSTANTS.APP_NAME} {APP_CONSTANTS.APP_VERSION}")
