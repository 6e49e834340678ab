"""
アプリケーション設定管理

settings.ini と環境変数（.env / normforge.env）からの設定読み込みを統一的に管理します。
"""

import os
import configparser
from pathlib import Path
from dotenv import load_dotenv


class Settings:
    """設定管理クラス"""

    def __init__(self):
        self._config = configparser.ConfigParser()
        self._load_config()
        self._load_env()

    def _load_config(self):
        """設定ファイル（非機密情報）を読み込み"""
        config_dir = Path(__file__).parent
        ini_file = config_dir / "settings.ini"

        if ini_file.exists():
            self._config.read(ini_file, encoding='utf-8')
        else:
            raise FileNotFoundError(f"設定ファイルが見つかりません: {ini_file}")

    def _load_env(self):
        """環境変数の上書きファイルを読み込み（既存の環境変数は優先）"""
        config_dir = Path(__file__).parent
        env_file = config_dir / "normforge.env"

        if env_file.exists():
            load_dotenv(env_file)
        load_dotenv(Path.cwd() / ".env")

    # アプリ設定
    @property
    def log_level(self) -> str:
        """ログレベル（NORMFORGE_LOG_LEVEL が最優先）"""
        return os.getenv('NORMFORGE_LOG_LEVEL') or self._config.get('app', 'log_level', fallback='WARNING')

    # 予算設定
    @property
    def default_budget(self) -> int:
        """既定の探索予算（NORMFORGE_BUDGET が最優先）"""
        env_value = os.getenv('NORMFORGE_BUDGET', '').strip()
        if env_value:
            try:
                return int(env_value)
            except ValueError:
                raise ValueError(f"NORMFORGE_BUDGET が整数ではありません: {env_value!r}")
        return self._config.getint('budget', 'default_budget', fallback=100000)

    @property
    def exhaustive_axiom_limit(self) -> int:
        return self._config.getint('budget', 'exhaustive_axiom_limit', fallback=12)

    @property
    def family_enumeration_limit(self) -> int:
        return self._config.getint('budget', 'family_enumeration_limit', fallback=1 << 20)

    @property
    def universe_x_limit(self) -> int:
        return self._config.getint('budget', 'universe_x_limit', fallback=1_000_000)

    @property
    def selection_product_limit(self) -> int:
        return self._config.getint('budget', 'selection_product_limit', fallback=200_000)

    # 検証設定
    @property
    def default_seed(self) -> int:
        return self._config.getint('verify', 'default_seed', fallback=1)

    @property
    def default_cases(self) -> int:
        return self._config.getint('verify', 'default_cases', fallback=1000)

    @property
    def jobs(self) -> int:
        return self._config.getint('verify', 'jobs', fallback=1)

    # キャッシュ設定
    @property
    def cache_enabled(self) -> bool:
        return self._config.getboolean('cache', 'enabled', fallback=False)

    @property
    def cache_db_path(self) -> str:
        return self._config.get('cache', 'db_path', fallback='cache/report_cache.db')

    @property
    def cache_duration_hours(self) -> float:
        return self._config.getfloat('cache', 'duration_hours', fallback=168)

    def validate_budget_config(self) -> bool:
        """予算設定の検証"""
        limits = [
            self.default_budget,
            self.selection_product_limit,
            self.exhaustive_axiom_limit,
            self.family_enumeration_limit,
            self.universe_x_limit,
        ]
        return all(value > 0 for value in limits)


# グローバル設定インスタンス
settings = Settings()
