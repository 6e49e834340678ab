"""
アプリケーション定数定義

アプリケーション全体で使用する定数を集約管理します。
不一致カタログはYAMLファイルから動的読み込みします。
"""

import yaml
import logging
from pathlib import Path
from typing import Dict, Any, List, Optional

logger = logging.getLogger(__name__)


class DiscrepancyCatalog:
    """不一致カタログ管理クラス - YAMLファイルから既知の不一致項目を読み込み"""

    def __init__(self, catalog_file: Optional[Path] = None):
        self._catalog_file = catalog_file or Path(__file__).parent / "discrepancies.yaml"
        self._entries: List[Dict[str, Any]] = []
        self._load_catalog()

    def _load_catalog(self):
        """カタログYAMLファイルを読み込み"""
        try:
            if self._catalog_file.exists():
                with open(self._catalog_file, 'r', encoding='utf-8') as f:
                    data = yaml.safe_load(f) or {}
                self._entries = list(data.get('discrepancies', []))
                logger.info(f"不一致カタログを読み込みました: {self._catalog_file}")
            else:
                logger.warning(f"カタログファイルが見つかりません: {self._catalog_file}")
                self._use_fallback_catalog()

        except Exception as e:
            logger.error(f"カタログ読み込みエラー: {e}")
            self._use_fallback_catalog()

    def _use_fallback_catalog(self):
        """フォールバック用のカタログ（最小限）"""
        self._entries = [
            {
                'id': 'norm4_singleton_axiom',
                'topic': 'hall norm / norm axioms',
                'claim': '||.||_4 is a norm on the set of total functions',
                'finding': 'singleton bound fails: ||{f}||_4 = 2 > 1',
                'replay': 'normforge verify --suite hall.axiom_report --N 3',
                'suite': 'hall.axiom_report',
            }
        ]

    @property
    def entries(self) -> List[Dict[str, Any]]:
        """カタログ項目のコピーを取得"""
        return [dict(entry) for entry in self._entries]

    def get_entry(self, entry_id: str) -> Optional[Dict[str, Any]]:
        """指定IDの項目を取得"""
        for entry in self._entries:
            if entry.get('id') == entry_id:
                return dict(entry)
        return None

    def ids_for_suite(self, suite_name: str) -> List[str]:
        """スイート名に紐づく項目IDを取得"""
        return [entry['id'] for entry in self._entries if entry.get('suite') == suite_name]

    def reload(self):
        """カタログを再読み込み（開発・テスト用）"""
        self._load_catalog()


# グローバル不一致カタログ
discrepancy_catalog = DiscrepancyCatalog()


class APP_CONSTANTS:
    """アプリケーション定数クラス"""

    # アプリケーション情報
    APP_NAME = "normforge"
    APP_VERSION = "0.3.0"

    # ログ関連
    class LOGGING:
        FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

        # ログファイル設定
        LOG_FILE = "logs/normforge.log"
        MAX_FILE_SIZE = 10 * 1024 * 1024  # 10MB
        BACKUP_COUNT = 5

    # 終了コード
    class EXIT_CODES:
        OK = 0
        VIOLATION = 1
        USAGE = 2
        BUDGET = 3

    # 出力関連
    class OUTPUT:
        FORMATS = ("json", "csv")
        DEFAULT_FORMAT = "json"
        FLOAT_TAG = "float"

    # エラーメッセージ
    class ERROR_MESSAGES:
        DOMAIN_ERROR = "入力が定義域の条件を満たしていません"
        BUDGET_ERROR = "探索予算を超過しました"
        PARSE_ERROR = "入力の解析に失敗しました"
        UNKNOWN_SUITE = "未登録の検証スイートです"
