"""
レポートキャッシュ管理モジュール

検証スイートは同じ SuiteSpec に対して常に同じ結果を返すため、
SQLite に保存した結果をそのまま再利用できます。
キーは正準化した SuiteSpec の SHA-256 ダイジェストです。
"""

import hashlib
import json
import logging
import sqlite3
from contextlib import contextmanager
from datetime import datetime, timedelta
from pathlib import Path
from typing import Any, Dict, Optional

from ..config.settings import settings

logger = logging.getLogger(__name__)


def spec_digest(spec_payload: Dict[str, Any]) -> str:
    """SuiteSpec の正準 JSON から求めたキャッシュキー"""
    text = json.dumps(spec_payload, sort_keys=True, ensure_ascii=False, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


class ReportCache:
    """
    SQLiteベースの検証レポートキャッシュ

    保存するのは JSON 化済みのレポートです。期限切れの行は読み出し時に無視されます。
    """

    def __init__(self, db_path: Optional[str] = None, duration_hours: Optional[float] = None):
        """
        Args:
            db_path: SQLiteデータベースファイルのパス。Noneの場合は設定値を使用
            duration_hours: 有効期間（時間）。Noneの場合は設定値を使用
        """
        path = Path(db_path or settings.cache_db_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.db_path = str(path)
        self.cache_duration_hours = duration_hours if duration_hours is not None else settings.cache_duration_hours

        self._initialize_database()
        logger.debug(f"レポートキャッシュ初期化完了: {self.db_path}")

    def _initialize_database(self):
        with self._get_connection() as conn:
            conn.execute("""
                CREATE TABLE IF NOT EXISTS report_cache (
                    id INTEGER PRIMARY KEY AUTOINCREMENT,
                    cache_key TEXT UNIQUE NOT NULL,
                    suite TEXT NOT NULL,
                    data TEXT NOT NULL,
                    created_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP,
                    expires_at TIMESTAMP NOT NULL
                )
            """)
            conn.commit()

    @contextmanager
    def _get_connection(self):
        """SQLite接続のコンテキストマネージャー"""
        conn = sqlite3.connect(self.db_path)
        conn.row_factory = sqlite3.Row
        try:
            yield conn
        finally:
            conn.close()

    def get(self, cache_key: str) -> Optional[Dict[str, Any]]:
        """
        保存済みレポートを取得

        Returns:
            JSON 化済みレポート。期限切れまたは存在しない場合はNone
        """
        try:
            with self._get_connection() as conn:
                row = conn.execute("""
                    SELECT data FROM report_cache
                    WHERE cache_key = ? AND expires_at > ?
                """, (cache_key, datetime.now().isoformat())).fetchone()
        except sqlite3.Error as e:
            logger.error(f"キャッシュ取得エラー ({cache_key[:12]}): {e}")
            return None

        if row is None:
            logger.debug(f"キャッシュミス: {cache_key[:12]}")
            return None
        logger.debug(f"キャッシュヒット: {cache_key[:12]}")
        return json.loads(row["data"])

    def set(self, cache_key: str, suite: str, data: Dict[str, Any]) -> bool:
        """レポートを保存（同じキーは上書き）"""
        expires_at = datetime.now() + timedelta(hours=self.cache_duration_hours)
        try:
            with self._get_connection() as conn:
                conn.execute("""
                    INSERT OR REPLACE INTO report_cache (cache_key, suite, data, expires_at)
                    VALUES (?, ?, ?, ?)
                """, (cache_key, suite, json.dumps(data, sort_keys=True, ensure_ascii=False), expires_at.isoformat()))
                conn.commit()
        except sqlite3.Error as e:
            logger.error(f"キャッシュ保存エラー ({suite}): {e}")
            return False
        return True

    def clear_expired(self) -> int:
        """期限切れの行を削除し、削除件数を返す"""
        try:
            with self._get_connection() as conn:
                cursor = conn.execute(
                    "DELETE FROM report_cache WHERE expires_at <= ?", (datetime.now().isoformat(),)
                )
                conn.commit()
                return cursor.rowcount
        except sqlite3.Error as e:
            logger.error(f"期限切れキャッシュ削除エラー: {e}")
            return 0

    def clear_all(self) -> bool:
        try:
            with self._get_connection() as conn:
                conn.execute("DELETE FROM report_cache")
                conn.commit()
        except sqlite3.Error as e:
            logger.error(f"全キャッシュクリアエラー: {e}")
            return False
        logger.info("全キャッシュクリア完了")
        return True

    def get_cache_info(self) -> Dict[str, Any]:
        """キャッシュの統計情報"""
        with self._get_connection() as conn:
            total = conn.execute("SELECT COUNT(*) AS count FROM report_cache").fetchone()["count"]
            valid = conn.execute(
                "SELECT COUNT(*) AS count FROM report_cache WHERE expires_at > ?",
                (datetime.now().isoformat(),),
            ).fetchone()["count"]
        return {
            "total_records": total,
            "valid_records": valid,
            "expired_records": total - valid,
            "cache_duration_hours": self.cache_duration_hours,
            "database_path": self.db_path,
        }
