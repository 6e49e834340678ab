"""
ログ設定管理

アプリケーション全体のログ設定を統一的に管理します。
コンソール出力（標準エラー）とファイル出力の両方をサポートします。
標準出力は機械可読な結果専用のため、ログは書き込みません。
"""

import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Any, Dict, Optional

from ..config.constants import APP_CONSTANTS


def setup_logging(
    log_level: str = "WARNING",
    enable_file_logging: bool = False,
    log_file_path: Optional[str] = None,
) -> None:
    """
    ログ設定を初期化

    Args:
        log_level: ログレベル（DEBUG, INFO, WARNING, ERROR）
        enable_file_logging: ファイル出力を有効にするか
        log_file_path: ログファイルパス（Noneの場合は定数の既定値）
    """
    root_logger = logging.getLogger()
    root_logger.setLevel(getattr(logging, log_level.upper(), logging.WARNING))

    # 既存ハンドラーをクリア（再初期化対応）
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    formatter = logging.Formatter(
        APP_CONSTANTS.LOGGING.FORMAT,
        datefmt=APP_CONSTANTS.LOGGING.DATE_FORMAT,
    )

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    if enable_file_logging:
        log_path = Path(log_file_path or APP_CONSTANTS.LOGGING.LOG_FILE)
        log_path.parent.mkdir(parents=True, exist_ok=True)

        file_handler = logging.handlers.RotatingFileHandler(
            log_path,
            maxBytes=APP_CONSTANTS.LOGGING.MAX_FILE_SIZE,
            backupCount=APP_CONSTANTS.LOGGING.BACKUP_COUNT,
            encoding="utf-8",
        )
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)

    logging.getLogger(__name__).debug(f"ログ設定完了: level={log_level}, file={enable_file_logging}")


def get_logger(name: str) -> logging.Logger:
    """名前付きロガーを取得"""
    return logging.getLogger(name)


def log_suite_activity(
    logger: logging.Logger,
    suite: str,
    action: str,
    cases_run: Optional[int] = None,
    violations: Optional[int] = None,
    execution_time: Optional[float] = None,
    error: Optional[Exception] = None,
    details: Optional[Dict[str, Any]] = None,
) -> None:
    """
    検証スイートの実行状況を構造化ログとして出力

    Args:
        logger: 出力先ロガー
        suite: スイート名
        action: 実行段階（start, finish, cached など）
        cases_run: 実行ケース数
        violations: 違反件数
        execution_time: 実行時間（秒）
        error: 発生した例外
        details: 追加情報
    """
    message_parts = [f"suite={suite}", f"action={action}"]

    if cases_run is not None:
        message_parts.append(f"cases={cases_run}")
    if violations is not None:
        message_parts.append(f"violations={violations}")
    if execution_time is not None:
        message_parts.append(f"time={execution_time:.3f}s")
    if details:
        message_parts.extend(f"{key}={value}" for key, value in sorted(details.items()))

    extra = {"suite": suite, "action": action}

    if error is not None:
        message_parts.append(f"error={type(error).__name__}: {error}")
        logger.error(" | ".join(message_parts), extra=extra)
    elif violations:
        logger.warning(" | ".join(message_parts), extra=extra)
    else:
        logger.info(" | ".join(message_parts), extra=extra)
