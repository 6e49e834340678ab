#!/usr/bin/env python3
"""
normforge テスト実行スクリプト

Usage: python scripts/run_tests.py [--level quick|unit|integration|e2e|all] [--coverage]
"""

import argparse
import subprocess
import sys
import time
from pathlib import Path

# プロジェクトルート設定
PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT / "src"))

LEVELS = {
    "unit": ("ユニットテスト", "tests/unit/", ["-v"]),
    "integration": ("統合テスト", "tests/integration/", ["-v", "--tb=short"]),
    "e2e": ("E2Eテスト", "tests/e2e/", ["-v", "--tb=line", "-s"]),
}


def run_command(command, description):
    """コマンド実行とログ出力"""
    print(f"\n{'='*60}")
    print(f"🚀 {description}")
    print(f"{'='*60}")
    print(f"実行コマンド: {' '.join(command)}")

    start_time = time.time()
    result = subprocess.run(command, cwd=PROJECT_ROOT, capture_output=True, text=True)
    execution_time = time.time() - start_time

    if result.stdout:
        print("📤 標準出力:")
        print(result.stdout)
    if result.stderr:
        print("⚠️ 標準エラー:")
        print(result.stderr)

    mark = "✅ 完了" if result.returncode == 0 else f"❌ 失敗 (終了コード: {result.returncode})"
    print(f"\n{mark} (実行時間: {execution_time:.2f}秒)")
    return result.returncode == 0


def check_dependencies():
    """依存関係チェック"""
    print("🔍 依存関係チェック中...")
    missing = []
    for package in ("pytest", "hypothesis", "click", "numpy", "pandas", "yaml", "dotenv"):
        try:
            __import__(package)
            print(f"✅ {package}: インストール済み")
        except ImportError:
            print(f"❌ {package}: 未インストール")
            missing.append(package)

    if missing:
        print(f"\n⚠️ 不足パッケージ: {', '.join(missing)}")
        print("pip install -e '.[dev]' でインストールしてください")
        return False
    return True


def run_level(level, with_coverage=False):
    description, path, flags = LEVELS[level]
    command = [sys.executable, "-m", "pytest", path, *flags]
    if with_coverage:
        command.extend(["--cov=src/normforge", "--cov-report=html:reports/coverage", "--cov-report=term-missing"])
    else:
        command.append("--no-cov")
    return run_command(command, description)


def run_quick_smoke_test():
    """クイック動作確認（三角形の ‖·‖₃ と不一致カタログ）"""
    print("\n🔥 クイック動作確認テスト")
    try:
        from normforge.core.coloring import norm3
        from normforge.core.setcore import Family
        from normforge.verification import discrepancy_report

        value, witness = norm3(Family.of(3, [[0, 1], [1, 2], [0, 2]]))
        assert value == 2, f"‖三角形‖₃ = {value}"
        print(f"✅ norm3(三角形) = {value}, 分割 {witness.partition.as_lists()}")

        entries = discrepancy_report().values["entries"]
        print(f"✅ 不一致カタログ: {entries}件")
        return True
    except Exception as e:
        print(f"❌ クイック動作確認テスト失敗: {e}")
        return False


def generate_test_report(results):
    """テスト結果レポート"""
    print("\n" + "="*80)
    print("📊 テスト実行結果レポート")
    print("="*80)

    passed = sum(1 for result in results.values() if result)
    print(f"📈 総合結果: {passed}/{len(results)} 通過")
    for name, result in results.items():
        print(f"  {'✅ PASS' if result else '❌ FAIL'} {name}")

    if passed < len(results):
        print("\n🔧 失敗したテストのログを確認してください")
        return False
    print("\n🎉 全テスト通過")
    return True


def main():
    parser = argparse.ArgumentParser(description="normforge テストランナー")
    parser.add_argument("--level", choices=["quick", "unit", "integration", "e2e", "all"], default="quick",
                        help="実行するテストレベル (デフォルト: quick)")
    parser.add_argument("--coverage", action="store_true", help="カバレッジレポート生成")
    parser.add_argument("--skip-deps", action="store_true", help="依存関係チェックをスキップ")
    args = parser.parse_args()

    print("🧮 normforge - テストランナー")
    print(f"📋 実行レベル: {args.level}")

    if not args.skip_deps and not check_dependencies():
        return 1

    results = {}
    try:
        if args.level in ("quick", "all"):
            results["クイック動作確認"] = run_quick_smoke_test()
        for level in LEVELS:
            if args.level in (level, "all"):
                results[LEVELS[level][0]] = run_level(level, args.coverage)
        return 0 if generate_test_report(results) else 1
    except KeyboardInterrupt:
        print("\n⚠️ ユーザーによりテスト実行が中断されました")
        return 130


if __name__ == "__main__":
    sys.exit(main())
