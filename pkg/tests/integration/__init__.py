"""
結合テストパッケージ

設定・登録簿・検証エンジン・不一致レポートなど、複数モジュールの結合テストを格納します。
"""
