"""
テストパッケージ

normforge（集合ノルムの厳密計算と性質検証）のテストスイートです。
"""
