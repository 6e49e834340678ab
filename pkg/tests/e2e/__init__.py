"""
E2Eテストパッケージ

normforge コマンドラインの利用シナリオを端から端まで確認します。
"""
