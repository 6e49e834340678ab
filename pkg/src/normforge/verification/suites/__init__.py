"""
組み込みスイート

インポートするだけで各モジュールのスイートが登録簿に登録されます。
"""

from . import bridges, coloring, combinatorics, exclusion, hall, setcore, subset_norm

__all__ = ["bridges", "coloring", "combinatorics", "exclusion", "hall", "setcore", "subset_norm"]
