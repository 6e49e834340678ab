"""
部分集合ノルム ‖·‖₂ 単体テスト

ノルムと証拠、局所化、比の上下界、極値族による反例を確認します。
"""

import sys
import unittest
from fractions import Fraction
from pathlib import Path

# プロジェクトの src を追加
sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

from normforge.core.errors import BudgetExceededError, DomainError
from normforge.core.setcore import Family
from normforge.core.subset_norm import (
    SubsetNormParams,
    baju_check,
    extremal_family,
    localize,
    norm2,
    ratio_lower_bound,
    ratio_upper_bound,
    stirling_ratio_bound,
    universe_X,
)


class TestNorm2(unittest.TestCase):
    """‖A‖₂ の計算"""

    def setUp(self):
        self.params = SubsetNormParams(1, 4)

    def test_params(self):
        self.assertEqual(self.params.H, 2)
        self.assertEqual(self.params.x_size, 6)
        with self.assertRaises(DomainError):
            SubsetNormParams(1, 3)
        with self.assertRaises(DomainError):
            SubsetNormParams(0, 4)

    def test_norm_and_witness(self):
        A = Family.of(4, [[0, 1], [2, 3]])
        value, witness = norm2(self.params, A)
        self.assertEqual(value, 2)
        self.assertEqual(witness.as_list(), [0, 2])

    def test_extreme_values(self):
        self.assertEqual(norm2(self.params, Family(4))[0], 0)
        self.assertEqual(norm2(self.params, universe_X(self.params))[0], 3)

    def test_member_size_is_checked(self):
        with self.assertRaises(DomainError):
            norm2(self.params, Family.of(4, [[0, 1, 2]]))
        with self.assertRaises(DomainError):
            norm2(self.params, Family.of(6, [[0, 1]]))

    def test_universe_budget(self):
        with self.assertRaises(BudgetExceededError):
            universe_X(SubsetNormParams(1, 4), limit=5)

    def test_norm_of_whole_universe(self):
        """‖Xₙᴳ‖₂ = H+1"""
        for n, G in ((1, 2), (1, 4), (2, 4), (1, 6), (2, 8), (3, 8)):
            with self.subTest(n=n, G=G):
                p = SubsetNormParams(n, G)
                self.assertEqual(norm2(p, universe_X(p))[0], p.H + 1)


def test_localize():
    A = Family.of(4, [[0, 1], [2, 3], [0, 3]])
    assert localize(A, 0).as_lists() == [[0, 1], [0, 3]]
    assert len(localize(A, 2)) == 1


def test_ratio_bounds():
    p = SubsetNormParams(1, 8)
    assert ratio_lower_bound(p, 2) == Fraction(1, 15)
    assert ratio_upper_bound(p, 2) == Fraction(11, 14)
    assert ratio_lower_bound(p, 0) == Fraction(1, 70)
    assert ratio_upper_bound(p, 0) == 0
    assert stirling_ratio_bound(p, 2) <= float(ratio_lower_bound(p, 2))


def test_extremal_family():
    p = SubsetNormParams(1, 4)
    A = extremal_family(p, 1)
    assert A.as_lists() == [[1, 2], [1, 3], [2, 3]]
    assert norm2(p, A)[0] == 1


def test_baju_counterexample():
    """n=1, G=8, k=2 で |A*|/|X| = 11/14 > 3/4"""
    report = baju_check(SubsetNormParams(1, 8), 2)
    assert report.passed
    values = report.values
    assert values["norm"] == 2
    assert values["product"] == Fraction(3, 14)
    assert values["threshold"] == Fraction(1, 4)
    assert values["ratio"] == Fraction(11, 14)
    assert values["refuted"] is True

    assert baju_check(SubsetNormParams(1, 6), 2).values["product"] == Fraction(1, 5)
    assert baju_check(SubsetNormParams(2, 8), 2).values["product"] == Fraction(1, 28)
    print("✅ 極値族による反例テスト成功")
