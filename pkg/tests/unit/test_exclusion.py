"""
除外ノルム ‖·‖₁ 単体テスト
"""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

# プロジェクトの src を追加
sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

from normforge.core.errors import DomainError
from normforge.core.exclusion import (
    ExclusionParams,
    norm1,
    partition_bounds,
    partition_threshold,
    size_from_norm1,
    triangle_counterexample,
    union_bound_check,
    union_quotient,
)


def test_norm1_values():
    p = ExclusionParams(2, 4)
    assert norm1(p, 0b0011) == Fraction(2, 3)
    assert norm1(p, 0) == Fraction(2, 5)
    assert norm1(p, 0b1111) == 2
    assert size_from_norm1(p, Fraction(2, 3)) == 2
    with pytest.raises(DomainError):
        norm1(p, 0b10000)
    with pytest.raises(DomainError):
        size_from_norm1(p, 0)
    print("✅ ‖·‖₁ の値テスト成功")


def test_params_validation():
    for F, G in ((0, 4), (4, 4), (5, 4)):
        with pytest.raises(DomainError):
            ExclusionParams(F, G)


def test_partition_bounds():
    p = ExclusionParams(2, 4)
    assert partition_threshold(p) == Fraction(2, 3)
    report = partition_bounds(p, 0b0001, 0b1110)
    assert report.passed
    assert report.values["norm_A"] == Fraction(1, 2)
    assert report.values["norm_B"] == 1
    with pytest.raises(DomainError):
        partition_bounds(p, 0b0011, 0b0110)


def test_triangle_counterexample():
    """均等な分割で三角不等式が崩れる"""
    found = triangle_counterexample(ExclusionParams(2, 4))
    assert found is not None
    A, B, (a, b, whole) = found
    assert (A, B) == (0b0011, 0b1100)
    assert whole > a + b


def test_union_bound_direction_is_discrepancy():
    """j ≤ F/Q は成り立ち、逆向きの記述は不一致として残る"""
    p = ExclusionParams(2, 4)
    assert union_quotient(p, 0b0001, 0b0001) == 3
    report = union_bound_check(p, 0b0001, 0b0001)
    assert report.passed
    assert report.values["bound"] == Fraction(2, 3)
    assert report.values["j"] == Fraction(1, 2)
    assert [d["id"] for d in report.discrepancies] == ["union_bound_direction"]


def test_union_bound_without_positive_quotient():
    report = union_bound_check(ExclusionParams(2, 4), 0b1111, 0b1111)
    assert report.values["Q"] < 0
    assert "bound" not in report.values
    assert not report.discrepancies
