"""
ノルム間の橋渡し単体テスト
"""

import sys
from pathlib import Path

import pytest

# プロジェクトの src を追加
sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

from normforge.core.bridges import (
    contrast_instances,
    edge_lemma_check,
    pplus,
    pplus_bounds_check,
    profile,
    profile_inverse,
    pstar,
    pstar_claim_scan,
    subset_bridge_check,
    weight2_instance,
)
from normforge.core.errors import BudgetExceededError, DomainError
from normforge.core.partial_functions import FnSet, PartialFn
from normforge.core.setcore import Family


def test_profile_bijection():
    for mask in range(8):
        assert profile(profile_inverse(3, mask)) == mask
    assert profile(PartialFn.from_mapping({0: 1, 2: 0})) == 0b001
    with pytest.raises(DomainError):
        profile_inverse(2, 0b100)


def test_subset_bridge():
    report = subset_bridge_check(1, 4, Family.of(4, [[0, 1], [2, 3]]))
    assert report.passed
    assert report.values["norm2"] == 2
    assert report.values["norm4"] <= 3


def test_pstar_and_pplus():
    assert pstar(FnSet.full(2), 1).members == (0b01, 0b10)
    with pytest.raises(DomainError):
        pstar(FnSet.full(3), 1)
    assert pplus(FnSet.full(3)).members == (0b011, 0b101, 0b110, 0b111)


def test_pstar_scan_finds_counterexample():
    """N=2 で最初の反例が見つかる"""
    report = pstar_claim_scan(2, 16)
    assert report.passed
    assert report.cases_run == 16
    assert not report.wall_budget_exceeded
    first = report.values["counterexample"]
    assert first is not None
    assert first["n"] == 1
    assert report.values["count"] == len(report.discrepancies) > 0
    assert {d["id"] for d in report.discrepancies} == {"pstar_proposition"}

    truncated = pstar_claim_scan(2, 3)
    assert truncated.wall_budget_exceeded
    assert truncated.cases_run == 3

    with pytest.raises(BudgetExceededError):
        pstar_claim_scan(7, 10)
    print("✅ P* 反例探索テスト成功")


def test_edge_lemma():
    for mapping in ({0: 1, 1: 0, 2: 1}, {0: 0, 1: 0}, {1: 1}):
        assert edge_lemma_check(PartialFn.from_mapping(mapping), 3).passed


def test_pplus_bounds():
    report = pplus_bounds_check(FnSet.full(3))
    assert report.passed
    assert report.values["norm4"] == 4
    assert report.values["parts"] == 3
    assert report.values["max_profile"] == 3


def test_contrast_instances():
    assert len(weight2_instance(4)) == 6
    weight2, two_block = contrast_instances(4)
    assert weight2["name"] == "weight2"
    assert weight2["parts"] == 4
    assert weight2["norm4"] <= 4
    assert two_block["norm4"] == 3
    assert two_block["parts"] <= 2
