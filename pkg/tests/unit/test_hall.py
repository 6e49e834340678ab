"""
Hall ノルム ‖·‖₄ 単体テスト

Δ と D、hn / HN、セレクター、δ_Z と L/R 分割、接合・切断を
N = 2〜4 の手計算できる例で確認します。
"""

import sys
import unittest
from fractions import Fraction
from pathlib import Path

import pytest

# プロジェクトの src を追加
sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

from normforge.core.errors import BudgetExceededError, DomainError
from normforge.core.hall import (
    cone_family,
    cut,
    cut_check,
    delta,
    delta_literal,
    dset,
    empty_R_bound_check,
    find_selector,
    glue,
    glue_check,
    hall_norm4,
    hall_norm4_witness,
    hall_norm_HN,
    hall_norm_HN_oracle,
    hall_size_lower_bound,
    hn,
    is_minimal_avoider,
    lr_split,
    preceq,
    restrict_delta,
    two_block_instance,
)
from normforge.core.partial_functions import EMPTY_FN, FnFamily, FnSet, PartialFn

# 全関数が 2,3 で 1 を取り、(0,1) で (0,1) を取らない集合
SAMPLE = FnSet.of_strings(4, ["1111", "1011", "0011"])


def _single(N, *strings):
    return FnFamily(N, tuple(PartialFn.total(N, f) for f in FnSet.of_strings(N, strings)))


class TestDelta(unittest.TestCase):
    """Δ(A) と D(δ)"""

    def test_sample_delta(self):
        expected = FnFamily.of_mappings(4, [{0: 0, 1: 1}, {2: 0}, {3: 0}])
        self.assertEqual(delta(SAMPLE), expected)
        self.assertEqual(delta_literal(SAMPLE), expected)

    def test_roundtrip(self):
        for A in (SAMPLE, FnSet(3), FnSet.full(3), FnSet.of_strings(3, ["000", "111"])):
            with self.subTest(A=A.as_strings()):
                self.assertEqual(dset(delta(A)), A)

    def test_extreme_sets(self):
        self.assertEqual(delta(FnSet.full(3)).members, ())
        self.assertEqual(delta(FnSet(3)).members, (EMPTY_FN,))

    def test_minimal_avoider(self):
        self.assertTrue(is_minimal_avoider(SAMPLE, PartialFn.from_mapping({2: 0})))
        self.assertFalse(is_minimal_avoider(SAMPLE, PartialFn.from_mapping({2: 0, 3: 0})))
        self.assertFalse(is_minimal_avoider(SAMPLE, PartialFn.from_mapping({0: 1})))

    def test_budget(self):
        with self.assertRaises(BudgetExceededError):
            delta(FnSet(5), limit=4)


class TestHn(unittest.TestCase):
    """hn と HN の手計算できる値"""

    def test_hn_values(self):
        cases = [
            (_single(4, "0000"), 5),
            (_single(4, "0000", "1111"), 3),
            (delta(FnSet.of_strings(4, ["0000"])), 2),
            (delta(FnSet.of_strings(4, ["0000", "1111"])), 1),
            (FnFamily(4), 5),
        ]
        for family, expected in cases:
            with self.subTest(family=family.as_mappings()):
                self.assertEqual(hn(family), expected)

    def test_HN_values(self):
        """Δ({0000,1111}) は恒等 0 側への細分でのみ 2 に届く"""
        family = delta(FnSet.of_strings(4, ["0000", "1111"]))
        value, witness = hall_norm_HN(family)
        self.assertEqual(value, 2)
        self.assertEqual(witness.k, 1)
        self.assertTrue(preceq(family, witness.refined))
        self.assertEqual(hn(witness.refined), 2)

        self.assertEqual(hall_norm_HN(FnFamily(4))[0], 5)
        self.assertEqual(hall_norm_HN(delta(SAMPLE))[0], 2)
        self.assertEqual(hall_norm_HN(restrict_delta(delta(SAMPLE), 0b0011))[0], 3)

    def test_HN_matches_oracle(self):
        for strings in (["000", "111"], ["000"], ["100", "010", "001"], []):
            family = delta(FnSet.of_strings(3, strings))
            with self.subTest(A=strings):
                self.assertEqual(hall_norm_HN(family)[0], hall_norm_HN_oracle(family))


def test_norm4_values():
    assert hall_norm4(FnSet.full(4)) == 5
    assert hall_norm4(dset(FnFamily.of_mappings(4, [{0: 0}]))) == 2
    assert hall_norm4(FnSet(4)) == 1
    value, witness = hall_norm4_witness(FnSet.of_strings(4, ["0000", "1111"]))
    assert value == 2
    assert all(sigma.size == 1 for sigma in witness.refined)
    assert len({sigma.ones == 0 for sigma in witness.refined}) == 1
    print("✅ ‖·‖₄ の値テスト成功")


def test_find_selector():
    family = delta(FnSet.of_strings(4, ["0000"]))
    selector = find_selector(family, 1)
    assert selector is not None
    assert sorted(selector.as_dict().values()) == [1, 2, 4, 8]
    assert find_selector(family, 2) is None
    assert find_selector(_single(4, "0000"), 4) is not None
    with pytest.raises(DomainError):
        find_selector(family, 0)


def test_restrict_and_lr_split():
    family = FnFamily.of_mappings(4, [{0: 1, 1: 0, 2: 1}, {0: 0, 3: 1}, {1: 1}])
    assert restrict_delta(family, 0b0011) == FnFamily.of_mappings(4, [{1: 1}])

    left, right = lr_split(family, 0b0001)
    assert left == FnFamily.of_mappings(4, [{0: 0}])
    assert right == FnFamily.of_mappings(4, [{1: 0, 2: 1}, {1: 1}])


def test_glue():
    first = dset(_single(2, "00"))
    glued = glue(first, first)
    assert glued.universe == 4
    assert len(glued) == 9
    report = glue_check(first, first)
    assert report.passed
    assert report.values == {"norm_first": 3, "norm_second": 3, "norm_glued": 3}
    with pytest.raises(DomainError):
        glue(FnSet(2), first)


def test_cut():
    """A = D({0000}) を Z = {0,1} で切断"""
    A = dset(_single(4, "0000"))
    result = cut(A, 0b0011)
    assert result.norm == 5
    assert result.left == FnSet.of_strings(2, ["10", "01", "11"])
    assert result.right == FnSet.full(2)

    report = cut_check(A, 0b0011)
    assert report.passed
    assert report.values == {"norm": 5, "norm_left": 3, "norm_right": 3}

    with pytest.raises(DomainError):
        cut(FnSet(4), 0b0011)
    with pytest.raises(DomainError):
        cut(A, 0b10000)


def test_empty_r_bound():
    report = empty_R_bound_check(_single(4, "0000"), 0b0011)
    assert report.passed
    assert report.values["HN"] == 5
    assert report.values["HN_L"] == 3
    assert report.values["bound"] == 3
    assert report.values["extremal"] is True

    with pytest.raises(DomainError):
        empty_R_bound_check(FnFamily.of_mappings(4, [{2: 0, 3: 0}]), 0b0001)


def test_constructions_and_size_bound():
    assert hall_norm_HN(two_block_instance(4))[0] == 3
    with pytest.raises(DomainError):
        two_block_instance(1)
    assert len(cone_family(PartialFn.from_mapping({0: 0}), 2)) == 3

    for (N, k), expected in {(4, 2): 9, (2, 1): 1, (4, 4): 15, (3, 1): 1}.items():
        assert hall_size_lower_bound(N, k) == expected
    with pytest.raises(DomainError):
        hall_size_lower_bound(3, 4)
    assert Fraction(hall_size_lower_bound(4, 2), 16) < 1
