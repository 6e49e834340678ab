"""
彩色ノルム ‖·‖₃ 単体テスト

分割数、オラクルとの一致、縮約関数、k 角形の族、構成例を確認します。
"""

import sys
import unittest
from pathlib import Path

import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

# プロジェクトの src を追加
sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

from normforge.core.coloring import (
    ReducerSpec,
    clique_family,
    edge_systems_min,
    edges_of,
    kgon_analysis,
    norm3,
    norm3_by_oracle,
    norm_from_parts,
    norm_upper_bound,
    psi_step,
    rank_encode,
    rook_construction,
    size_bounds,
    splitting_number,
    star_family,
)
from normforge.core.errors import DomainError
from normforge.core.setcore import Family

TRIANGLE = Family.of(3, [[0, 1], [1, 2], [0, 2]])
FOUR_CYCLE = Family.of(4, [[0, 1], [1, 2], [2, 3], [0, 3]])


class TestSplitting(unittest.TestCase):
    """分割数と ‖·‖₃"""

    def test_triangle(self):
        c, witness = splitting_number(TRIANGLE)
        self.assertEqual(c, 3)
        value, witness = norm3(TRIANGLE)
        self.assertEqual(value, 2)
        self.assertEqual(witness.partition.as_lists(), [[0], [1], [2]])

    def test_four_cycle(self):
        c, witness = splitting_number(FOUR_CYCLE)
        self.assertEqual(c, 2)
        self.assertEqual(witness.partition.as_lists(), [[0, 2], [1, 3]])
        self.assertTrue(witness.partition.splits(FOUR_CYCLE))

    def test_empty_family(self):
        c, witness = splitting_number(Family(4))
        self.assertEqual(c, 1)
        self.assertEqual(norm3(Family(4))[0], 0)

    def test_rejects_small_members(self):
        with self.assertRaises(DomainError):
            norm3(Family.of(3, [[0]]))

    def test_parts_to_norm(self):
        for c, expected in ((1, 0), (2, 1), (3, 2), (4, 2), (5, 3), (8, 3)):
            with self.subTest(c=c):
                self.assertEqual(norm_from_parts(c), expected)


def test_oracle_agrees_on_examples():
    assert norm3_by_oracle(TRIANGLE) == 2
    assert norm3_by_oracle(FOUR_CYCLE) == 1
    assert norm3_by_oracle(Family(3)) == 0


@hypothesis_settings(derandomize=True, max_examples=60, deadline=None)
@given(raw=st.lists(st.sampled_from([3, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15]), max_size=6))
def test_oracle_agrees_with_search(raw):
    """探索による値と定義どおりの再帰が一致"""
    A = Family(4, tuple(raw))
    assert norm3(A)[0] == norm3_by_oracle(A)


def test_reducers_and_psi_step():
    assert rank_encode(0b1001, 4) == 12
    assert rank_encode(0b0111, 4) == 36
    with pytest.raises(DomainError):
        rank_encode(0, 4)

    A = Family.of(4, [[0, 1, 2], [0, 3]])
    assert psi_step(A, ReducerSpec("lex_min_edge")).as_lists() == [[0, 1], [0, 3]]
    assert psi_step(A, ReducerSpec("lex_max_edge")).as_lists() == [[0, 3], [1, 2]]
    assert psi_step(A, ReducerSpec("table", table={0b0111: 0b0101})).as_lists() == [[0, 2], [0, 3]]
    assert psi_step(Family(4), ReducerSpec()) == Family(4)

    with pytest.raises(DomainError):
        ReducerSpec("random_edge")
    with pytest.raises(DomainError):
        ReducerSpec("table", table={0b0111: 0b1000})


def test_edge_systems():
    assert edges_of(0b111) == [0b011, 0b101, 0b110]
    value, system = edge_systems_min(Family.of(3, [[0, 1, 2]]))
    assert value == 1
    assert len(system) == 1


def test_kgon_analysis():
    """全 k 角形の分割数と二つの式の比較"""
    report = kgon_analysis(4, 2)
    assert report.passed
    assert report.values["exact"] == 4
    assert report.values["stated"] == 3
    assert [d["id"] for d in report.discrepancies] == ["kgon_formula"]

    report = kgon_analysis(7, 3)
    assert (report.values["exact"], report.values["stated"]) == (4, 3)

    report = kgon_analysis(6, 3)
    assert report.values["match"] is True
    assert not report.discrepancies

    with pytest.raises(DomainError):
        kgon_analysis(3, 4)


def test_size_bounds_and_upper_bound():
    assert size_bounds(4, 1) == (1, 9)
    assert size_bounds(4, 2) == (3, 11)
    assert norm_upper_bound(1) == 0
    assert norm_upper_bound(4) == 2
    assert norm_upper_bound(5) == 3


def test_constructions():
    assert clique_family(0b111, 3) == TRIANGLE
    assert len(clique_family(0b1, 3)) == 0
    assert star_family(3, 0).as_lists() == [[0, 1], [0, 2], [0, 1, 2]]

    A, B = rook_construction(2)
    assert splitting_number(A)[0] == 2
    assert splitting_number(B)[0] == 2
    assert splitting_number(A.union(B))[0] == 4
    print("✅ 構成例テスト成功")
