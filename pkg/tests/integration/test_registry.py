"""
検証スイート登録簿の統合テスト

不変条件を持つ全モジュールにスイートが登録されていることを確認します。
"""

import sys
import unittest
from pathlib import Path

# プロジェクトの src を追加
sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

from normforge.core.errors import UnknownSuiteError
from normforge.verification import MODULES, get_suite, list_suites

EXPECTED_INVARIANT_SUITES = {
    "combinatorics": {
        "comb.identity_a", "comb.identity_b", "comb.partial_count", "comb.pascal", "comb.factorial_bounds",
    },
    "setcore": {"setcore.restrict_laws", "setcore.vertex_deletion_restrict", "setcore.codec_roundtrip"},
    "norm-exclusion": {
        "exclusion.monotone", "exclusion.size_relationship", "exclusion.axioms",
        "exclusion.partition_bounds", "exclusion.union_bound",
    },
    "norm-subset": {
        "norm2.sandwich", "norm2.localize", "norm2.monotone", "norm2.lower_bound",
        "norm2.upper_bound_tightness", "norm2.complement_sum",
    },
    "norm-coloring": {
        "coloring.monotone", "coloring.oracle_equivalence", "coloring.oracle_step_down",
        "coloring.split_union", "coloring.triangle", "coloring.psi_monotone", "coloring.vertex_deletion",
        "coloring.star", "coloring.universe_extension", "coloring.log_bound", "coloring.size_bounds",
        "coloring.edge_systems",
    },
    "norm-hall": {
        "hall.roundtrip", "hall.minimality", "hall.subset_lemma", "hall.order_laws", "hall.hn_antitone",
        "hall.hn_oracle", "hall.lr_min", "hall.lr_half", "hall.axiom_report", "hall.triangle_failure",
        "hall.cut", "hall.glue", "hall.empty_r", "hall.size_bound",
    },
    "bridges": {
        "bridges.profile_bijection", "bridges.subset_bridge", "bridges.edge_lemma",
        "bridges.pplus_bounds", "bridges.contrast",
    },
}

SUPPLEMENTARY_SUITES = {"norm2.baju", "coloring.kgon", "coloring.clique", "bridges.pstar_scan"}


class TestRegistry(unittest.TestCase):
    """登録簿"""

    def test_every_module_has_suites(self):
        modules = {definition.module for definition in list_suites()}
        self.assertEqual(modules, set(MODULES))

    def test_invariant_suites_by_module(self):
        found = {module: set() for module in MODULES}
        for definition in list_suites():
            if not definition.supplementary:
                found[definition.module].add(definition.name)
        self.assertEqual(found, EXPECTED_INVARIANT_SUITES)

    def test_supplementary_suites(self):
        names = {definition.name for definition in list_suites() if definition.supplementary}
        self.assertEqual(names, SUPPLEMENTARY_SUITES)

    def test_suites_are_sorted_and_described(self):
        names = [definition.name for definition in list_suites()]
        self.assertEqual(names, sorted(names))
        self.assertEqual(len(names), len(set(names)))
        for definition in list_suites():
            with self.subTest(suite=definition.name):
                self.assertTrue(definition.invariant)
                self.assertTrue(callable(definition.check))

    def test_catalog_suites_are_registered(self):
        for name in ("exclusion.union_bound", "coloring.kgon", "bridges.pstar_scan",
                     "hall.axiom_report", "hall.cut"):
            with self.subTest(suite=name):
                self.assertEqual(get_suite(name).name, name)

    def test_unknown_suite(self):
        with self.assertRaises(UnknownSuiteError):
            get_suite("hall.nonexistent")

    def test_theorem_aliases_resolve(self):
        for alias, name in (("hall.thm6.30", "hall.lr_min"), ("hall.13A", "hall.lr_half"),
                            ("hall.13B", "hall.cut"), ("hall.13X", "hall.glue")):
            with self.subTest(alias=alias):
                self.assertEqual(get_suite(alias).name, name)
                self.assertIn(alias, get_suite(name).aliases)
