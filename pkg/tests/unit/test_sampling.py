"""
乱数源と生成器の再現性テスト
"""

import sys
from pathlib import Path

# プロジェクトの src を追加
sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

from normforge.core.sampling import case_rng, random_choice_mask, random_mask


def test_case_rng_is_reproducible():
    first = [random_mask(case_rng(7, i), 16) for i in range(20)]
    second = [random_mask(case_rng(7, i), 16) for i in reversed(range(20))]
    assert first == list(reversed(second))
    assert first != [random_mask(case_rng(8, i), 16) for i in range(20)]


def test_random_mask_density():
    assert random_mask(case_rng(1), 12, density=0.0) == 0
    assert random_mask(case_rng(1), 12, density=1.0) == (1 << 12) - 1
    assert random_mask(case_rng(1), 12) < 1 << 12


def test_random_choice_mask():
    for count in range(0, 7):
        mask = random_choice_mask(case_rng(2, count), 6, count)
        assert bin(mask).count("1") == count
    assert random_choice_mask(case_rng(2), 4, 9) == 0b1111
    print("✅ 乱数源テスト成功")
