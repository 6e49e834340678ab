"""
全列挙による極値探索の統合テスト
"""

import sys
from pathlib import Path

import pytest

# プロジェクトの src を追加
sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

from normforge.core.errors import BudgetExceededError, DomainError
from normforge.core.partial_functions import FnSet
from normforge.verification import exhaustive_extremal


@pytest.mark.parametrize(
    "norm_id, params, objective, target, expected",
    [
        (0, {"N": 2}, "min_size_at_norm", 3, 3),
        (1, {"F": 2, "G": 4}, "min_size_at_norm", 1, 3),
        (2, {"n": 1, "G": 4}, "max_size_at_norm", 1, 3),
        (3, {"N": 4}, "max_size_at_norm", 1, 9),
        (4, {"N": 3}, "min_size_at_norm", 2, 1),
    ],
)
def test_extremal_sizes(norm_id, params, objective, target, expected):
    size, witness = exhaustive_extremal(norm_id, params, objective, target)
    assert size == expected
    assert witness is not None


def test_extremal_witnesses():
    size, witness = exhaustive_extremal(1, {"F": 2, "G": 4}, "min_size_at_norm", 1)
    assert witness == [0, 1, 2]
    size, witness = exhaustive_extremal(4, {"N": 3}, "min_size_at_norm", 2)
    assert witness == FnSet(3, (0,))


def test_unreachable_target():
    assert exhaustive_extremal(0, {"N": 2}, "min_size_at_norm", 5) == (None, None)


def test_errors():
    with pytest.raises(DomainError):
        exhaustive_extremal(0, {"N": 2}, "median_size", 1)
    with pytest.raises(DomainError):
        exhaustive_extremal(9, {"N": 2}, "min_size_at_norm", 1)
    with pytest.raises(BudgetExceededError):
        exhaustive_extremal(4, {"N": 3}, "min_size_at_norm", 2, limit=16)
