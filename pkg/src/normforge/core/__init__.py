"""
Core Module - 計算カーネル

集合ノルム ‖·‖₀〜‖·‖₄ の厳密計算、証拠（witness）、公理検査、
コーデックを提供します。
"""

from .errors import (
    BudgetExceededError,
    CodecError,
    DomainError,
    NormforgeError,
    NumericRangeError,
    UnknownSuiteError,
)
from .report import Report
from .setcore import Family, Partition, counting_norm, restrict
from .partial_functions import FnFamily, FnSet, PartialFn
from .exclusion import ExclusionParams, norm1
from .subset_norm import SubsetNormParams, norm2
from .coloring import norm3, splitting_number
from .hall import delta, dset, hall_norm4, hall_norm_HN, hn
from .axioms import axiom_check
from .codecs import canonical_dumps, codec_family

__all__ = [
    "NormforgeError",
    "DomainError",
    "CodecError",
    "BudgetExceededError",
    "NumericRangeError",
    "UnknownSuiteError",
    "Report",
    "Family",
    "Partition",
    "counting_norm",
    "restrict",
    "PartialFn",
    "FnSet",
    "FnFamily",
    "ExclusionParams",
    "norm1",
    "SubsetNormParams",
    "norm2",
    "splitting_number",
    "norm3",
    "hn",
    "hall_norm_HN",
    "hall_norm4",
    "delta",
    "dset",
    "axiom_check",
    "codec_family",
    "canonical_dumps",
]
