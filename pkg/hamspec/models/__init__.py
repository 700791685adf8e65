# hamspec/models/__init__.py

from .family import FamilySpec, FamilyTag
from .graph import MAX_ORDER, DegreeSequence, Graph, slot_count, slot_pairs
from .hamilton import (
    ChvatalOutcome,
    ChvatalVerdict,
    ConditionOutcome,
    HamWitness,
    ThresholdVerdict,
    WalkKind,
)
from .report import ExceptionEntry, NumericFact, Verdict, VerificationReport, merge_reports
from .spectral import CubicFamily, CubicTag, SpectralEstimate

__all__ = [
    "Graph",
    "DegreeSequence",
    "MAX_ORDER",
    "slot_pairs",
    "slot_count",
    "FamilySpec",
    "FamilyTag",
    "SpectralEstimate",
    "CubicFamily",
    "CubicTag",
    "ChvatalOutcome",
    "ChvatalVerdict",
    "ConditionOutcome",
    "HamWitness",
    "ThresholdVerdict",
    "WalkKind",
    "ExceptionEntry",
    "NumericFact",
    "Verdict",
    "VerificationReport",
    "merge_reports",
]
