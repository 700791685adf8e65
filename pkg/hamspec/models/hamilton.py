# hamspec/models/hamilton.py

"""
Outcome types for exact Hamiltonicity decisions and sufficient conditions.
"""

from __future__ import annotations

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from .family import FamilySpec


class ChvatalOutcome(str, Enum):
    GUARANTEED = "Guaranteed"
    UNKNOWN = "Unknown"


class ChvatalVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    outcome: ChvatalOutcome
    witness_k: Optional[int] = None

    @model_validator(mode="after")
    def check_witness(self) -> "ChvatalVerdict":
        if (self.outcome is ChvatalOutcome.UNKNOWN) != (self.witness_k is not None):
            raise ValueError("witness_k must be present exactly when the outcome is Unknown")
        return self

    @property
    def guaranteed(self) -> bool:
        return self.outcome is ChvatalOutcome.GUARANTEED


class WalkKind(str, Enum):
    PATH = "path"
    CYCLE = "cycle"


class HamWitness(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: WalkKind
    found: bool
    order: Optional[List[int]] = None

    @model_validator(mode="after")
    def check_order(self) -> "HamWitness":
        if self.found != (self.order is not None):
            raise ValueError("order must be present exactly when found")
        if self.order is not None and len(set(self.order)) != len(self.order):
            raise ValueError("witness repeats a vertex")
        return self

    def __bool__(self) -> bool:
        return self.found


class ConditionOutcome(str, Enum):
    HAMILTONIAN = "Hamiltonian"
    HAS_PATH = "HasPath"
    EXCEPTION = "Exception"
    NOT_APPLICABLE = "NotApplicable"


class ThresholdVerdict(BaseModel):
    """Result of an edge-threshold lemma: a guarantee, a matched exception, or not applicable."""

    model_config = ConfigDict(frozen=True)

    outcome: ConditionOutcome
    member: Optional[FamilySpec] = None

    @model_validator(mode="after")
    def check_member(self) -> "ThresholdVerdict":
        if (self.outcome is ConditionOutcome.EXCEPTION) != (self.member is not None):
            raise ValueError("member must be present exactly for Exception outcomes")
        return self
