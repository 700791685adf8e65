# hamspec/models/report.py

"""
Verification report schema.

Field order is fixed and is the JSON key order; reports produced with
include_timing=False are byte-identical across runs of the same check.
"""

from __future__ import annotations

import json
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    PARTIAL = "PARTIAL"


class ExceptionEntry(BaseModel):
    graph6: str
    family: Optional[str] = None
    occurrences: int = 1


class NumericFact(BaseModel):
    name: str
    lhs: float
    rhs: float
    relation: str
    holds: bool
    required: bool = True


class VerificationReport(BaseModel):
    check_id: str
    n: Tuple[int, int]
    scanned: int = 0
    filters_applied: List[str] = Field(default_factory=list)
    exceptions: List[ExceptionEntry] = Field(default_factory=list)
    violations: List[str] = Field(default_factory=list)
    missing: List[str] = Field(default_factory=list)
    facts: List[NumericFact] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    tolerances: Dict[str, float] = Field(default_factory=dict)
    completed: bool = True
    verdict: Verdict = Verdict.PARTIAL
    elapsed_ms: Optional[float] = None

    def add_fact(
        self,
        name: str,
        lhs: float,
        rhs: float,
        relation: str,
        required: bool = True,
        holds: Optional[bool] = None,
    ) -> NumericFact:
        if holds is None:
            holds = {
                ">": lhs > rhs,
                ">=": lhs >= rhs,
                "<": lhs < rhs,
                "<=": lhs <= rhs,
                "==": lhs == rhs,
            }[relation]
        fact = NumericFact(
            name=name, lhs=lhs, rhs=rhs, relation=relation, holds=bool(holds), required=required
        )
        self.facts.append(fact)
        return fact

    def finalize(self) -> "VerificationReport":
        """Fold failed required facts into violations and settle the verdict."""
        for fact in self.facts:
            tag = f"fact:{fact.name}"
            if fact.required and not fact.holds and tag not in self.violations:
                self.violations.append(tag)
        if self.violations:
            self.verdict = Verdict.FAIL
        elif not self.completed:
            self.verdict = Verdict.PARTIAL
        else:
            self.verdict = Verdict.PASS
        return self

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def to_dict(self, include_timing: bool = True) -> dict:
        data = self.model_dump(mode="json")
        if not include_timing:
            data.pop("elapsed_ms", None)
        return data

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, ensure_ascii=False)


def merge_reports(a: VerificationReport, b: VerificationReport) -> VerificationReport:
    """
    Associative merge: counts add, lists concatenate then dedup (exceptions
    by graph6, summing occurrences), n ranges widen.
    """
    if a.check_id != b.check_id:
        raise ValueError(f"cannot merge {a.check_id} with {b.check_id}")

    def _dedup(items: List[str]) -> List[str]:
        return list(dict.fromkeys(items))

    exceptions: Dict[str, ExceptionEntry] = {}
    for entry in [*a.exceptions, *b.exceptions]:
        seen = exceptions.get(entry.graph6)
        if seen is None:
            exceptions[entry.graph6] = entry.model_copy()
        else:
            exceptions[entry.graph6] = seen.model_copy(
                update={"occurrences": seen.occurrences + entry.occurrences}
            )

    facts: Dict[str, NumericFact] = {}
    for fact in [*a.facts, *b.facts]:
        facts.setdefault(fact.name, fact)

    elapsed = None
    if a.elapsed_ms is not None or b.elapsed_ms is not None:
        elapsed = (a.elapsed_ms or 0.0) + (b.elapsed_ms or 0.0)

    merged = VerificationReport(
        check_id=a.check_id,
        n=(min(a.n[0], b.n[0]), max(a.n[1], b.n[1])),
        scanned=a.scanned + b.scanned,
        filters_applied=_dedup([*a.filters_applied, *b.filters_applied]),
        exceptions=list(exceptions.values()),
        violations=_dedup([*a.violations, *b.violations]),
        missing=_dedup([*a.missing, *b.missing]),
        facts=list(facts.values()),
        notes=_dedup([*a.notes, *b.notes]),
        tolerances={**a.tolerances, **b.tolerances},
        completed=a.completed and b.completed,
        elapsed_ms=elapsed,
    )
    return merged.finalize()
