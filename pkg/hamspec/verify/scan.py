# hamspec/verify/scan.py

"""
Exhaustive scan of one order for graphs that lack a Hamilton path/cycle but
reach a spectral threshold.

Pipeline per batch:
- degree-sequence certificate (Chvátal, on G ∨ K1 for paths) drops graphs
  that are certainly Hamiltonian
- exact subset DP (numba) on what remains
- every failure is compared against the threshold
- survivors are grouped into isomorphism classes; the smallest code of a
  class is its representative

Shards are independent. Their class lists merge by isomorphism, and the
result does not depend on how the space was split.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from math import ceil, log2
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel

from ..graphs.families import match_member, realize_graph
from ..graphs.graph6 import code_to_graph6, graph6_string
from ..graphs.isomorphism import is_isomorphic
from ..hamilton.conditions import chvatal_guaranteed_mask, chvatal_path_mask
from ..hamilton.kernels import hamiltonian_many, traceable_many
from ..logs import get_logger
from ..models.family import FamilySpec
from ..models.graph import Graph, slot_count
from ..models.hamilton import WalkKind
from ..models.report import ExceptionEntry, VerificationReport
from ..spectral.decide import compare_to_threshold
from .enumeration import EnumerationFilters, iter_batches

logger = get_logger("verify.scan")


class ScanPlan(BaseModel):
    """What one exhaustive pass over order n looks for."""

    n: int
    filters: EnumerationFilters = EnumerationFilters()
    walk: WalkKind = WalkKind.CYCLE
    threshold: Optional[float] = None
    exact_threshold: Optional[int] = None
    strict: bool = True
    certify: bool = True
    tol: float
    tol_guard: float
    refine_tol: float
    chunk_size: int


class ClassRecord(BaseModel):
    code: int
    occurrences: int
    degrees: Tuple[int, ...]


class ShardResult(BaseModel):
    scanned: int = 0
    certified: int = 0
    without_walk: int = 0
    borderline: int = 0
    classes: List[ClassRecord] = []


class _ClassIndex:
    """Isomorphism classes bucketed by degree sequence."""

    def __init__(self, n: int):
        self.n = n
        self._buckets: Dict[Tuple[int, ...], List[Tuple[Graph, ClassRecord]]] = {}

    def add(self, G: Graph, code: int, occurrences: int = 1) -> None:
        key = G.degree_sequence().degrees
        bucket = self._buckets.setdefault(key, [])
        for i, (H, record) in enumerate(bucket):
            if is_isomorphic(G, H):
                record.occurrences += occurrences
                if code < record.code:
                    record.code = code
                    bucket[i] = (G, record)
                return
        bucket.append((G, ClassRecord(code=code, occurrences=occurrences, degrees=key)))

    def records(self) -> List[ClassRecord]:
        out = [record for bucket in self._buckets.values() for _, record in bucket]
        return sorted(out, key=lambda r: r.code)


def scan_shard(plan: ScanPlan, shard: int = 0, shard_bits: int = 0) -> ShardResult:
    n = plan.n
    result = ShardResult()
    index = _ClassIndex(n)
    path = plan.walk is WalkKind.PATH

    for batch in iter_batches(n, plan.filters, shard, shard_bits, plan.chunk_size):
        result.scanned += len(batch)
        if plan.certify and n >= 3:
            certified = (
                chvatal_path_mask(batch.degrees)
                if path
                else chvatal_guaranteed_mask(batch.sorted_degrees())
            )
            result.certified += int(certified.sum())
            batch = batch.select(~certified)
            if not len(batch):
                continue

        found = traceable_many(batch.rows, n) if path else hamiltonian_many(batch.rows, n)
        failing = batch.select(~found)
        result.without_walk += len(failing)

        for i in range(len(failing)):
            G = failing.graph(i)
            if plan.threshold is not None:
                decision = compare_to_threshold(
                    G,
                    plan.threshold,
                    plan.strict,
                    exact_threshold=plan.exact_threshold,
                    tol=plan.tol,
                    tol_guard=plan.tol_guard,
                    refine_tol=plan.refine_tol,
                )
                result.borderline += int(decision.borderline)
                if not decision.holds:
                    continue
            index.add(G, int(failing.codes[i]))

    result.classes = index.records()
    return result


def merge_shards(n: int, results: List[ShardResult]) -> ShardResult:
    index = _ClassIndex(n)
    merged = ShardResult()
    for part in results:
        merged.scanned += part.scanned
        merged.certified += part.certified
        merged.without_walk += part.without_walk
        merged.borderline += part.borderline
        for record in part.classes:
            index.add(Graph.from_code(n, record.code), record.code, record.occurrences)
    merged.classes = index.records()
    return merged


def shard_bits_for(jobs: int, n: int) -> int:
    """A few shards per worker so uneven shards even out."""
    if jobs <= 1:
        return 0
    return min(slot_count(n), ceil(log2(jobs)) + 2)


def run_plan(plan: ScanPlan, jobs: int = 1) -> ShardResult:
    bits = shard_bits_for(jobs, plan.n)
    shards = list(range(1 << bits))
    logger.info("scanning n=%d over %d shard(s) with %d worker(s)", plan.n, len(shards), jobs)
    if bits == 0:
        return merge_shards(plan.n, [scan_shard(plan)])
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(scan_shard, [plan] * len(shards), shards, [bits] * len(shards)))
    return merge_shards(plan.n, parts)


def classify(
    report: VerificationReport,
    n: int,
    classes: List[ClassRecord],
    allowed: List[FamilySpec],
    required: Optional[List[FamilySpec]] = None,
    informational: bool = False,
    known: Optional[List[FamilySpec]] = None,
) -> None:
    """
    Sort scan classes into the report.

    A class matching an allowed family is an exception. Any other class is a
    violation, unless informational is set; then it is listed with the first
    family from `known` it matches, or no family. Required families that no
    class matched are added to missing (label) and violations (graph6).
    """
    matched: List[str] = []
    for record in classes:
        G = Graph.from_code(n, record.code)
        g6 = code_to_graph6(n, record.code)
        member = match_member(G, allowed)
        if member is not None:
            matched.append(member.label())
            report.exceptions.append(
                ExceptionEntry(graph6=g6, family=member.label(), occurrences=record.occurrences)
            )
            continue
        if not informational:
            logger.warning("n=%d: unexpected graph %s", n, g6)
            report.violations.append(g6)
            continue
        hit = match_member(G, known or [])
        report.exceptions.append(
            ExceptionEntry(
                graph6=g6,
                family=hit.label() if hit is not None else None,
                occurrences=record.occurrences,
            )
        )

    for spec in required or []:
        if spec.label() not in matched:
            report.missing.append(spec.label())
            report.violations.append(graph6_string(realize_graph(spec)))
