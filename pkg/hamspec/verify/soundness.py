# hamspec/verify/soundness.py

"""
Soundness sweeps for the tools the theorem checks lean on.

These run over every labeled graph of an order (or a uniform random sample
at n = 8) and compare a cheap claim against the exact answer:

- join_equivalence: Hamilton path in G  <=>  Hamilton cycle in G ∨ K1
- bounds:           rho <= sqrt(2m - n + 1) (delta >= 1) and rho <= the
                    minimum-degree bound
- chvatal:          Chvátal-guaranteed degree sequences are Hamiltonian
                    (and, on G ∨ K1, traceable)
- ore_bondy:        m >= C(n-1, 2) + 1 is Hamiltonian except for two graphs
- erdos_gallai:     circumference >= the edge-count guarantee
"""

from __future__ import annotations

from math import comb
from typing import Iterator, List

import numpy as np

from ..graphs.families import ore_bondy_exceptions, realize_graph
from ..graphs.graph6 import code_to_graph6, graph6_string
from ..hamilton.conditions import chvatal_guaranteed_mask, chvatal_path_mask
from ..hamilton.kernels import circumference_many, hamiltonian_many, traceable_many
from ..logs import get_logger
from ..models.graph import Graph
from ..models.report import ExceptionEntry, VerificationReport
from ..spectral.power import spectral_radius, spectral_radius_batch
from .base import BaseCheck, CheckConfig, CheckInput
from .enumeration import EnumerationFilters, GraphBatch, degree_keys, iter_batches, sample_batches

logger = get_logger("verify.soundness")

# violations listed per order; the rest are only counted
MAX_LISTED = 20
BOUND_SLACK = 1e-8


class SweepCheck(BaseCheck):
    """A check that walks batches of one order and counts mismatches."""

    def batches(
        self, n: int, check_input: CheckInput, report: VerificationReport,
        filters: EnumerationFilters = EnumerationFilters(),
    ) -> Iterator[GraphBatch]:
        if self.is_sampled(n, check_input):
            count = self.samples(check_input)
            report.filters_applied.append(f"uniform random sample of {count} labeled graphs")
            return sample_batches(n, count, filters, seed=self.seed(check_input))
        report.filters_applied.extend(filters.describe(n))
        return iter_batches(n, filters)

    def record(self, report: VerificationReport, n: int, codes: np.ndarray, what: str) -> None:
        if codes.size == 0:
            return
        logger.warning("%s: %d counterexample(s) at n=%d", what, codes.size, n)
        report.notes.append(f"{what} n={n}: {codes.size} counterexample(s)")
        for code in codes[: MAX_LISTED]:
            report.violations.append(code_to_graph6(n, int(code)))


class JoinEquivalenceCheck(SweepCheck):
    config = CheckConfig(
        check_id="join_equivalence",
        description="G has a Hamilton path iff G ∨ K1 has a Hamilton cycle",
        n_min=2,
        n_max=8,
        default_orders=[2, 3, 4, 5, 6, 7],
        long_running=[8],
        sampled=[8],
    )

    def run_order(self, n: int, check_input: CheckInput) -> VerificationReport:
        report = self.new_report(n, check_input)
        apex = np.int64(1) << np.int64(n)
        for batch in self.batches(n, check_input, report):
            report.scanned += len(batch)
            joined = np.concatenate(
                [batch.rows | apex, np.full((len(batch), 1), (1 << n) - 1, dtype=np.int64)],
                axis=1,
            )
            mismatch = traceable_many(batch.rows, n) != hamiltonian_many(joined, n + 1)
            self.record(report, n, batch.codes[mismatch], "join_equivalence")
        return report


class BoundSoundnessCheck(SweepCheck):
    config = CheckConfig(
        check_id="bounds",
        description="rho never exceeds the edge-count and minimum-degree upper bounds",
        n_min=1,
        n_max=8,
        default_orders=[1, 2, 3, 4, 5, 6, 7],
        long_running=[8],
        sampled=[8],
    )

    def run_order(self, n: int, check_input: CheckInput) -> VerificationReport:
        report = self.new_report(n, check_input)
        report.filters_applied.append(f"bound + {BOUND_SLACK:g}")
        for batch in self.batches(n, check_input, report):
            report.scanned += len(batch)
            m = batch.edge_counts.astype(np.float64)
            delta = batch.degrees.min(axis=1).astype(np.float64)

            nikiforov = (delta - 1) / 2 + np.sqrt(2 * m - n * delta + (delta + 1) ** 2 / 4)
            hong = np.sqrt(np.maximum(2 * m - n + 1, 0.0))
            bound = np.where(delta >= 1, np.minimum(hong, nikiforov), nikiforov)
            targets = bound + BOUND_SLACK

            brackets = spectral_radius_batch(batch.rows, n, targets=targets)
            above = brackets.lower > targets
            for i in np.flatnonzero(~brackets.settled):
                est = spectral_radius(batch.graph(int(i)))
                above[i] = est.lower > targets[i]
            self.record(report, n, batch.codes[above], "bounds")
        return report


class ChvatalSoundnessCheck(SweepCheck):
    config = CheckConfig(
        check_id="chvatal",
        description="Chvátal-guaranteed degree sequences are Hamiltonian; on G ∨ K1, traceable",
        n_min=3,
        n_max=8,
        default_orders=[3, 4, 5, 6, 7, 8],
        long_running=[8],
        sampled=[8],
    )

    def run_order(self, n: int, check_input: CheckInput) -> VerificationReport:
        report = self.new_report(n, check_input)
        for batch in self.batches(n, check_input, report):
            report.scanned += len(batch)
            cycle_ok = chvatal_guaranteed_mask(batch.sorted_degrees())
            certified = batch.select(cycle_ok)
            if len(certified):
                bad = ~hamiltonian_many(certified.rows, n)
                self.record(report, n, certified.codes[bad], "chvatal cycle")

            certified = batch.select(chvatal_path_mask(batch.degrees))
            if len(certified):
                bad = ~traceable_many(certified.rows, n)
                self.record(report, n, certified.codes[bad], "chvatal path")
        return report


class OreBondyCheck(SweepCheck):
    config = CheckConfig(
        check_id="ore_bondy",
        description="m >= C(n-1,2) + 1 forces a Hamilton cycle unless K1 ∨ (K_{n-2} + K1) or K2 ∨ 3K1",
        n_min=3,
        n_max=9,
        default_orders=[3, 4, 5, 6, 7, 8],
    )

    def run_order(self, n: int, check_input: CheckInput) -> VerificationReport:
        report = self.new_report(n, check_input)
        specs = ore_bondy_exceptions(n)
        graphs: List[Graph] = [realize_graph(spec) for spec in specs]
        # both exceptions are threshold graphs: the degree sequence identifies them
        keys = degree_keys(np.array([G.degree_sequence().degrees for G in graphs]), n)
        seen = np.zeros(len(specs), dtype=np.int64)

        filters = EnumerationFilters(min_edges=comb(n - 1, 2) + 1)
        for batch in self.batches(n, check_input, report, filters):
            report.scanned += len(batch)
            batch_keys = degree_keys(batch.sorted_degrees(), n)
            exceptional = np.isin(batch_keys, keys)
            ham = hamiltonian_many(batch.rows, n)
            self.record(report, n, batch.codes[~exceptional & ~ham], "ore_bondy non-Hamiltonian")
            self.record(report, n, batch.codes[exceptional & ham], "ore_bondy Hamiltonian exception")
            for k, key in enumerate(keys):
                seen[k] += int((batch_keys == key).sum())

        for spec, G, count in zip(specs, graphs, seen):
            if count:
                report.exceptions.append(
                    ExceptionEntry(graph6=graph6_string(G), family=spec.label(), occurrences=int(count))
                )
            else:
                report.missing.append(spec.label())
                report.violations.append(graph6_string(G))
        return report


class ErdosGallaiCheck(SweepCheck):
    config = CheckConfig(
        check_id="erdos_gallai",
        description="circumference is at least the Erdős–Gallai edge-count guarantee",
        n_min=3,
        n_max=8,
        default_orders=[3, 4, 5, 6, 7, 8],
        long_running=[8],
        sampled=[8],
    )

    def run_order(self, n: int, check_input: CheckInput) -> VerificationReport:
        report = self.new_report(n, check_input)
        for batch in self.batches(n, check_input, report):
            report.scanned += len(batch)
            m = batch.edge_counts
            k = (2 * m - 1) // (n - 1)
            guarantee = np.where((m > 0) & (k >= 2), k + 1, 0)
            short = circumference_many(batch.rows, n) < guarantee
            self.record(report, n, batch.codes[short], "erdos_gallai")
        return report
