# tests/test_verify.py

import pytest

from hamspec.errors import GraphOrderError, InfeasibleRangeError
from hamspec.graphs import graph6_decode, match_member, members_of_order
from hamspec.models import FamilyTag, Verdict
from hamspec.verify import (
    UnknownCheckError,
    reproduce_tables,
    run_check,
    verify_appendix,
    verify_corollaries,
    verify_fiedler_nikiforov_cycle,
    verify_lemma_G1,
    verify_lemma_G2,
    verify_theorem1,
)
from hamspec.verify.enumeration import EnumerationFilters
from hamspec.verify.exhaustive import theorem1_exceptions
from hamspec.verify.numeric import TABLE_ENTRIES, rows_to_csv, table_rows
from hamspec.verify.scan import ScanPlan, merge_shards, scan_shard
from hamspec.models import WalkKind


def families(report):
    return {entry.family for entry in report.exceptions}


# ---------- path threshold n-3 ----------

def test_theorem1_n4_only_the_star():
    report = verify_theorem1(4)
    assert report.verdict is Verdict.PASS
    assert families(report) == {"G1(4)"}


def test_theorem1_n6_has_three_exceptions():
    report = verify_theorem1(6)
    assert report.verdict is Verdict.PASS
    assert families(report) == {"G1(6)", "K2 ∨ 4K1", "K1 ∨ (K1,3 + K1)"}
    for entry in report.exceptions:
        G = graph6_decode(entry.graph6)
        assert match_member(G, theorem1_exceptions(6)).label() == entry.family
        assert entry.occurrences >= 1


def test_theorem1_report_is_deterministic():
    first = verify_theorem1(5).to_json(include_timing=False)
    second = verify_theorem1(5).to_json(include_timing=False)
    assert first == second


def test_halving_the_guard_keeps_the_verdict():
    default = verify_theorem1(6)
    tight = verify_theorem1(6, tol_guard=0.5e-7)
    assert tight.verdict is default.verdict
    assert families(tight) == families(default)


@pytest.mark.slow
def test_theorem1_n7():
    report = verify_theorem1(7)
    assert report.verdict is Verdict.PASS
    assert families(report) == {"G1(7)"}


# ---------- cycle threshold rho(G2(n)) ----------

def test_theorem2_numeric_facts():
    report = run_check("theorem2", [5, 6])
    assert report.verdict is Verdict.PASS
    facts = {fact.name: fact for fact in report.facts}
    assert facts["rho(K3 ∨ 4K1) - rho(G2(7))"].holds
    assert facts["rho(K4 ∨ 5K1) - rho(G2(9))"].holds
    assert not facts["rho(G2(11)) - rho(K5 ∨ 6K1)"].required
    assert "G2(5)" in families(report)


def test_theorem2_spot_check_counts_qualifying_graphs():
    report = run_check("theorem2", [10], samples=40)
    assert report.scanned == 40
    assert report.completed
    assert any("random draws, 40 with delta >= 2 above the threshold" in note for note in report.notes)


@pytest.mark.slow
def test_theorem2_spot_check_n14():
    report = run_check("theorem2", [14], samples=200)
    assert report.verdict is Verdict.PASS
    assert report.scanned == 200
    assert not report.violations


@pytest.mark.slow
def test_theorem2_spot_check_n14_default_target():
    report = run_check("theorem2", [14])
    assert report.verdict is Verdict.PASS
    assert report.scanned == 100_000


# ---------- edge-threshold lemmas ----------

def test_lemma_g2_n5():
    report = verify_lemma_G2(5)
    assert report.verdict is Verdict.PASS
    assert families(report) == {"G2(5)"}


def test_lemma_g2_n7_four_exceptions():
    report = verify_lemma_G2(7)
    assert report.verdict is Verdict.PASS
    assert families(report) == {"G2(7)", "K3 ∨ 4K1", "K2 ∨ (K1,3 + K1)", "K1 ∨ K2,4"}
    assert not report.missing


@pytest.mark.slow
def test_lemma_g2_n8():
    report = verify_lemma_G2(8)
    assert report.verdict is Verdict.PASS
    assert families(report) == {"G2(8)", "K3 ∨ (K2 + 3K1)"}


def test_lemma_g1_n6_four_exceptions():
    report = verify_lemma_G1(6)
    assert report.verdict is Verdict.PASS
    assert families(report) == {m.label() for m in members_of_order(FamilyTag.CAL_G1, 6)}
    assert len(report.exceptions) == 4


@pytest.mark.slow
def test_lemma_g1_n7():
    report = verify_lemma_G1(7)
    assert report.verdict is Verdict.PASS
    assert families(report) == {"G1(7)", "K2 ∨ (3K1 + K2)"}


# ---------- corollaries and the n-2 cycle bound ----------

def test_corollaries_small_orders():
    report = verify_corollaries(n_max=6)
    assert report.verdict is Verdict.PASS
    assert families(report) == {"K3 + K1", "K4 + K1", "K5 + K1"}
    informational = [fact for fact in report.facts if not fact.required]
    assert len(informational) == 1


@pytest.mark.slow
def test_corollaries_n7():
    report = verify_corollaries(n_max=7)
    assert report.verdict is Verdict.PASS
    assert "G1(7)" in families(report)


@pytest.mark.parametrize(
    "n, label",
    [(4, "K1 ∨ (K2 + K1)"), (5, "K1 ∨ (K3 + K1)"), (6, "K1 ∨ (K4 + K1)")],
)
def test_fiedler_nikiforov_cycle(n, label):
    report = verify_fiedler_nikiforov_cycle(n)
    assert report.verdict is Verdict.PASS
    assert families(report) == {label}


# ---------- numeric checks ----------

def test_tables_reproduce():
    report = reproduce_tables()
    assert report.verdict is Verdict.PASS
    assert len(report.facts) == 2 * len(TABLE_ENTRIES) == 48


def test_table_rows_and_csv():
    rows = table_rows()
    assert all(row.abs_error <= 1e-3 for row in rows)
    lines = rows_to_csv(rows).strip().splitlines()
    assert lines[0] == "table,graph,printed_value,computed_value,abs_error"
    assert len(lines) == 25


def test_appendix_small_range():
    report = verify_appendix(n_max=200)
    assert report.verdict is Verdict.PASS
    assert not report.violations


@pytest.mark.slow
def test_appendix_default_range():
    assert verify_appendix().verdict is Verdict.PASS


# ---------- soundness sweeps ----------

@pytest.mark.parametrize(
    "check, n",
    [
        ("join_equivalence", 2),
        ("join_equivalence", 6),
        ("bounds", 1),
        ("bounds", 6),
        ("chvatal", 6),
        ("erdos_gallai", 6),
        ("ore_bondy", 6),
    ],
)
def test_soundness_sweeps_pass(check, n):
    report = run_check(check, [n])
    assert report.verdict is Verdict.PASS
    assert report.scanned > 0


def test_ore_bondy_n5_exceptions():
    report = run_check("ore_bondy", [5])
    assert report.verdict is Verdict.PASS
    assert families(report) == {"K1 ∨ (K3 + K1)", "K2 ∨ 3K1"}


def test_sampled_order_is_reported_as_sampled():
    report = run_check("bounds", [8], samples=300, seed=11)
    assert report.verdict is Verdict.PASS
    assert report.scanned == 300
    assert any("random sample" in item for item in report.filters_applied)


@pytest.mark.slow
@pytest.mark.parametrize("check", ["join_equivalence", "bounds", "chvatal", "erdos_gallai"])
def test_soundness_sweeps_exhaustive_n7(check):
    report = run_check(check, [7])
    assert report.verdict is Verdict.PASS
    assert not report.violations
    assert report.scanned == 2 ** 21


@pytest.mark.slow
@pytest.mark.parametrize("check", ["join_equivalence", "bounds", "chvatal", "erdos_gallai"])
def test_soundness_sweeps_sampled_n8(check):
    report = run_check(check, [8], samples=10**6)
    assert report.verdict is Verdict.PASS
    assert report.scanned == 10**6
    assert any("uniform random sample of 1000000" in item for item in report.filters_applied)


# ---------- sharding and validation ----------

def test_sharded_scan_matches_single_pass():
    plan = ScanPlan(
        n=7,
        filters=EnumerationFilters(min_edges=14, min_degree=2),
        walk=WalkKind.CYCLE,
        tol=1e-10,
        tol_guard=1e-7,
        refine_tol=1e-12,
        chunk_size=4096,
    )
    whole = merge_shards(7, [scan_shard(plan)])
    parts = merge_shards(7, [scan_shard(plan, shard, 3) for shard in range(8)])
    assert parts.scanned == whole.scanned
    assert parts.classes == whole.classes
    assert len(whole.classes) == 4


@pytest.mark.parametrize(
    "name, orders, error",
    [
        ("theorem1", [8], InfeasibleRangeError),
        ("theorem1", [3], GraphOrderError),
        ("lemmaG2", [9], InfeasibleRangeError),
        ("nonsense", [5], UnknownCheckError),
    ],
)
def test_invalid_requests(name, orders, error):
    with pytest.raises(error):
        run_check(name, orders)
