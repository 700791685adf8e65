# hamspec/verify/__init__.py

from .base import BaseCheck, CheckConfig, CheckInput
from .enumeration import (
    EnumerationFilters,
    GraphBatch,
    check_feasible,
    enumerate_graphs,
    iter_batches,
    iter_graphs,
    labeled_count,
    sample_batches,
)
from .numeric import TABLE_ENTRIES, TableRow, rows_to_csv, table_rows
from .runner import (
    CHECKS,
    SUITE,
    UnknownCheckError,
    get_check,
    reproduce_tables,
    run_check,
    run_suite,
    verify_appendix,
    verify_bound_soundness,
    verify_chvatal_soundness,
    verify_corollaries,
    verify_erdos_gallai,
    verify_fiedler_nikiforov_cycle,
    verify_join_equivalence,
    verify_lemma_G1,
    verify_lemma_G2,
    verify_ore_bondy,
    verify_theorem1,
    verify_theorem2_smalln,
)
from .scan import ScanPlan, classify, run_plan, scan_shard

__all__ = [
    "BaseCheck",
    "CheckConfig",
    "CheckInput",
    "EnumerationFilters",
    "GraphBatch",
    "check_feasible",
    "enumerate_graphs",
    "iter_batches",
    "iter_graphs",
    "labeled_count",
    "sample_batches",
    "ScanPlan",
    "scan_shard",
    "run_plan",
    "classify",
    "TABLE_ENTRIES",
    "TableRow",
    "table_rows",
    "rows_to_csv",
    "CHECKS",
    "SUITE",
    "UnknownCheckError",
    "get_check",
    "run_check",
    "run_suite",
    "verify_theorem1",
    "verify_theorem2_smalln",
    "verify_lemma_G1",
    "verify_lemma_G2",
    "verify_corollaries",
    "verify_fiedler_nikiforov_cycle",
    "reproduce_tables",
    "verify_appendix",
    "verify_join_equivalence",
    "verify_bound_soundness",
    "verify_chvatal_soundness",
    "verify_ore_bondy",
    "verify_erdos_gallai",
]
