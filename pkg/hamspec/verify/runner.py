# hamspec/verify/runner.py

"""
Check registry and the module-level entry points the CLI calls.

- CHECKS: check id -> BaseCheck subclass
- run_check(): one check over a list of orders
- run_suite(): "all" runs every check in SUITE with its default orders
- verify_*(): thin wrappers named after the statements they verify
"""

from __future__ import annotations

from typing import Dict, List, Optional, Type

from ..config import get_settings
from ..errors import HamspecError
from ..models.report import VerificationReport
from .base import BaseCheck, CheckInput
from .exhaustive import (
    CorollariesCheck,
    FiedlerNikiforovCheck,
    LemmaG1Check,
    LemmaG2Check,
    Theorem1Check,
    Theorem2Check,
)
from .numeric import AppendixCheck, TablesCheck
from .soundness import (
    BoundSoundnessCheck,
    ChvatalSoundnessCheck,
    ErdosGallaiCheck,
    JoinEquivalenceCheck,
    OreBondyCheck,
)

CHECKS: Dict[str, Type[BaseCheck]] = {
    cls.config.check_id: cls
    for cls in (
        Theorem1Check,
        Theorem2Check,
        LemmaG1Check,
        LemmaG2Check,
        CorollariesCheck,
        FiedlerNikiforovCheck,
        AppendixCheck,
        TablesCheck,
        JoinEquivalenceCheck,
        BoundSoundnessCheck,
        ChvatalSoundnessCheck,
        OreBondyCheck,
        ErdosGallaiCheck,
    )
}

SUITE: List[str] = [
    "theorem1",
    "theorem2",
    "lemmaG1",
    "lemmaG2",
    "corollaries",
    "fn_cycle",
    "appendix",
    "tables",
]


class UnknownCheckError(HamspecError, ValueError):
    """The requested check id is not registered."""


def get_check(name: str) -> BaseCheck:
    try:
        return CHECKS[name]()
    except KeyError:
        known = ", ".join(sorted(CHECKS))
        raise UnknownCheckError(f"unknown check {name!r}; known checks: {known}, all") from None


def run_check(
    name: str,
    n_values: Optional[List[int]] = None,
    jobs: Optional[int] = None,
    long_running: bool = False,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    tol_guard: Optional[float] = None,
) -> VerificationReport:
    check = get_check(name)
    check_input = CheckInput(
        n_values=list(n_values or []),
        jobs=jobs or get_settings().jobs,
        long_running=long_running,
        samples=samples,
        seed=seed,
        tol_guard=tol_guard,
    )
    return check.run(check_input)


def run_suite(
    jobs: Optional[int] = None,
    long_running: bool = False,
    samples: Optional[int] = None,
) -> List[VerificationReport]:
    return [
        run_check(name, jobs=jobs, long_running=long_running, samples=samples) for name in SUITE
    ]


# ----- named entry points -----

def verify_theorem1(n: int, **kwargs) -> VerificationReport:
    return run_check("theorem1", [n], **kwargs)


def verify_theorem2_smalln(n: int, **kwargs) -> VerificationReport:
    return run_check("theorem2", [n], **kwargs)


def verify_lemma_G2(n: int, **kwargs) -> VerificationReport:
    return run_check("lemmaG2", [n], **kwargs)


def verify_lemma_G1(n: int, **kwargs) -> VerificationReport:
    return run_check("lemmaG1", [n], **kwargs)


def verify_corollaries(n_max: int = 7, **kwargs) -> VerificationReport:
    return run_check("corollaries", list(range(4, n_max + 1)), **kwargs)


def verify_fiedler_nikiforov_cycle(n: int, **kwargs) -> VerificationReport:
    return run_check("fn_cycle", [n], **kwargs)


def reproduce_tables(**kwargs) -> VerificationReport:
    return run_check("tables", **kwargs)


def verify_appendix(n_max: int = 1000, **kwargs) -> VerificationReport:
    return run_check("appendix", [n_max], **kwargs)


def verify_join_equivalence(n: int, **kwargs) -> VerificationReport:
    return run_check("join_equivalence", [n], **kwargs)


def verify_bound_soundness(n: int, **kwargs) -> VerificationReport:
    return run_check("bounds", [n], **kwargs)


def verify_chvatal_soundness(n: int, **kwargs) -> VerificationReport:
    return run_check("chvatal", [n], **kwargs)


def verify_ore_bondy(n: int, **kwargs) -> VerificationReport:
    return run_check("ore_bondy", [n], **kwargs)


def verify_erdos_gallai(n: int, **kwargs) -> VerificationReport:
    return run_check("erdos_gallai", [n], **kwargs)
