# hamspec/verify/base.py

"""
Base interfaces for verification checks.

Each concrete check (theorem1, lemmaG2, fn_cycle, tables, ...) inherits from
BaseCheck and implements `run_order()` for a single n. `run()` validates the
requested orders, gates the long-running ones, merges the per-order reports
and stamps timing.

This keeps:
- IO contracts explicit
- Checks discoverable through one registry
- The CLI free of check-specific logic
"""

from __future__ import annotations

import time
from abc import ABC, abstractmethod
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from ..config import Settings, get_settings
from ..errors import GraphOrderError, InfeasibleRangeError
from ..logs import get_logger
from ..models.report import VerificationReport, merge_reports

logger = get_logger("verify")


class CheckConfig(BaseModel):
    """
    Identity and order range for a check.

    - default_orders: what `verify --check <id>` runs with no --n
    - long_running: orders refused unless long_running is requested
    - sampled: orders run by random sampling instead of refusal when not
      long_running
    """

    check_id: str
    description: str
    n_min: int
    n_max: int
    default_orders: List[int]
    long_running: List[int] = Field(default_factory=list)
    sampled: List[int] = Field(default_factory=list)


class CheckInput(BaseModel):
    n_values: List[int] = Field(default_factory=list)
    jobs: int = 1
    long_running: bool = False
    samples: Optional[int] = None
    seed: Optional[int] = None
    tol_guard: Optional[float] = None


class BaseCheck(ABC):
    """
    Abstract base class for all checks.

    Concrete checks implement:
        def run_order(self, n: int, check_input: CheckInput) -> VerificationReport
    and may override `preamble()` for order-independent numeric facts.
    """

    config: CheckConfig

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    # ----- helpers shared by concrete checks -----

    def tolerances(self, check_input: CheckInput) -> Dict[str, float]:
        return {
            "tol": self.settings.tol,
            "tol_guard": self.guard(check_input),
            "refine_tol": self.settings.refine_tol,
        }

    def guard(self, check_input: CheckInput) -> float:
        return check_input.tol_guard if check_input.tol_guard is not None else self.settings.tol_guard

    def new_report(self, n: int, check_input: CheckInput) -> VerificationReport:
        return VerificationReport(
            check_id=self.config.check_id, n=(n, n), tolerances=self.tolerances(check_input)
        )

    def is_sampled(self, n: int, check_input: CheckInput) -> bool:
        return n in self.config.sampled and not check_input.long_running

    def samples(self, check_input: CheckInput) -> int:
        return check_input.samples or self.settings.random_samples

    def seed(self, check_input: CheckInput) -> int:
        return self.settings.seed if check_input.seed is None else check_input.seed

    # ----- lifecycle -----

    def validate(self, check_input: CheckInput) -> List[int]:
        orders = sorted(set(check_input.n_values or self.config.default_orders))
        for n in orders:
            if not self.config.n_min <= n <= self.config.n_max:
                raise GraphOrderError(
                    f"{self.config.check_id} covers n in "
                    f"[{self.config.n_min}, {self.config.n_max}], got n={n}"
                )
            if (
                n in self.config.long_running
                and n not in self.config.sampled
                and not check_input.long_running
            ):
                raise InfeasibleRangeError(
                    f"{self.config.check_id} at n={n} is long-running; pass --long-running"
                )
        return orders

    def preamble(self, orders: List[int], check_input: CheckInput) -> Optional[VerificationReport]:
        return None

    def run(self, check_input: Optional[CheckInput] = None) -> VerificationReport:
        check_input = check_input or CheckInput()
        orders = self.validate(check_input)
        started = time.perf_counter()

        report = self.preamble(orders, check_input)
        for n in orders:
            logger.info("%s: n=%d", self.config.check_id, n)
            part = self.run_order(n, check_input).finalize()
            report = part if report is None else merge_reports(report, part)

        report = report.finalize()
        report.elapsed_ms = (time.perf_counter() - started) * 1000.0
        return report

    @abstractmethod
    def run_order(self, n: int, check_input: CheckInput) -> VerificationReport:
        """
        Verify the check at one order and return its (unfinalized) report.
        """
        raise NotImplementedError("Checks must implement the run_order() method.")
