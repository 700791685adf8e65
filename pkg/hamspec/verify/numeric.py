# hamspec/verify/numeric.py

"""
Numeric checks that need no enumeration.

- tables:   the 24 tabulated spectral radii of the exceptional graphs, each
            computed twice (power iteration, and closed form / cubic root /
            equitable quotient) and compared to the printed value
- appendix: for n = 7..n_max, the cubics of G2(n) and K1 ∨ (K_{n-3} + K2)
            have one root above n-3, inside the stated brackets, in the
            stated order
"""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import List

from pydantic import BaseModel

from ..graphs.families import realize_graph
from ..models.family import E, FamilySpec, FamilyTag, G1, G2, K, Kab, join, split, union
from ..models.report import VerificationReport
from ..spectral.formulas import (
    appendix_bracket_g2,
    appendix_bracket_k1join,
    bipartite_closed_form,
    bracket_signs,
    cubic_largest_root,
    g1_cubic,
    g2_cubic,
    increasing_above_base,
    k1_join_cubic,
    rho_split_closed_form,
    sign_changes_on_grid,
)
from ..spectral.power import quotient_radius, spectral_radius
from .base import BaseCheck, CheckConfig, CheckInput

PRINTED_TOLERANCE = 1e-3
ROUTE_TOLERANCE = 1e-9


class TableEntry(BaseModel):
    table: str
    spec: FamilySpec
    printed: float


class TableRow(BaseModel):
    table: str
    graph: str
    printed_value: float
    computed_value: float
    abs_error: float
    route: str
    route_value: float


TABLE_ENTRIES: List[TableEntry] = [
    TableEntry(table=table, spec=spec, printed=printed)
    for table, spec, printed in [
        # Hamilton-cycle exceptions
        ("cycle", join(K(2), union(Kab(1, 3), K(1))), 4.3723),
        ("cycle", join(K(1), Kab(2, 4)), 4.2182),
        ("cycle", split(7, 3), 4.6056),
        ("cycle", G2(7), 4.4040),
        ("cycle", join(K(3), union(K(2), E(3))), 5.1757),
        ("cycle", G2(8), 5.2749),
        ("cycle", join(K(2), Kab(2, 5)), 5.9150),
        ("cycle", split(9, 4), 6.2170),
        ("cycle", join(K(3), union(Kab(1, 4), K(1))), 6.0322),
        ("cycle", G2(9), 6.1970),
        ("cycle", split(11, 5), 7.8310),
        ("cycle", G2(11), 8.1144),
        # Hamilton-path exceptions
        ("path", join(K(1), union(Kab(1, 3), K(1))), 3.1020),
        ("path", Kab(2, 4), 2.8284),
        ("path", split(6, 2), 3.3723),
        ("path", G1(6), 3.1774),
        ("path", join(K(2), union(E(3), K(2))), 3.9095),
        ("path", G1(7), 4.1055),
        ("path", join(K(1), Kab(2, 5)), 4.6185),
        ("path", split(8, 3), 5.0),
        ("path", join(K(2), union(Kab(1, 4), K(1))), 4.7903),
        ("path", G1(8), 5.0695),
        ("path", split(10, 4), 6.6235),
        ("path", G1(10), 7.0367),
    ]
]


def second_route(spec: FamilySpec) -> tuple:
    """(route name, value) by closed form or cubic where one exists, else the quotient matrix."""
    p = spec.params
    if spec.tag is FamilyTag.SPLIT:
        return "closed form", rho_split_closed_form(p[0], p[1])
    if spec.tag is FamilyTag.COMPLETE_BIPARTITE:
        return "closed form", bipartite_closed_form(p[0], p[1])
    if spec.tag is FamilyTag.G1:
        return "cubic", cubic_largest_root(g1_cubic(p[0]))
    if spec.tag is FamilyTag.G2:
        return "cubic", cubic_largest_root(g2_cubic(p[0]))
    return "quotient", quotient_radius(realize_graph(spec))


def table_rows(tol: float = 1e-10) -> List[TableRow]:
    rows = []
    for entry in TABLE_ENTRIES:
        computed = spectral_radius(realize_graph(entry.spec), tol=tol).value
        route, route_value = second_route(entry.spec)
        rows.append(
            TableRow(
                table=entry.table,
                graph=entry.spec.label(),
                printed_value=entry.printed,
                computed_value=computed,
                abs_error=abs(computed - entry.printed),
                route=route,
                route_value=route_value,
            )
        )
    return rows


def rows_to_csv(rows: List[TableRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["table", "graph", "printed_value", "computed_value", "abs_error"])
    for row in rows:
        writer.writerow(
            [row.table, row.graph, f"{row.printed_value:.4f}", f"{row.computed_value:.10f}", f"{row.abs_error:.2e}"]
        )
    return buffer.getvalue()


class TablesCheck(BaseCheck):
    config = CheckConfig(
        check_id="tables",
        description="tabulated spectral radii of both exceptional sets",
        n_min=0,
        n_max=0,
        default_orders=[0],
    )

    def run_order(self, n: int, check_input: CheckInput) -> VerificationReport:
        report = VerificationReport(
            check_id=self.config.check_id, n=(6, 11), tolerances=self.tolerances(check_input)
        )
        for row in table_rows(self.settings.tol):
            report.scanned += 1
            report.add_fact(
                f"{row.table} set: {row.graph} vs printed", row.abs_error, PRINTED_TOLERANCE, "<="
            )
            report.add_fact(
                f"{row.table} set: {row.graph} power iteration vs {row.route}",
                abs(row.computed_value - row.route_value), ROUTE_TOLERANCE, "<=",
            )
        return report


class AppendixCheck(BaseCheck):
    config = CheckConfig(
        check_id="appendix",
        description="root brackets and order of the G2(n) and K1 ∨ (K_{n-3} + K2) cubics",
        n_min=7,
        n_max=100_000,
        default_orders=[1000],
    )

    GRID_STEPS = 64
    CROSS_CHECK_MAX = 20

    def run_order(self, n_max: int, check_input: CheckInput) -> VerificationReport:
        report = VerificationReport(
            check_id=self.config.check_id, n=(7, n_max), tolerances=self.tolerances(check_input)
        )
        failures = {
            "one root above n-3": [],
            "bracket of G2(n) holds the root": [],
            "bracket of K1 ∨ (K_(n-3) + K2) holds the root": [],
            "8/n^2 > 2/(n^2 - 6n + 6)": [],
            "rho(G2(n)) > rho(K1 ∨ (K_(n-3) + K2))": [],
        }
        worst_route = 0.0

        for n in range(7, n_max + 1):
            report.scanned += 1
            f, g = g2_cubic(n), k1_join_cubic(n)

            for fam in (f, g):
                if not increasing_above_base(fam) or sign_changes_on_grid(fam, self.GRID_STEPS) != 1:
                    failures["one root above n-3"].append(f"n={n} {fam.tag.value}")

            rf, rg = cubic_largest_root(f), cubic_largest_root(g)
            lo, hi = appendix_bracket_g2(n)
            if bracket_signs(f) != (-1, 1) or not lo < rf < hi:
                failures["bracket of G2(n) holds the root"].append(f"n={n}")
            lo, hi = appendix_bracket_k1join(n)
            if bracket_signs(g) != (-1, 1) or not lo < rg < hi:
                failures["bracket of K1 ∨ (K_(n-3) + K2) holds the root"].append(f"n={n}")
            if not Fraction(8, n * n) > Fraction(2, n * n - 6 * n + 6):
                failures["8/n^2 > 2/(n^2 - 6n + 6)"].append(f"n={n}")
            if not rf > rg:
                failures["rho(G2(n)) > rho(K1 ∨ (K_(n-3) + K2))"].append(f"n={n}")

            if n <= self.CROSS_CHECK_MAX:
                for root, spec in ((rf, G2(n)), (rg, join(K(1), union(K(n - 3), K(2))))):
                    value = spectral_radius(realize_graph(spec), tol=self.settings.tol).value
                    worst_route = max(worst_route, abs(value - root))

        for name, bad in failures.items():
            report.add_fact(f"{name}, n=7..{n_max}", float(len(bad)), 0.0, "==")
            report.violations.extend(f"{name}: {item}" for item in bad)
        top = min(n_max, self.CROSS_CHECK_MAX)
        report.add_fact(
            f"cubic root vs power iteration, n=7..{top}", worst_route, ROUTE_TOLERANCE, "<="
        )
        return report
