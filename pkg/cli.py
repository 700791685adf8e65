#!/usr/bin/env python3

"""
hamspec CLI - spectral radii, Hamiltonicity and verification checks from the shell.

Exit codes:
- 0: success / PASS
- 1: a check reported FAIL (or PARTIAL)
- 2: usage or parse error
- 3: the requested range needs --long-running (or cannot be enumerated at all)
"""

import csv
import io
import json
import os
import sys
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
import typer
from rich.console import Console
from rich.table import Table

from hamspec.config import get_settings
from hamspec.errors import HamspecError, InfeasibleRangeError
from hamspec.graphs import (
    graph6_decode,
    graph6_string,
    members_of_order,
    parse_family,
    realize,
)
from hamspec.hamilton import has_hamilton_cycle, has_hamilton_path
from hamspec.hamilton.kernels import hamiltonian_many, traceable_many
from hamspec.logs import configure_logging
from hamspec.models import FamilyTag, Graph, VerificationReport
from hamspec.spectral import compare_to_threshold, integer_or_none, spectral_radius, spectral_radius_batch
from hamspec.verify import CHECKS, EnumerationFilters, iter_batches, rows_to_csv, run_check, run_suite, table_rows

app = typer.Typer(name="hamspec", help="hamspec CLI - spectral conditions for Hamilton paths and cycles")
console = Console()
err_console = Console(stderr=True)


class OutputFormat(str, Enum):
    json = "json"
    csv = "csv"
    text = "text"


def _fail(message: str, code: int) -> None:
    err_console.print(f"❌ {message}")
    sys.exit(code)


def _apply_overrides(tol: Optional[float], verbose: bool) -> None:
    """Push CLI overrides into the environment so worker processes see them too."""
    if tol is not None:
        if tol <= 0:
            _fail("--tol must be > 0", 2)
        os.environ["HAMSPEC_TOL"] = repr(tol)
        get_settings.cache_clear()
    configure_logging("INFO" if verbose else None)


def _load_graphs(family: Optional[str], graph6: Optional[str]) -> List[Tuple[str, Graph]]:
    if family and graph6:
        _fail("pass either --family or --graph6, not both", 2)
    if family:
        spec = parse_family(family)
        realized = realize(spec)
        if isinstance(realized, list):
            members = members_of_order(spec.tag, spec.params[0])
            return [(member.label(), G) for member, G in zip(members, realized)]
        return [(spec.label(), realized)]
    if graph6:
        return [(graph6, graph6_decode(graph6))]
    if sys.stdin.isatty():
        _fail("no graph given: use --family, --graph6 or pipe graph6 lines on stdin", 2)
    lines = [line.strip() for line in sys.stdin.read().splitlines() if line.strip()]
    if not lines:
        _fail("stdin held no graph6 lines", 2)
    return [(line, graph6_decode(line)) for line in lines]


def _emit_json(data) -> None:
    typer.echo(json.dumps(data, indent=2, ensure_ascii=False))


def _emit_csv(header: List[str], rows: List[list]) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    typer.echo(buffer.getvalue(), nl=False)


def _no_csv(output: OutputFormat, command: str) -> None:
    if output is OutputFormat.csv:
        _fail(f"{command} has no CSV output; use json or text", 2)


@app.command()
def rho(
    family: Optional[str] = typer.Option(None, "--family", "-f", help='Family expression, e.g. "G2:7"'),
    graph6: Optional[str] = typer.Option(None, "--graph6", "-g", help="graph6 string"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Bracket width (default 1e-10)"),
    output: OutputFormat = typer.Option(OutputFormat.text, "--output", help="json, csv or text"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress to stderr"),
):
    """Print the spectral radius and its certified bracket."""

    _apply_overrides(tol, verbose)
    try:
        graphs = _load_graphs(family, graph6)
        results = []
        for name, G in graphs:
            est = spectral_radius(G)
            results.append({"graph": name, "n": G.n, "m": G.m, **est.model_dump(), "width": est.width})
    except HamspecError as e:
        _fail(str(e), 2)

    if output is OutputFormat.csv:
        _emit_csv(
            ["graph", "n", "m", "value", "lower", "upper", "iterations"],
            [
                [r["graph"], r["n"], r["m"], repr(r["value"]), repr(r["lower"]), repr(r["upper"]), r["iterations"]]
                for r in results
            ],
        )
        return
    if output is OutputFormat.json:
        _emit_json(results if len(results) > 1 else results[0])
        return

    table = Table(title="Spectral radius")
    table.add_column("Graph", style="cyan")
    table.add_column("n", justify="right")
    table.add_column("m", justify="right")
    table.add_column("rho", style="green")
    table.add_column("bracket", style="yellow")
    for row in results:
        table.add_row(
            row["graph"], str(row["n"]), str(row["m"]), f"{row['value']:.12f}",
            f"[{row['lower']:.12f}, {row['upper']:.12f}]",
        )
    console.print(table)


@app.command()
def ham(
    family: Optional[str] = typer.Option(None, "--family", "-f", help="Family expression"),
    graph6: Optional[str] = typer.Option(None, "--graph6", "-g", help="graph6 string"),
    path: bool = typer.Option(False, "--path", help="Only decide the Hamilton path"),
    cycle: bool = typer.Option(False, "--cycle", help="Only decide the Hamilton cycle"),
    output: OutputFormat = typer.Option(OutputFormat.text, "--output", help="json or text"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress to stderr"),
):
    """Decide Hamilton path / cycle exactly and print a witness."""

    _apply_overrides(None, verbose)
    _no_csv(output, "ham")
    want_path, want_cycle = (path or not cycle), (cycle or not path)
    try:
        graphs = _load_graphs(family, graph6)
        results = []
        for name, G in graphs:
            row = {"graph": name, "n": G.n}
            if want_path:
                row["path"] = has_hamilton_path(G).model_dump()
            if want_cycle:
                row["cycle"] = has_hamilton_cycle(G).model_dump()
            results.append(row)
    except HamspecError as e:
        _fail(str(e), 2)

    if output is OutputFormat.json:
        _emit_json(results if len(results) > 1 else results[0])
        return

    for row in results:
        console.print(f"[bold]{row['graph']}[/bold] (n={row['n']})")
        for kind in ("path", "cycle"):
            if kind not in row:
                continue
            witness = row[kind]
            if witness["found"]:
                console.print(f"  ✅ Hamilton {kind}: {witness['order']}")
            else:
                console.print(f"  no Hamilton {kind}")


def _orders(n: Optional[List[int]], n_min: Optional[int], n_max: Optional[int]) -> List[int]:
    orders = list(n or [])
    if n_min is not None or n_max is not None:
        if n_min is None or n_max is None or n_min > n_max:
            _fail("--n-min and --n-max must be given together with n-min <= n-max", 2)
        orders += list(range(n_min, n_max + 1))
    return sorted(set(orders))


def _print_report(report: VerificationReport) -> None:
    colour = {"PASS": "green", "FAIL": "red", "PARTIAL": "yellow"}[report.verdict.value]
    console.print(
        f"[bold]{report.check_id}[/bold] n={report.n[0]}..{report.n[1]} "
        f"scanned={report.scanned} verdict=[{colour}]{report.verdict.value}[/{colour}]"
    )
    if report.exceptions:
        table = Table(title=f"{report.check_id}: exceptions")
        table.add_column("graph6", style="cyan")
        table.add_column("Family", style="green")
        table.add_column("Occurrences", justify="right")
        for entry in report.exceptions:
            table.add_row(entry.graph6, entry.family or "-", str(entry.occurrences))
        console.print(table)
    if report.facts:
        table = Table(title=f"{report.check_id}: numeric facts")
        table.add_column("Fact", style="cyan")
        table.add_column("lhs")
        table.add_column("rel")
        table.add_column("rhs")
        table.add_column("Holds")
        for fact in report.facts:
            mark = "✅" if fact.holds else ("❌" if fact.required else "·")
            table.add_row(fact.name, f"{fact.lhs:.10g}", fact.relation, f"{fact.rhs:.10g}", mark)
        console.print(table)
    for item in report.violations:
        console.print(f"  ❌ violation: {item}")
    for note in report.notes:
        console.print(f"  [dim]{note}[/dim]")


@app.command()
def verify(
    check: str = typer.Option("all", "--check", help=f"One of: {', '.join(CHECKS)}, all"),
    n: Optional[List[int]] = typer.Option(None, "--n", help="Order(s) to check (repeatable)"),
    n_min: Optional[int] = typer.Option(None, "--n-min", help="Lowest order"),
    n_max: Optional[int] = typer.Option(None, "--n-max", help="Highest order"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Working bracket width"),
    jobs: Optional[int] = typer.Option(None, "--jobs", "-j", help="Worker processes (default: all cores)"),
    output: OutputFormat = typer.Option(OutputFormat.text, "--output", help="json or text"),
    long_running: bool = typer.Option(False, "--long-running", help="Allow the expensive orders"),
    timing: bool = typer.Option(True, "--timing/--no-timing", help="Include elapsed_ms in JSON"),
    samples: Optional[int] = typer.Option(None, "--samples", help="Random samples for sampled parts"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress to stderr"),
):
    """Run a verification check and print its report."""

    _apply_overrides(tol, verbose)
    _no_csv(output, "verify")
    if jobs is not None and jobs < 1:
        _fail("--jobs must be >= 1", 2)
    if samples is not None and samples < 1:
        _fail("--samples must be >= 1", 2)

    try:
        if check == "all":
            reports = run_suite(jobs=jobs, long_running=long_running, samples=samples)
        else:
            orders = _orders(n, n_min, n_max)
            reports = [
                run_check(check, orders, jobs=jobs, long_running=long_running, samples=samples)
            ]
    except InfeasibleRangeError as e:
        _fail(str(e), 3)
    except HamspecError as e:
        _fail(str(e), 2)

    if output is OutputFormat.json:
        if len(reports) == 1:
            typer.echo(reports[0].to_json(include_timing=timing))
        else:
            _emit_json([r.to_dict(include_timing=timing) for r in reports])
    else:
        for report in reports:
            _print_report(report)

    if not all(r.passed for r in reports):
        sys.exit(1)


@app.command()
def tables(
    output: OutputFormat = typer.Option(OutputFormat.csv, "--output", help="csv, json or text"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Bracket width for the power iteration"),
):
    """Reproduce the two tables of exceptional spectral radii."""

    _apply_overrides(tol, False)
    rows = table_rows(get_settings().tol)
    if output is OutputFormat.csv:
        typer.echo(rows_to_csv(rows), nl=False)
    elif output is OutputFormat.json:
        _emit_json([row.model_dump() for row in rows])
    else:
        table = Table(title="Exceptional spectral radii")
        table.add_column("Set")
        table.add_column("Graph", style="cyan")
        table.add_column("Printed")
        table.add_column("Computed", style="green")
        table.add_column("|error|", style="yellow")
        for row in rows:
            table.add_row(
                row.table, row.graph, f"{row.printed_value:.4f}",
                f"{row.computed_value:.10f}", f"{row.abs_error:.1e}",
            )
        console.print(table)

    if any(row.abs_error > 1e-3 for row in rows):
        sys.exit(1)


@app.command()
def search(
    n: int = typer.Option(..., "--n", help="Order"),
    min_edges: int = typer.Option(0, "--min-edges", help="Lower end of the edge window"),
    max_edges: Optional[int] = typer.Option(None, "--max-edges", help="Upper end of the edge window"),
    min_degree: int = typer.Option(0, "--min-degree", help="Minimum degree"),
    connected: bool = typer.Option(False, "--connected", help="Connected graphs only"),
    no_path: bool = typer.Option(False, "--no-path", help="Keep graphs without a Hamilton path"),
    no_cycle: bool = typer.Option(False, "--no-cycle", help="Keep graphs without a Hamilton cycle"),
    rho_min: Optional[float] = typer.Option(None, "--rho-min", help="Keep graphs with rho >= this"),
    limit: int = typer.Option(100, "--limit", help="Stop after this many survivors"),
):
    """Enumerate labeled graphs with filters and print survivors as graph6."""

    filters = EnumerationFilters(
        min_edges=min_edges, max_edges=max_edges, min_degree=min_degree, connected=connected
    )
    printed = 0
    try:
        for batch in iter_batches(n, filters):
            if no_path:
                batch = batch.select(~traceable_many(batch.rows, n))
            if no_cycle and len(batch):
                batch = batch.select(~hamiltonian_many(batch.rows, n))
            if rho_min is not None and len(batch):
                brackets = spectral_radius_batch(batch.rows, n, targets=np.full(len(batch), rho_min))
                keep = brackets.lower > rho_min
                # brackets touching rho_min are settled one graph at a time
                for i in np.flatnonzero(~keep & (brackets.upper >= rho_min)):
                    keep[i] = compare_to_threshold(
                        batch.graph(int(i)), rho_min, strict=False, exact_threshold=integer_or_none(rho_min)
                    ).holds
                batch = batch.select(keep)
            for i in range(len(batch)):
                typer.echo(graph6_string(batch.graph(i)))
                printed += 1
                if printed >= limit:
                    return
    except InfeasibleRangeError as e:
        _fail(str(e), 3)
    except HamspecError as e:
        _fail(str(e), 2)


@app.command()
def families(
    n: int = typer.Option(..., "--n", help="Order"),
):
    """List the members of both exceptional sets at order n."""

    table = Table(title=f"Exceptional graphs on {n} vertices")
    table.add_column("Set", style="cyan")
    table.add_column("Member", style="green")
    table.add_column("Expression")
    table.add_column("graph6", style="yellow")
    table.add_column("rho", justify="right")
    try:
        for tag in (FamilyTag.CAL_G1, FamilyTag.CAL_G2):
            for spec in members_of_order(tag, n):
                G = realize(spec)
                table.add_row(
                    tag.value, spec.label(), spec.to_expression(), graph6_string(G),
                    f"{spectral_radius(G).value:.4f}",
                )
    except HamspecError as e:
        _fail(str(e), 2)
    console.print(table)


@app.command()
def config():
    """Show current configuration."""

    try:
        settings = get_settings()

        table = Table(title="hamspec Configuration")
        table.add_column("Setting", style="cyan")
        table.add_column("Value", style="green")

        for name, value in settings.model_dump().items():
            table.add_row(name, str(value))

        console.print(table)

    except Exception as e:
        console.print(f"❌ Error reading configuration: {str(e)}")
        sys.exit(1)


if __name__ == "__main__":
    app()
