#!/usr/bin/env python3
"""
Command-line interface for kuelshammer.
"""
import sys
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console

try:
    from .blocks import radical_chain
    from .check_logger import CheckLogger
    from .decider import decide_scalar
    from .exceptions import KuelshammerError, ValidationFailure
    from .report import algebra_report, assertions_table, pgl2_report, render_algebra, render_pgl2
    from .symalg import AlgebraTable
    from .utilities import DEFAULT_SEED, StageTimer, setup_warning_filter
    from .verify import verify_formulas
except ImportError:
    from kuelshammer.blocks import radical_chain
    from kuelshammer.check_logger import CheckLogger
    from kuelshammer.decider import decide_scalar
    from kuelshammer.exceptions import KuelshammerError, ValidationFailure
    from kuelshammer.report import algebra_report, assertions_table, pgl2_report, render_algebra, render_pgl2
    from kuelshammer.symalg import AlgebraTable
    from kuelshammer.utilities import DEFAULT_SEED, StageTimer, setup_warning_filter
    from kuelshammer.verify import verify_formulas

# Set up rich warning formatting
setup_warning_filter()

# Create rich console for stderr output
console = Console(stderr=True)

app = typer.Typer(help="Kuelshammer ideals, blocks and the scalar c for kPGL_2(q) in characteristic 2.")

USAGE_EXIT = 2


def _fail(exc: Exception) -> None:
    """Print an expected error without a traceback and exit with its code."""
    if isinstance(exc, ValidationFailure):
        console.print(f"[red]Error:[/red] {exc}")
        report = getattr(exc, "report", None)
        if report is not None:
            for v in report.violations[:5]:
                console.print(f"  [dim]{v.kind} at {v.witness} {v.detail}[/dim]")
        sys.exit(exc.exit_code)
    if isinstance(exc, KuelshammerError):
        console.print(f"[red]Error:[/red] {exc}")
        sys.exit(exc.exit_code)
    if isinstance(exc, ValueError):
        console.print(f"[red]Error:[/red] {exc}")
        sys.exit(USAGE_EXIT)
    console.print(f"[red]Unexpected error:[/red] {exc}")
    sys.exit(1)


@app.command("pgl2")
def cmd_pgl2(
    q: int = typer.Option(..., "--q", help="Odd prime power q = +-1 mod 8"),
    json_output: bool = typer.Option(False, "--json", help="Print the JSON report to stdout"),
    depth: int = typer.Option(1, "--depth", help="Length of the T_n^perp chain"),
    guard: Optional[int] = typer.Option(None, "--guard", help="Element guard for the group table"),
    seed: int = typer.Option(DEFAULT_SEED, "--seed", help="Seed for every randomized check"),
    allow_large: bool = typer.Option(False, "--allow-large", help="Raise the element guard to cover q <= 127"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Show progress"),
):
    """
    Classes, center, T_1^perp, block ledger and the scalar c for PGL_2(q).

    EXAMPLE USAGE:

        kuelshammer pgl2 --q 9
        kuelshammer pgl2 --q 41 --json > q41.json
    """
    command = f"pgl2 --q {q} --depth {depth} --seed {seed}"
    try:
        if depth < 1:
            raise ValueError("--depth must be at least 1")
        sr = decide_scalar(q, guard=guard, allow_large=allow_large, depth=depth, seed=seed, verbose=verbose)
        report = pgl2_report(sr, command, depth)
    except Exception as exc:
        _fail(exc)

    if json_output:
        print(report.to_json())
    else:
        render_pgl2(console, report, sr.ledger)
    if not report.ok:
        console.print(f"[red]{sum(not a['passed'] for a in report.assertions)} assertion(s) failed[/red]")
        sys.exit(1)


@app.command("algebra")
def cmd_algebra(
    file: Path = typer.Option(..., "--file", help="Algebra table in JSON format"),
    json_output: bool = typer.Option(False, "--json", help="Print the JSON report to stdout"),
    depth: int = typer.Option(1, "--depth", help="Length of the T_n^perp chain"),
    seed: int = typer.Option(DEFAULT_SEED, "--seed", help="Seed for sampled associativity checks"),
):
    """
    Validate a symmetric algebra table and report Z, T_n^perp, Zbar and radical dims.

    The file holds field {p, m}, dim, labels, unit, products [i, j, k, c]
    and form_functional.
    """
    command = f"algebra --file {file}"
    timer = StageTimer()
    try:
        if depth < 1:
            raise ValueError("--depth must be at least 1")
        with timer.stage("parse"):
            table = AlgebraTable.from_file(file)
        with timer.stage("validate"):
            validation = table.validate(seed)
        if not validation.ok:
            raise ValidationFailure(f"invalid algebra table {file}: {validation.summary()}", validation)
        with timer.stage("kuelshammer"):
            dims = {"dim": table.dim, "center": table.center().dim}
            for n in range(1, depth + 1):
                dims[f"t{n}perp"] = table.tn_perp(n).dim
        with timer.stage("radical"):
            zbar = table.zbar_algebra(1)
            chain = radical_chain(zbar)
            chain.verify()
            j, j2 = chain.power(1).dim, chain.power(2).dim
            dims.update(zbar=zbar.dim, j=j, j2=j2, jmodj2=j - j2, radical_chain=chain.dims)
        report = algebra_report(
            command,
            str(file),
            {**validation.to_dict(), "summary": validation.summary()},
            dims,
            timer.as_dict(),
            seed,
        )
    except Exception as exc:
        _fail(exc)

    if json_output:
        print(report.to_json())
    else:
        render_algebra(console, report)


@app.command("verify-formulas", hidden=True)
@app.command("verify-paper")
def cmd_verify_paper(
    qmax: int = typer.Option(..., "--qmax", help="Largest q to include (at least 9)"),
    threads: int = typer.Option(4, "--threads", help="Worker threads"),
    seed: int = typer.Option(DEFAULT_SEED, "--seed", help="Seed for every randomized check"),
    json_output: bool = typer.Option(False, "--json", help="Print the JSON report to stdout"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug-level log file"),
):
    """
    Check every closed-form dimension, identity and basis for q <= qmax
    against independent computation. Exits non-zero iff a check fails.
    """
    try:
        if qmax < 9:
            raise ValueError(f"--qmax must be at least 9, got {qmax}")
        check_logger = CheckLogger(f"verify_q{qmax}", verbose=verbose)
        report = verify_formulas(
            qmax,
            threads=threads,
            seed=seed,
            check_logger=check_logger,
            command=f"verify-paper --qmax {qmax} --threads {threads} --seed {seed}",
        )
    except Exception as exc:
        _fail(exc)

    check_logger.display_summary()
    if json_output:
        print(report.to_json())
    failed = [a for a in report.assertions if not a["passed"]]
    if failed:
        console.print(assertions_table(failed))
        sys.exit(1)


if __name__ == "__main__":
    app()
