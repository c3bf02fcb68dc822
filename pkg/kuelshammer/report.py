"""
The JSON report emitted by every command, and its rich rendering.

Top-level keys are input, group, dims, blocks, scalar, assertions and
timings. Values are plain JSON types so that a report survives
to_json/from_json unchanged.

>>> r = Report(input={"command": "pgl2 --q 9"}, dims={"center": 11})
>>> Report.from_json(r.to_json()) == r
True
"""
import json
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Dict, List

import pandas as pd
from rich.console import Console
from rich.table import Table

from .blocks import LEDGER_KEYS, BlockLedger
from .class_algebra import square_map
from .decider import ScalarReport
from .group import a3_family_mismatches
from .utilities import DEFAULT_SEED

ROW_TITLES = {
    "center": "Z",
    "t1perp": "T1perp",
    "zbar": "Zbar",
    "j": "J",
    "j2": "J^2",
    "jmodj2": "J/J^2",
}


def _plain(value: Any) -> Any:
    """Recursively turn numpy scalars and tuples into JSON-native values."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        return value.item()
    return value


@dataclass
class Report:
    input: Dict[str, Any]
    group: Dict[str, Any] = field(default_factory=dict)
    dims: Dict[str, Any] = field(default_factory=dict)
    blocks: Dict[str, Any] = field(default_factory=dict)
    scalar: Dict[str, Any] = field(default_factory=dict)
    assertions: List[Dict[str, Any]] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        for f in fields(self):
            setattr(self, f.name, _plain(getattr(self, f.name)))

    @property
    def ok(self) -> bool:
        return all(a.get("passed", False) for a in self.assertions)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "Report":
        names = {f.name for f in fields(cls)}
        unknown = set(doc) - names
        if unknown:
            raise ValueError(f"unknown report keys: {sorted(unknown)}")
        if "input" not in doc:
            raise ValueError("report has no input section")
        return cls(**doc)

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))


# ------------------------------------------------------------- builders


def _assertion(name: str, expected: Any, actual: Any, context: str = "") -> Dict[str, Any]:
    return {"name": name, "context": context, "expected": expected, "actual": actual, "passed": expected == actual}


def pgl2_group_section(sr: ScalarReport, seed: int = DEFAULT_SEED) -> Dict[str, Any]:
    """Class list with centralizers, 2-regular classes, squaring fibers and the A3 family check."""
    G = sr.group
    table = G.conjugacy_cosets_table()
    return {
        "name": repr(G),
        "order": G.order,
        "q": sr.q,
        "p": sr.p,
        "k": sr.k,
        "n": sr.n,
        "q_odd": sr.q_odd,
        "sign": sr.sign,
        "num_classes": sr.num_classes,
        "classes": json.loads(table.to_json(orient="records")),
        "two_regular": [G.class_label(c) for c in G.regular_classes(2)],
        "square_fibers": square_map(G, seed).labelled_fibers(1),
        "a3_family_mismatches": a3_family_mismatches(G),
        "sylow": {"order": sr.sylow_order, "dihedral": sr.sylow_dihedral},
    }


def pgl2_report(sr: ScalarReport, command: str, depth: int = 1) -> Report:
    group = pgl2_group_section(sr, sr.seed)
    assertions = [dict(c, context=f"q={sr.q}") for c in sr.checks]
    assertions.append(
        _assertion("a3_families", [], group["a3_family_mismatches"], f"q={sr.q}")
    )
    return Report(
        input={"command": command, "q": sr.q, "depth": depth, "seed": sr.seed},
        group=group,
        dims=dict(sr.dims),
        blocks=sr.ledger.to_dict(),
        scalar={
            "c": sr.c,
            "s": sr.s,
            "routes": sr.routes,
            "principal": sr.principal,
            "field_degree": sr.field_degree,
        },
        assertions=assertions,
        timings=sr.timings,
    )


def algebra_report(
    command: str,
    path: str,
    validation: Dict[str, Any],
    dims: Dict[str, Any],
    timings: Dict[str, float],
    seed: int = DEFAULT_SEED,
) -> Report:
    return Report(
        input={"command": command, "file": path, "seed": seed},
        dims=dims,
        assertions=[_assertion("validation", True, validation["ok"], path)],
        timings=timings,
        blocks={"validation": validation},
    )


# -------------------------------------------------------------- rendering


def ledger_table(ledger: BlockLedger, title: str = "Invariant ledger") -> Table:
    """Rows Z ... J/J^2, columns kG, B0 and the cyclic families."""
    frame: pd.DataFrame = ledger.family_frame()
    table = Table(title=title, show_header=True, header_style="bold magenta")
    table.add_column("", style="cyan", no_wrap=True)
    for column in frame.columns:
        table.add_column(str(column), justify="right")
    for key in LEDGER_KEYS:
        table.add_row(ROW_TITLES[key], *(str(int(v)) for v in frame.loc[key]))
    return table


def dims_table(dims: Dict[str, Any], title: str = "Dimensions") -> Table:
    table = Table(title=title, show_header=True, header_style="bold magenta")
    table.add_column("space", style="cyan")
    table.add_column("dim", justify="right")
    for key, value in dims.items():
        table.add_row(ROW_TITLES.get(key, key), str(value))
    return table


def assertions_table(assertions: List[Dict[str, Any]]) -> Table:
    table = Table(title="Assertions", show_header=True, header_style="bold magenta")
    table.add_column("check", style="cyan")
    table.add_column("expected", justify="right")
    table.add_column("computed", justify="right")
    table.add_column("", justify="center")
    for a in assertions:
        mark = "[green]✓[/green]" if a["passed"] else "[red]✗[/red]"
        table.add_row(a["name"], str(a["expected"]), str(a["actual"]), mark)
    return table


def render_pgl2(console: Console, report: Report, ledger: BlockLedger) -> None:
    group = report.group
    console.print(f"[bold blue]{group['name']}[/bold blue]  |G| = {group['order']}, "
                  f"n = {group['n']}, q' = {group['q_odd']}")
    classes = Table(title="Conjugacy classes", show_header=True, header_style="bold magenta")
    for column in ("class", "representative", "size", "centralizer", "element_order"):
        classes.add_column(column, justify="right" if column != "class" else "left")
    for row in group["classes"]:
        classes.add_row(*(str(row[c]) for c in ("class", "representative", "size", "centralizer", "element_order")))
    console.print(classes)
    console.print(f"[dim]2-regular classes: {', '.join(group['two_regular'])}[/dim]")
    console.print(ledger_table(ledger))
    scalar = report.scalar
    console.print(
        f"[green]✓[/green] principal block: dim J/J^2 = {scalar['routes']['direct']} "
        f"(subtraction route {scalar['routes']['subtraction']}), so c = [bold]{scalar['c']}[/bold]"
    )
    failed = [a for a in report.assertions if not a["passed"]]
    if failed:
        console.print(assertions_table(failed))


def render_algebra(console: Console, report: Report) -> None:
    console.print(f"[bold blue]{report.input['file']}[/bold blue]")
    console.print(f"[dim]{report.blocks['validation']['summary']}[/dim]")
    console.print(dims_table(report.dims))
