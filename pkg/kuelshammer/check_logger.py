"""
Check logging for kuelshammer.
Collects pass/fail records of computed-versus-expected assertions and gives a clean summary.
"""

import logging
import threading
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table


class CheckLogger:
    """Centralized record of assertion outcomes for one run."""

    def __init__(self, run_name: str, verbose: bool = False, log_dir: str = "kuelshammer_logs"):
        self.run_name = run_name
        self.verbose = verbose
        self.checks: List[Dict[str, Any]] = []
        self.console = Console(stderr=True)
        self._lock = threading.Lock()

        self.log_dir = Path(log_dir)
        self.log_dir.mkdir(exist_ok=True)

        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        safe_name = run_name.replace(" ", "_").replace("/", "_")
        self.log_file = self.log_dir / f"checks_{safe_name}_{timestamp}.log"

        with open(self.log_file, "w", encoding="utf-8") as f:
            f.write("Kuelshammer Check Log\n")
            f.write(f"Generated: {datetime.now().isoformat()}\n")
            f.write(f"Run: {run_name}\n")
            f.write(f"{'=' * 80}\n\n")

        self._configure_library_logging()

    def _configure_library_logging(self):
        """Send the library's diagnostics to the log file instead of the console."""
        lib_logger = logging.getLogger("kuelshammer")
        for handler in lib_logger.handlers[:]:
            lib_logger.removeHandler(handler)
            handler.close()
        lib_logger.setLevel(logging.DEBUG if self.verbose else logging.INFO)

        file_handler = logging.FileHandler(self.log_file, mode="a", encoding="utf-8")
        file_handler.setFormatter(
            logging.Formatter("[%(asctime)s] %(levelname)s: %(message)s", datefmt="%Y-%m-%d %H:%M:%S")
        )
        lib_logger.addHandler(file_handler)
        lib_logger.propagate = False

    def log_check(self, context: str, name: str, expected: Any, actual: Any, details: str = "") -> bool:
        """Record one check; returns whether it passed."""
        passed = expected == actual
        entry = {
            "timestamp": datetime.now().isoformat(),
            "context": context,
            "name": name,
            "expected": expected,
            "actual": actual,
            "passed": passed,
            "details": details,
        }
        with self._lock:
            self.checks.append(entry)
            with open(self.log_file, "a", encoding="utf-8") as f:
                status = "PASS" if passed else "FAIL"
                f.write(f"[{entry['timestamp']}] {status} {context} :: {name}\n")
                f.write(f"Expected: {expected!r}  Actual: {actual!r}\n")
                if details:
                    f.write(f"Details: {details}\n")
                f.write("-" * 80 + "\n")
        return passed

    def log_error(self, context: str, name: str, exception: Exception) -> None:
        """Record a check that could not run because of an exception."""
        self.log_check(context, name, "no error", type(exception).__name__, str(exception))

    def display_summary(self):
        total = len(self.checks)
        failures = self.get_failures()

        by_name: Dict[str, List[Dict[str, Any]]] = {}
        for check in self.checks:
            by_name.setdefault(check["name"], []).append(check)

        table = Table(title="Checks", show_header=True, header_style="bold magenta")
        table.add_column("Check", style="cyan", no_wrap=True)
        table.add_column("Passed", style="bold green", justify="right")
        table.add_column("Failed", style="bold red", justify="right")
        table.add_column("Failing contexts", style="dim")

        for name, entries in by_name.items():
            bad = [e["context"] for e in entries if not e["passed"]]
            examples = bad[:3] + ([f"... and {len(bad) - 3} more"] if len(bad) > 3 else [])
            table.add_row(name, str(len(entries) - len(bad)), str(len(bad)), ", ".join(examples))

        if failures:
            summary = f"[bold red]{len(failures)}[/bold red] of {total} checks failed"
            style, title = "red", "❌ Verification Summary"
        else:
            summary = f"[bold green]all {total} checks passed[/bold green]"
            style, title = "green", "✅ Verification Summary"
        summary += f"\n[dim]Detailed log: {self.log_file}[/dim]"

        self.console.print()
        self.console.print(Panel(summary, title=title, border_style=style, expand=False))
        if total:
            self.console.print(table)
        self.console.print()

    def get_failures(self) -> List[Dict[str, Any]]:
        return [c for c in self.checks if not c["passed"]]

    def get_check_count(self) -> int:
        return len(self.checks)

    def has_failures(self) -> bool:
        return any(not c["passed"] for c in self.checks)


# Global logger instance - set by the command being run
_global_logger: Optional[CheckLogger] = None


def set_global_logger(logger: Optional[CheckLogger]):
    global _global_logger
    _global_logger = logger


def get_global_logger() -> Optional[CheckLogger]:
    return _global_logger


def log_check(context: str, name: str, expected: Any, actual: Any, details: str = "") -> bool:
    """Record a check with the global logger; without one only the outcome is returned."""
    if _global_logger:
        return _global_logger.log_check(context, name, expected, actual, details)
    return expected == actual
