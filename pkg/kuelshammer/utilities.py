import math
import time
import warnings
from contextlib import contextmanager
from typing import Dict, Iterator, Tuple

import psutil
from rich.console import Console
from rich.panel import Panel
from rich.text import Text

console = Console(stderr=True)

DEFAULT_SEED = 20240601


def setup_warning_filter():
    """Set up a custom warning filter to display nice Rich-formatted notices."""
    def rich_warning_handler(message, category, filename, lineno, file=None, line=None):
        warning_text = str(message)

        if "sampled" in warning_text:
            title = "📝 Sampled check"
            content = warning_text
            style = "blue"
        elif "guard" in warning_text:
            title = "📝 Guard override"
            content = warning_text
            style = "blue"
        else:
            title = "⚠️  Warning"
            content = warning_text
            style = "yellow"

        panel = Panel(
            Text(content, style="white"),
            title=title,
            border_style=style,
            padding=(0, 1)
        )

        console.print(panel)

    warnings.showwarning = rich_warning_handler


def two_adic_valuation(n: int) -> int:
    """Exponent of 2 in n.

    >>> two_adic_valuation(720)
    4
    >>> two_adic_valuation(7)
    0
    """
    if n == 0:
        raise ValueError("two_adic_valuation(0) is undefined")
    n = abs(n)
    return (n & -n).bit_length() - 1


def odd_part(n: int) -> int:
    """
    >>> odd_part(40)
    5
    """
    return abs(n) >> two_adic_valuation(n)


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def lcm_all(values) -> int:
    """
    >>> lcm_all([2, 3, 4])
    12
    >>> lcm_all([])
    1
    """
    out = 1
    for v in values:
        out = math.lcm(out, v)
    return out


def peak_rss_mb() -> float:
    """Resident set size of this process in MB."""
    return round(psutil.Process().memory_info().rss / 2**20, 1)


class StageTimer:
    """Collects wall-clock seconds per named pipeline stage.

    >>> t = StageTimer()
    >>> with t.stage("classes"):
    ...     pass
    >>> sorted(t.as_dict())
    ['classes', 'peak_rss_mb', 'total']
    """

    def __init__(self):
        self.stages: Dict[str, float] = {}
        self._start = time.perf_counter()

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self.stages[name] = round(self.stages.get(name, 0.0) + time.perf_counter() - start, 4)

    def as_dict(self) -> Dict[str, float]:
        out = dict(self.stages)
        out["total"] = round(time.perf_counter() - self._start, 4)
        out["peak_rss_mb"] = peak_rss_mb()
        return out


def congruence_data(q: int) -> Tuple[int, int, int]:
    """Return (sign, n, q') with q - sign = 2^(n-1) q' for q = +-1 mod 8.

    >>> congruence_data(41)
    (1, 4, 5)
    >>> congruence_data(23)
    (-1, 4, 3)
    """
    if q % 8 == 1:
        sign = 1
    elif q % 8 == 7:
        sign = -1
    else:
        raise ValueError(f"q = {q} is not congruent to +-1 mod 8")
    m = q - sign
    return sign, two_adic_valuation(m) + 1, odd_part(m)


if __name__ == "__main__":
    import doctest

    doctest.testmod(optionflags=doctest.ELLIPSIS)
