"""
The dihedral-type algebras D(2A)^s(c) with two simple modules.

The quiver has a loop a at vertex 0, an arrow b from 0 to 1 and an arrow c
from 1 to 0; words are read left to right (so "bc" runs 0 -> 1 -> 0). The
relations are cb = 0, aa = c (abc)^s and (abc)^s = (bca)^s, together with
the convention that words of arrow-length above 3s vanish.

>>> A = d2a_table(1, 0)
>>> A.dim, d2a_path_count(1)
(10, 10)
>>> A.labels[:5]
['e0', 'e1', 'a', 'abc', 'bc']
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from .exceptions import ValidationFailure
from .ffield import field_create
from .symalg import AlgebraTable, ValidationReport
from .utilities import DEFAULT_SEED, is_power_of_two

logger = logging.getLogger("kuelshammer")

_START = {"a": 0, "b": 0, "c": 1}
_END = {"a": 0, "b": 1, "c": 0}


@dataclass(frozen=True)
class D2APresentation:
    """
    :param s: Socle exponent, a power of two.
    :param c: The scalar in aa = c (abc)^s.
    """

    s: int
    c: int

    def __post_init__(self):
        if self.s < 1 or not is_power_of_two(self.s):
            raise ValueError(f"s = {self.s} must be a positive power of two")
        if self.c not in (0, 1):
            raise ValueError(f"c = {self.c} must be 0 or 1")

    @property
    def n(self) -> int:
        """Defect n with s = 2^(n-2)."""
        return self.s.bit_length() + 1

    @property
    def socle_words(self) -> Tuple[str, str]:
        s = self.s
        return "abc" * s, "c" + "abc" * (s - 1) + "ab"

    @property
    def max_length(self) -> int:
        return 3 * self.s

    def table(self, seed: int = DEFAULT_SEED, config=None) -> AlgebraTable:
        return d2a_table(self.s, self.c, seed=seed, config=config)


def _alternating(first: str, units: int) -> str:
    """Alternating product of the units a and bc, starting with first."""
    pair = ("a", "bc") if first == "a" else ("bc", "a")
    return "".join(pair[t % 2] for t in range(units))


def d2a_words(s: int) -> List[str]:
    """Nonzero words of positive length, grouped by (start, end) vertex."""
    to0 = [_alternating("a", t) for t in range(1, 2 * s + 1)]
    to0 += [_alternating("bc", t) for t in range(1, 2 * s)]
    to1 = ["b"] + [_alternating("a" if t % 2 else "bc", t) + "b" for t in range(1, 2 * s)]
    from1 = ["c"] + ["c" + _alternating("a", t) for t in range(1, 2 * s)]
    loop1 = ["c" + "abc" * u + "ab" for u in range(s)]
    return to0 + to1 + from1 + loop1


def _reduce(word: str, pres: D2APresentation) -> Optional[Tuple[str, int]]:
    """Normal form of a concatenated word as (word, coefficient), or None for zero."""
    soc0 = pres.socle_words[0]
    if word == "aa":
        return (soc0, 1) if pres.c else None
    if "cb" in word or "aa" in word or len(word) > pres.max_length:
        return None
    if word == "bca" * pres.s:
        return soc0, 1
    return word, 1


def _basis_products(pres: D2APresentation, index: Dict[str, int]) -> List[Tuple[int, int, int, int]]:
    words = list(index)
    products = []
    for x in words:
        for y in words:
            if x in ("e0", "e1") or y in ("e0", "e1"):
                out = _idempotent_product(x, y)
            elif _END[x[-1]] != _START[y[0]]:
                out = None
            else:
                out = _reduce(x + y, pres)
            if out is None:
                continue
            w, coeff = out
            if w not in index:
                raise ValidationFailure(f"product {x}*{y} = {w} is not a basis word")
            products.append((index[x], index[y], index[w], coeff))
    return products


def _idempotent_product(x: str, y: str) -> Optional[Tuple[str, int]]:
    if x in ("e0", "e1") and y in ("e0", "e1"):
        return (x, 1) if x == y else None
    if x in ("e0", "e1"):
        return (y, 1) if int(x[1]) == _START[y[0]] else None
    return (x, 1) if int(y[1]) == _END[x[-1]] else None


def _socle_supports(pres: D2APresentation) -> List[Tuple[str, ...]]:
    soc0, soc1 = pres.socle_words
    return [(soc0, soc1), (soc0,), (soc1,)]


def d2a_table(s: int, c: int, seed: int = DEFAULT_SEED, config=None) -> AlgebraTable:
    """
    D(2A)^s(c) over F_2 with lambda supported on socle words.

    The first support whose table validates is used and recorded in
    ``socle_support``; if none does the construction is wrong and a
    ValidationFailure carries the last report.

    >>> A = d2a_table(4, 1)
    >>> A.basis_product(A.labels.index("a"), A.labels.index("a")).nonzero()[0].tolist() == [A.labels.index("abc" * 4)]
    True
    """
    pres = D2APresentation(s, c)
    words = d2a_words(s)
    labels = ["e0", "e1"] + words
    index = {w: i for i, w in enumerate(labels)}
    if len(index) != len(labels):
        raise ValidationFailure("repeated word in the D(2A) basis")
    expected = d2a_path_count(s)
    if len(labels) != expected:
        raise ValidationFailure(f"D(2A) basis has {len(labels)} words, enumeration gives {expected}")
    products = _basis_products(pres, index)
    unit = np.zeros(len(labels), dtype=np.int64)
    unit[[0, 1]] = 1

    report: Optional[ValidationReport] = None
    for support in _socle_supports(pres):
        form = np.zeros(len(labels), dtype=np.int64)
        form[[index[w] for w in support]] = 1
        table = AlgebraTable(field_create(2, 1), labels, unit, products, form, config)
        table.socle_support = list(support)
        report = table.validate(seed)
        if report.ok:
            logger.info("D(2A)^%d(%d): dim %d, socle support %s", s, c, table.dim, support)
            return table
        logger.info("socle support %s rejected: %s", support, report.summary())
    raise ValidationFailure(f"D(2A)^{s}({c}) has no valid socle support", report)


def d2a_path_count(s: int) -> int:
    """Paths of D(2A)^s counted by brute-force enumeration of arrow words.

    Words avoiding cb and aa of length at most 3s are listed depth first;
    (bca)^s is identified with (abc)^s and the two vertex idempotents are
    added.

    >>> [d2a_path_count(s) for s in (1, 2, 4, 8)]
    [10, 19, 37, 73]
    """
    if s < 1:
        raise ValueError("s must be positive")
    limit = 3 * s
    seen = set()
    stack: List[str] = list("abc")
    while stack:
        w = stack.pop()
        if "cb" in w or "aa" in w or len(w) > limit:
            continue
        seen.add(w)
        stack.extend(w + x for x in "abc" if _END[w[-1]] == _START[x])
    if "bca" * s in seen:
        seen.discard("bca" * s)
    return len(seen) + 2



if __name__ == "__main__":
    import doctest

    doctest.testmod(optionflags=doctest.ELLIPSIS)
