from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from .exceptions import InvariantViolation


@dataclass(eq=False)
class ConjClass:
    cid: int
    representative: int
    elements: np.ndarray
    label: Optional[str] = None

    @property
    def size(self) -> int:
        return int(len(self.elements))

    def __contains__(self, x: int) -> bool:
        i = np.searchsorted(self.elements, x)
        return bool(i < len(self.elements) and self.elements[i] == x)


@dataclass(eq=False)
class ClassPartition:
    """Conjugacy classes of a finite group, with the element-to-class index.

    class_of[x] is the cid of the class containing element id x.
    """

    classes: List[ConjClass]
    class_of: np.ndarray
    group_order: int = field(default=0)

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, cid: int) -> ConjClass:
        return self.classes[cid]

    @property
    def sizes(self) -> np.ndarray:
        return np.array([c.size for c in self.classes], dtype=np.int64)

    @property
    def representatives(self) -> np.ndarray:
        return np.array([c.representative for c in self.classes], dtype=np.int64)

    @property
    def labels(self) -> List[str]:
        return [c.label or f"K{c.cid}" for c in self.classes]

    def class_id(self, x: int) -> int:
        return int(self.class_of[x])

    def cid_for_label(self, label: str) -> int:
        for c in self.classes:
            if c.label == label:
                return c.cid
        raise KeyError(label)

    def verify(self) -> None:
        """Sizes add up, divide |G|, and the index agrees with the member lists."""
        n = self.group_order or len(self.class_of)
        if int(self.sizes.sum()) != n:
            raise InvariantViolation(f"class sizes sum to {int(self.sizes.sum())}, expected {n}")
        for c in self.classes:
            if n % c.size:
                raise InvariantViolation(f"class {c.cid} of size {c.size} does not divide {n}")
            if c.representative not in c:
                raise InvariantViolation(f"representative of class {c.cid} is not a member")
            if not (self.class_of[c.elements] == c.cid).all():
                raise InvariantViolation(f"class index disagrees with members of class {c.cid}")
