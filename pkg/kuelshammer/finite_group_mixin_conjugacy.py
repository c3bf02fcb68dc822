import logging
from typing import TYPE_CHECKING, List, Optional

import numpy as np

from .class_partition import ClassPartition, ConjClass
from .exceptions import InvariantViolation

if TYPE_CHECKING:
    from .finite_group import GroupABC

logger = logging.getLogger("kuelshammer")


class ConjugacyModule:
    """Conjugacy classes of a group, computed lazily and cached."""

    def __init__(self, group: "GroupABC"):
        self.group = group
        self._partition: Optional[ClassPartition] = None

    def orbit(self, x: int) -> np.ndarray:
        """Sorted ids of {g x g^-1 : g in G}."""
        g = self.group.elements()
        xs = np.full(len(g), x, dtype=np.int64)
        conj = self.group.multiply(self.group.multiply(g, xs), self.group.invert(g))
        return np.unique(conj)

    @property
    def partition(self) -> ClassPartition:
        if self._partition is None:
            self._partition = self.compute()
        return self._partition

    def compute(self) -> ClassPartition:
        group = self.group
        class_of = np.full(group.order, -1, dtype=np.int64)
        classes: List[ConjClass] = []

        def add(x: int):
            cid = len(classes)
            members = self.orbit(x)
            class_of[members] = cid
            classes.append(ConjClass(cid, int(x), members, group.class_label(cid)))

        for x in group.class_seeds():
            if class_of[x] != -1:
                raise InvariantViolation(
                    f"class seeds {group.describe(x)} and class {class_of[x]} are conjugate"
                )
            add(x)
        while True:
            missing = np.flatnonzero(class_of < 0)
            if len(missing) == 0:
                break
            add(int(missing[0]))
        logger.info("%s: %d conjugacy classes", group, len(classes))
        partition = ClassPartition(classes, class_of, group.order)
        partition.verify()
        return partition

    def regular_classes(self, p: int = 2) -> List[int]:
        """cids of classes whose elements have order prime to p."""
        orders = self.group.element_order(self.partition.representatives)
        return [c.cid for c, o in zip(self.partition, orders) if o % p]
