from typing import List, Optional, Sequence

import numpy as np

from .finite_group import GroupABC


class GroupProduct(GroupABC):
    """Direct product A x B with id(a, b) = a * |B| + b."""

    kind = "product"

    def __init__(self, left: GroupABC, right: GroupABC, **kwargs):
        self.left = left
        self.right = right
        super().__init__(left.order * right.order, **kwargs)

    def split(self, ids: np.ndarray):
        return np.divmod(np.asarray(ids, dtype=np.int64), self.right.order)

    def join(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return a * self.right.order + b

    def multiply(self, a, b):
        a1, a2 = self.split(a)
        b1, b2 = self.split(b)
        return self.join(self.left.multiply(a1, b1), self.right.multiply(a2, b2))

    def invert(self, a):
        a1, a2 = self.split(a)
        return self.join(self.left.invert(a1), self.right.invert(a2))

    @property
    def identity(self) -> int:
        return self.left.identity * self.right.order + self.right.identity

    def encode(self, x: int) -> bytes:
        a, b = divmod(int(x), self.right.order)
        left = self.left.encode(a)
        return len(left).to_bytes(4, "big") + left + self.right.encode(b)

    def describe(self, x: int) -> str:
        a, b = divmod(int(x), self.right.order)
        return f"({self.left.describe(a)}, {self.right.describe(b)})"

    def __repr__(self) -> str:
        return f"GroupProduct({self.left!r}, {self.right!r})"


class GroupSub(GroupABC):
    """A subgroup given by the sorted parent ids of its members."""

    kind = "subgroup"

    def __init__(self, parent: GroupABC, members: Sequence[int], generators: Optional[List[int]] = None):
        self.parent = parent
        self.members = np.array(sorted(int(m) for m in members), dtype=np.int64)
        self.generators = list(generators or [])
        super().__init__(len(self.members), guard=max(len(self.members), 1))

    def _local(self, parent_ids: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(self.members, parent_ids)
        idx = np.minimum(idx, len(self.members) - 1)
        if not (self.members[idx] == parent_ids).all():
            raise ValueError("member set is not closed under the group law")
        return idx

    def multiply(self, a, b):
        return self._local(self.parent.multiply(self.members[a], self.members[b]))

    def invert(self, a):
        return self._local(self.parent.invert(self.members[a]))

    @property
    def identity(self) -> int:
        return int(self._local(np.array([self.parent.identity]))[0])

    def encode(self, x: int) -> bytes:
        return self.parent.encode(int(self.members[x]))

    def describe(self, x: int) -> str:
        return self.parent.describe(int(self.members[x]))

    def __repr__(self) -> str:
        return f"GroupSub(order={self.order}, parent={self.parent!r})"
