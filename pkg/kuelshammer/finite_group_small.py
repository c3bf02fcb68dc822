"""Small reference groups used as oracles: cyclic, dihedral and symmetric."""
import numpy as np
from sympy.combinatorics.named_groups import SymmetricGroup

from .finite_group import GroupABC


class GroupCyclic(GroupABC):
    """
    >>> C = GroupCyclic(8)
    >>> C.mul(5, 6), int(C.element_order(np.array([2]))[0])
    (3, 4)
    """

    kind = "cyclic"

    def __init__(self, n: int, **kwargs):
        if n < 1:
            raise ValueError("cyclic group order must be positive")
        self.n = n
        super().__init__(n, **kwargs)

    def multiply(self, a, b):
        return (np.asarray(a) + np.asarray(b)) % self.n

    def invert(self, a):
        return (-np.asarray(a)) % self.n

    @property
    def identity(self) -> int:
        return 0

    def encode(self, x: int) -> bytes:
        return int(x).to_bytes(4, "big")

    def describe(self, x: int) -> str:
        return f"g^{int(x)}"

    def __repr__(self) -> str:
        return f"GroupCyclic({self.n})"


class GroupDihedral(GroupABC):
    """Dihedral group of the given order 2n; id k + n*e stands for r^k s^e.

    >>> D = GroupDihedral(16)
    >>> len(D.conjugacy_classes())
    7
    """

    kind = "dihedral"

    def __init__(self, order: int, **kwargs):
        if order < 4 or order % 2:
            raise ValueError("dihedral group order must be even and at least 4")
        self.n = order // 2
        super().__init__(order, **kwargs)

    def multiply(self, a, b):
        k1, e1 = np.asarray(a) % self.n, np.asarray(a) // self.n
        k2, e2 = np.asarray(b) % self.n, np.asarray(b) // self.n
        k = (k1 + np.where(e1 == 1, -k2, k2)) % self.n
        return k + self.n * (e1 ^ e2)

    def invert(self, a):
        a = np.asarray(a)
        k, e = a % self.n, a // self.n
        return np.where(e == 1, a, (-k) % self.n)

    @property
    def identity(self) -> int:
        return 0

    def encode(self, x: int) -> bytes:
        return int(x).to_bytes(4, "big")

    def describe(self, x: int) -> str:
        k, e = int(x) % self.n, int(x) // self.n
        return f"r^{k}" + (" s" if e else "")

    def __repr__(self) -> str:
        return f"GroupDihedral({2 * self.n})"


class GroupSymmetric(GroupABC):
    """S_n with permutations in lexicographic order, composed right to left.

    >>> S = GroupSymmetric(4)
    >>> S.order, len(S.conjugacy_classes())
    (24, 5)
    """

    kind = "symmetric"
    MAX_DEGREE = 7

    def __init__(self, degree: int, **kwargs):
        if not 1 <= degree <= self.MAX_DEGREE:
            raise ValueError(f"symmetric degree must be between 1 and {self.MAX_DEGREE}")
        self.degree = degree
        perms = np.array(sorted(p.array_form for p in SymmetricGroup(degree).generate()), dtype=np.int64)
        self.perms = perms
        self._weights = degree ** np.arange(degree - 1, -1, -1, dtype=np.int64)
        self._keys = perms @ self._weights
        super().__init__(len(perms), **kwargs)

    def _lookup(self, perms: np.ndarray) -> np.ndarray:
        return np.searchsorted(self._keys, perms @ self._weights)

    def multiply(self, a, b):
        pa, pb = self.perms[np.asarray(a)], self.perms[np.asarray(b)]
        return self._lookup(np.take_along_axis(pa, pb, axis=-1))

    def invert(self, a):
        return self._lookup(np.argsort(self.perms[np.asarray(a)], axis=-1))

    @property
    def identity(self) -> int:
        return 0

    def encode(self, x: int) -> bytes:
        return bytes(self.perms[int(x)].tolist())

    def describe(self, x: int) -> str:
        return str(self.perms[int(x)].tolist())

    def __repr__(self) -> str:
        return f"GroupSymmetric({self.degree})"


if __name__ == "__main__":
    import doctest

    doctest.testmod(optionflags=doctest.ELLIPSIS)
