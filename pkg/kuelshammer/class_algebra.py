"""
The center of kG on the class-sum basis, and what is built on top of it.

Structure constants are exact counts c_ijk = #{x in K_i : x^-1 z_k in K_j}
reduced mod 2. The Kuelshammer ideal T_n^perp(kG) is spanned by the sums
over fibers of the n-fold class squaring map.

>>> from kuelshammer.group import Group
>>> C4 = Group("cyclic", 4)
>>> kuelshammer_perp_group(C4, 1).dim
2
"""
import functools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from .algebra import CommutativeAlgebra, QuotientAlgebra
from .class_partition import ClassPartition
from .exceptions import InvariantViolation, ResourceLimit
from .ffield import field_create
from .finite_group import GroupABC
from .linalg2 import Subspace
from .utilities import DEFAULT_SEED, congruence_data

logger = logging.getLogger("kuelshammer")

F2 = field_create(2, 1)


@dataclass(eq=False)
class CenterAlgebra:
    """Z(kG) over F_2 with class sums as basis.

    :param counts: exact integer structure constants, shape (nc, nc, nc).
    """

    MAX_CLASSES = 400

    group: GroupABC
    partition: ClassPartition
    counts: np.ndarray
    identity_class: int

    @functools.cached_property
    def algebra(self) -> CommutativeAlgebra:
        unit = np.zeros(self.dim, dtype=np.int64)
        unit[self.identity_class] = 1
        return CommutativeAlgebra(F2, self.counts % 2, unit, self.labels, name=f"Z(k{self.group!r})")

    @property
    def dim(self) -> int:
        return len(self.partition)

    @property
    def labels(self) -> List[str]:
        return self.partition.labels

    def triples(self) -> List[Tuple[int, int, int]]:
        """Sparse (i, j, k) with c_ijk odd."""
        return [tuple(int(x) for x in t) for t in np.argwhere(self.counts % 2)]

    def class_sum(self, *cids: int) -> np.ndarray:
        """Sum of the given class sums; repeated cids cancel."""
        v = np.zeros(self.dim, dtype=np.int64)
        for c in cids:
            v[c] ^= 1
        return v

    def augmentation(self, v: np.ndarray) -> int:
        """epsilon(sum v_k K_k^+) = sum of v_k over classes of odd size."""
        odd = (self.partition.sizes % 2).astype(bool)
        values = np.asarray(v)[odd]
        return int(np.bitwise_xor.reduce(values)) if len(values) else 0

    def verify(self) -> None:
        counts, sizes = self.counts, self.partition.sizes
        if not (counts == counts.transpose(1, 0, 2)).all():
            raise InvariantViolation("structure constants are not symmetric")
        unit_row = counts[self.identity_class]
        if not (unit_row == np.eye(self.dim, dtype=np.int64)).all():
            raise InvariantViolation("identity class does not act as the unit")
        # sum_k c_ijk |K_k| = |K_i| |K_j|
        if not (counts @ sizes == np.outer(sizes, sizes)).all():
            raise InvariantViolation("structure constants fail the counting identity")


def center_of_group_algebra(g: GroupABC) -> CenterAlgebra:
    """
    >>> from kuelshammer.group import Group
    >>> Z = center_of_group_algebra(Group("symmetric", 4))
    >>> Z.dim, Z.labels[Z.identity_class]
    (5, 'K0')
    """
    partition = g.conjugacy.partition
    nc = len(partition)
    if nc > CenterAlgebra.MAX_CLASSES:
        raise ResourceLimit(f"{nc} classes exceed the class guard {CenterAlgebra.MAX_CLASSES}")
    x = g.elements()
    x_inv = g.invert(x)
    class_of = partition.class_of
    left = class_of[x] * nc
    counts = np.zeros((nc, nc, nc), dtype=np.int64)
    for k, z in enumerate(partition.representatives):
        y = g.multiply(x_inv, np.full(len(x), z, dtype=np.int64))
        counts[:, :, k] = np.bincount(left + class_of[y], minlength=nc * nc).reshape(nc, nc)
    center = CenterAlgebra(g, partition, counts, partition.class_id(g.identity))
    center.verify()
    logger.info("%r: center of dimension %d", g, nc)
    return center


@dataclass(eq=False)
class SquareMap:
    """Class-level squaring: image[c] is the class of x_c^2."""

    image: np.ndarray
    labels: List[str] = field(default_factory=list)

    def compose(self, n: int) -> np.ndarray:
        out = np.arange(len(self.image))
        for _ in range(n):
            out = self.image[out]
        return out

    def fibers(self, n: int = 1) -> Dict[int, List[int]]:
        power = self.compose(n)
        out: Dict[int, List[int]] = {c: [] for c in range(len(self.image))}
        for c, target in enumerate(power):
            out[int(target)].append(c)
        return out

    def fiber(self, c: int, n: int = 1) -> List[int]:
        return self.fibers(n)[c]

    def labelled_fibers(self, n: int = 1) -> Dict[str, List[str]]:
        return {self.labels[c]: [self.labels[d] for d in f] for c, f in self.fibers(n).items()}


def square_map(g: GroupABC, seed: int = DEFAULT_SEED, exhaustive_limit: int = 10_000) -> SquareMap:
    partition = g.conjugacy.partition
    reps = partition.representatives
    image = partition.class_of[g.multiply(reps, reps)]
    if g.order <= exhaustive_limit:
        x = g.elements()
    else:
        x = np.random.default_rng(seed).integers(0, g.order, size=exhaustive_limit)
    if not (partition.class_of[g.multiply(x, x)] == image[partition.class_of[x]]).all():
        raise InvariantViolation("class squaring depends on the representative")
    return SquareMap(image, partition.labels)


def kuelshammer_perp_group(g: GroupABC, n: int) -> Subspace:
    """Span of fiber sums of the n-fold squaring map, in class-sum coordinates."""
    if n < 0:
        raise ValueError("depth n must be non-negative")
    sq = square_map(g)
    nc = len(sq.image)
    vectors = []
    for members in sq.fibers(n).values():
        if members:
            v = np.zeros(nc, dtype=np.int64)
            v[members] = 1
            vectors.append(v)
    return Subspace.from_vectors(F2, nc, vectors)


def kuelshammer_perp_chain(g: GroupABC, depth: int, center: Optional[CenterAlgebra] = None) -> List[Subspace]:
    """[T_1^perp, ..., T_depth^perp], each an ideal of Z and decreasing."""
    z = (center or center_of_group_algebra(g)).algebra
    chain = []
    previous = Subspace.full(F2, z.dim)
    for n in range(1, depth + 1):
        t = kuelshammer_perp_group(g, n)
        if not t.is_subspace_of(previous):
            raise InvariantViolation(f"T_{n}^perp is not contained in T_{n - 1}^perp")
        if not z.is_ideal(t):
            raise InvariantViolation(f"T_{n}^perp is not an ideal of the center")
        chain.append(t)
        previous = t
    return chain


def quotient_zbar(z: CenterAlgebra, t: Subspace) -> QuotientAlgebra:
    """Z / t on the listed coset representatives for PGL_2(q), smallest pivots otherwise."""
    complement = None
    if z.group.kind == "pgl2":
        complement = z.group.zbar_complement()
    return QuotientAlgebra(z.algebra, t, complement, source=z)


# -------------------------------------------------------------------------
# class-sum identities in Zbar for PGL_2(q), q = +-1 mod 8


def _family(zbar: QuotientAlgebra):
    """(group, family cid function, d) with d = (q -+ 1)/4."""
    center = zbar.source
    if center is None or center.group.kind != "pgl2":
        raise ValueError("class-sum identities need Zbar of a PGL_2(q) center")
    g = center.group
    sign = g.congruence()
    if sign is None:
        raise ValueError(f"q = {g.q} is not congruent to +-1 mod 8")
    if sign == 1:
        return g, g.a3, (g.q - 1) // 4
    return g, g.a4, (g.q + 1) // 4


def classsum_product_zbar(zbar: QuotientAlgebra, i: int, j: int) -> np.ndarray:
    """A_i^+ A_j^+ in Zbar, with A = A3 for q = 1 mod 8 and A4 for q = 7 mod 8."""
    g, fam, d = _family(zbar)
    if i % d == 0 or j % d == 0 or (i + j) % d == 0 or (i - j) % d == 0:
        raise ValueError(
            f"({i}, {j}) lies outside the range where the two-term product identity holds"
        )
    center = zbar.source
    return zbar.mul(zbar.reduce(center.class_sum(fam(i))), zbar.reduce(center.class_sum(fam(j))))


def expected_classsum_product(zbar: QuotientAlgebra, i: int, j: int) -> np.ndarray:
    g, fam, _ = _family(zbar)
    return zbar.reduce(zbar.source.class_sum(fam(i + j), fam(i - j)))


def class_square_zbar(zbar: QuotientAlgebra, i: int) -> np.ndarray:
    g, fam, _ = _family(zbar)
    return zbar.square(zbar.reduce(zbar.source.class_sum(fam(i))))


def expected_class_square(zbar: QuotientAlgebra, i: int) -> np.ndarray:
    """A_{2i}^+ if d does not divide i; else 0 for i/d odd and A1^+ for i/d even."""
    g, fam, d = _family(zbar)
    center = zbar.source
    if i % d:
        return zbar.reduce(center.class_sum(fam(2 * i)))
    if (i // d) % 2:
        return zbar.zero()
    return zbar.reduce(center.class_sum(0))


# -------------------------------------------------------------------------
# closed-form bases of J(Zbar) and J^2(Zbar)


@dataclass(frozen=True)
class ClassIndexSet:
    s: int
    members: Tuple[int, ...]

    def parity(self, parity: int) -> Tuple[int, ...]:
        return tuple(i for i in self.members if i % 2 == parity)


def class_index_sets(q: int) -> List[ClassIndexSet]:
    """I_s (q = 1 mod 8) or J_s (q = 7 mod 8): indices up to (q-5)/4 resp. (q-3)/4 that are +-s mod q'.

    >>> [len(c.members) for c in class_index_sets(41)]
    [1, 4, 4]
    """
    sign, n, q_odd = congruence_data(q)
    upper = (q - 5) // 4 if sign == 1 else (q - 3) // 4
    out = []
    for s in range((q_odd - 1) // 2 + 1):
        members = tuple(i for i in range(1, upper + 1) if i % q_odd in (s, (-s) % q_odd))
        out.append(ClassIndexSet(s, members))
    return out


def _closed_form_setup(center: CenterAlgebra):
    g = center.group
    if g.kind != "pgl2" or g.congruence() is None:
        raise ValueError("closed-form bases need PGL_2(q) with q = +-1 mod 8")
    sign, _, q_odd = g.congruence_data()
    fam = g.a3 if sign == 1 else g.a4
    special = g.a3((g.q - 1) // 2) if sign == 1 else g.a4((g.q + 1) // 2)
    return fam, special, q_odd, class_index_sets(g.q)


def closed_form_radical_basis(center: CenterAlgebra) -> List[np.ndarray]:
    """A1^+ + A_special^+, A_i^+ for i in I_0, and A_i^+ + A_s^+ for i in I_s - {s}."""
    fam, special, _, sets = _closed_form_setup(center)
    out = [center.class_sum(0, special)]
    out += [center.class_sum(fam(i)) for i in sets[0].members]
    for index_set in sets[1:]:
        s = index_set.s
        out += [center.class_sum(fam(i), fam(s)) for i in index_set.members if i != s]
    return out


def closed_form_radical_square_basis(center: CenterAlgebra) -> List[np.ndarray]:
    fam, _, q_odd, sets = _closed_form_setup(center)
    zero = sets[0]
    out = [center.class_sum(fam(i)) for i in zero.parity(0)]
    out += [center.class_sum(fam(q_odd), fam(i)) for i in zero.parity(1) if i != q_odd]
    for index_set in sets[1:]:
        s = index_set.s
        # pair s with its own parity class and q'+s with the other
        same, other = (1, 0) if s % 2 else (0, 1)
        out += [center.class_sum(fam(s), fam(i)) for i in index_set.parity(same) if i != s]
        out += [
            center.class_sum(fam(q_odd + s), fam(i)) for i in index_set.parity(other) if i != q_odd + s
        ]
    return out


if __name__ == "__main__":
    import doctest

    doctest.testmod(optionflags=doctest.ELLIPSIS)
