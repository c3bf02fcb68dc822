"""
Radicals, block idempotents and per-block invariant ledgers.

Blocks of kG are found from the center: Z/J(Z) is split over a finite field
F_{2^m} large enough for every component to become a product of copies of
the field, and the resulting idempotents are lifted through J(Z) by
repeated squaring.

>>> from kuelshammer.group import Group
>>> from kuelshammer.class_algebra import center_of_group_algebra
>>> Z = center_of_group_algebra(Group("cyclic", 8))
>>> nilradical(Z.algebra).dim, len(block_idempotents(Z))
(7, 1)
"""
import functools
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Union

import numpy as np
import pandas as pd

from .algebra import CommutativeAlgebra, QuotientAlgebra
from .class_algebra import CenterAlgebra, center_of_group_algebra, kuelshammer_perp_group
from .exceptions import LedgerMismatch, ResourceLimit, ValidationFailure
from .ffield import FiniteField, field_create
from .finite_group import GroupABC
from .linalg2 import (
    Subspace,
    express,
    kernel_of_images,
    pack,
    semilinear_kernel_chain,
    subspace_sum,
    unpack,
)
from .symalg import AlgebraTable
from .utilities import DEFAULT_SEED, is_power_of_two, lcm_all

logger = logging.getLogger("kuelshammer")

LEDGER_KEYS = ("center", "t1perp", "zbar", "j", "j2", "jmodj2")

AlgebraLike = Union[CommutativeAlgebra, AlgebraTable]


def _as_commutative(a: AlgebraLike) -> CommutativeAlgebra:
    if isinstance(a, AlgebraTable):
        if a.commutator_space().dim:
            raise ValueError("the radical routines need a commutative algebra")
        d = a.dim
        C = np.zeros((d, d, d), dtype=np.int64)
        for i, j, k, c in a.products():
            C[i, j, k] ^= c
        return CommutativeAlgebra(a.field, C, a.unit, a.labels, name="table")
    if not a.is_commutative():
        raise ValueError("the radical routines need a commutative algebra")
    return a


# ---------------------------------------------------------------- radicals


def nilradical(a: AlgebraLike) -> Subspace:
    """J(A) as the stable kernel of x -> x^(2^k).

    >>> from kuelshammer.group import Group
    >>> from kuelshammer.class_algebra import center_of_group_algebra, kuelshammer_perp_group
    >>> G = Group("pgl2", 9)
    >>> Z = center_of_group_algebra(G)
    >>> nilradical(QuotientAlgebra(Z.algebra, kuelshammer_perp_group(G, 1))).dim
    2
    """
    a = _as_commutative(a)
    return semilinear_kernel_chain(a.squaring_map())[-1]


def radical_power(a: AlgebraLike, j: Subspace, k: int) -> Subspace:
    """Span of k-fold products of vectors of j."""
    if k < 1:
        raise ValueError("radical powers start at k = 1")
    a = _as_commutative(a)
    if j.ambient_dim != a.dim:
        raise ValueError("subspace does not live in the algebra")
    power = j
    for _ in range(k - 1):
        if power.dim == 0:
            break
        power = a.product_space(power, j)
    return power


@dataclass
class RadicalChain:
    """[J, J^2, ..., 0] for a commutative algebra; the last entry is zero."""

    algebra: CommutativeAlgebra
    spaces: List[Subspace]

    @property
    def dims(self) -> List[int]:
        return [s.dim for s in self.spaces]

    @property
    def radical(self) -> Subspace:
        return self.spaces[0]

    def power(self, k: int) -> Subspace:
        if k < 1:
            raise ValueError("radical powers start at k = 1")
        return self.spaces[min(k, len(self.spaces)) - 1]

    @property
    def jmodj2(self) -> int:
        return self.power(1).dim - self.power(2).dim

    def verify(self) -> None:
        a = self.algebra
        dims = self.dims
        if dims[-1] != 0 or any(x <= y for x, y in zip(dims, dims[1:])):
            raise ValidationFailure(f"radical chain {dims} is not strictly decreasing to 0")
        rounds = a.dim.bit_length()
        for x in self.radical.basis():
            for _ in range(rounds):
                x = a.square(x)
            if x.any():
                raise ValidationFailure("a radical basis vector is not nilpotent")
        if self.radical.dim < a.dim:
            quotient = a.quotient(self.radical)
            if semilinear_kernel_chain(quotient.squaring_map())[0].dim:
                raise ValidationFailure("the quotient by the radical has nilpotents")


def radical_chain(a: AlgebraLike) -> RadicalChain:
    """
    >>> from kuelshammer.group import Group
    >>> from kuelshammer.class_algebra import center_of_group_algebra
    >>> radical_chain(center_of_group_algebra(Group("cyclic", 4)).algebra).dims
    [3, 2, 1, 0]
    """
    a = _as_commutative(a)
    j = nilradical(a)
    spaces = [j]
    while spaces[-1].dim:
        spaces.append(a.product_space(spaces[-1], j))
    return RadicalChain(a, spaces)


# ------------------------------------------------------- block idempotents


def boolean_idempotents(s: CommutativeAlgebra) -> List[np.ndarray]:
    """Primitive idempotents of a commutative F_2-algebra without nilpotents.

    The idempotents form the F_2-space ker(x -> x^2 + x); its atoms are
    obtained by splitting the unit against every basis vector.
    """
    if s.field.order != 2:
        raise ValueError("Boolean idempotents are computed over F_2")
    d = s.dim
    images = [pack(s.square(s.basis_vector(i)) ^ s.basis_vector(i)) for i in range(d)]
    boolean = [unpack(v, d) for v in kernel_of_images(images)]
    atoms = [s.unit.copy()]
    for b in boolean:
        refined = []
        for e in atoms:
            for part in (s.mul(e, b), e ^ s.mul(e, b)):
                if part.any():
                    refined.append(part)
        atoms = refined
    if len(atoms) != len(boolean):
        raise LedgerMismatch(f"{len(atoms)} atoms for a Boolean algebra of rank {len(boolean)}")
    return atoms


@dataclass(eq=False)
class BlockDecomposition:
    """
    Primitive idempotents of a commutative algebra over F_{2^m}.

    ``idempotents`` are vectors over ``field`` in the coordinates of
    ``algebra`` (class-sum coordinates for a group center). Blocks coming
    from the same F_2-component share a ``components`` entry.
    """

    MAX_FIELD_DEGREE = 32
    ROOT_SEARCH_LIMIT = 2**16
    RANDOM_TRIES = 200

    algebra: CommutativeAlgebra
    field: FiniteField
    idempotents: List[np.ndarray]
    components: List[int]
    component_degrees: List[int]
    radical: Subspace
    center: Optional[CenterAlgebra] = None
    principal: Optional[int] = None
    extra_degree: int = 1

    def __len__(self) -> int:
        return len(self.idempotents)

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self.idempotents)

    @property
    def m(self) -> int:
        return self.field.k

    @functools.cached_property
    def extended(self) -> CommutativeAlgebra:
        return self.algebra.extend_scalars(self.field)

    def verify(self) -> None:
        """Idempotent, orthogonal, complete and primitive, checked exactly."""
        A, F = self.extended, self.field
        total = A.zero()
        for i, e in enumerate(self.idempotents):
            if not np.array_equal(A.square(e), e):
                raise LedgerMismatch(f"block {i}: e^2 != e")
            for k in range(i + 1, len(self.idempotents)):
                if A.mul(e, self.idempotents[k]).any():
                    raise LedgerMismatch(f"blocks {i} and {k} are not orthogonal")
            total ^= e
        if not np.array_equal(total, A.unit):
            raise LedgerMismatch("block idempotents do not sum to 1")
        radical = Subspace.from_vectors(F, A.dim, self.radical.basis())
        for i, e in enumerate(self.idempotents):
            block = A.span([A.mul(e, A.basis_vector(b)) for b in range(A.dim)])
            if subspace_sum(block, radical).dim - radical.dim != 1:
                raise LedgerMismatch(f"block {i} is not primitive over {F}")


def _candidates(basis: np.ndarray, seed: int) -> Iterator[np.ndarray]:
    yield from basis
    for x, y in itertools.combinations(basis, 2):
        yield x ^ y
    rng = np.random.default_rng(seed)
    for _ in range(BlockDecomposition.RANDOM_TRIES):
        yield (rng.integers(0, 2, len(basis)) @ basis) & 1


def _primitive_element(s: CommutativeAlgebra, e: np.ndarray, degree: int, seed: int):
    """theta in eS with e, theta, ..., theta^(degree-1) a basis; returns (theta, powers)."""
    component = s.span([s.mul(e, s.basis_vector(i)) for i in range(s.dim)])
    basis = np.array(component.basis(), dtype=np.int64)
    for theta in _candidates(basis, seed):
        powers = [e]
        for _ in range(degree):
            powers.append(s.mul(powers[-1], theta))
        if s.span(powers[:degree]).dim == degree:
            return theta, powers
    raise LedgerMismatch(f"no primitive element found in a component of degree {degree}")


def _roots(F: FiniteField, coeffs: np.ndarray, degree: int) -> List[int]:
    """Roots in F of x^degree + sum coeffs[k] x^k, searched in the subfield of order 2^degree."""
    if 2**degree > BlockDecomposition.ROOT_SEARCH_LIMIT:
        raise ResourceLimit(f"root search in a subfield of order 2^{degree} exceeds the limit")
    step = (F.order - 1) // (2**degree - 1)
    gamma = F.pow(F.generator().code, step)
    points = [1]
    for _ in range(2**degree - 2):
        points.append(F.mul(points[-1], gamma))
    x = np.array(points, dtype=np.int64)
    value = np.ones_like(x)
    for k in reversed(range(degree)):
        value = F.mul_array(value, x) ^ int(coeffs[k])
    return sorted(int(r) for r in x[value == 0])


def _split_component(s_f: CommutativeAlgebra, e: np.ndarray, theta: np.ndarray, roots: Sequence[int]):
    """Lagrange idempotents prod_{l != k} (theta + r_l e) / (r_k + r_l)."""
    F = s_f.field
    out = []
    for k, rk in enumerate(roots):
        num, den = e.copy(), 1
        for l, rl in enumerate(roots):
            if l == k:
                continue
            num = s_f.mul(num, theta ^ F.mul_array(rl, e))
            den = F.mul(den, rk ^ rl)
        out.append(F.mul_array(F.inv(den), num))
    return out


def _lift(a_f: CommutativeAlgebra, x: np.ndarray) -> np.ndarray:
    for _ in range(a_f.dim.bit_length() + 2):
        x2 = a_f.square(x)
        if np.array_equal(x2, x):
            return x
        x = x2
    raise LedgerMismatch("idempotent lift through the radical did not stabilize")


def block_idempotents(
    z: Union[CenterAlgebra, CommutativeAlgebra],
    extra_degree: int = 1,
    seed: int = DEFAULT_SEED,
    config: Optional[Dict] = None,
) -> BlockDecomposition:
    """
    Split Z/J(Z) over F_{2^m}, m = lcm of the component degrees times
    extra_degree, and lift the idempotents to Z.

    >>> from kuelshammer.group import Group
    >>> from kuelshammer.class_algebra import center_of_group_algebra
    >>> d = block_idempotents(center_of_group_algebra(Group("pgl2", 9)))
    >>> len(d), d.m
    (3, 2)
    """
    config = config or {}
    center = z if isinstance(z, CenterAlgebra) else None
    A = z.algebra if center is not None else _as_commutative(z)
    if A.field.order != 2:
        raise ValueError("block splitting starts from an algebra over F_2")
    if extra_degree < 1:
        raise ValueError("extra_degree must be positive")

    J = nilradical(A)
    S = QuotientAlgebra(A, J)
    atoms = boolean_idempotents(S)
    degrees = [S.span([S.mul(e, S.basis_vector(i)) for i in range(S.dim)]).dim for e in atoms]
    m = lcm_all(degrees) * extra_degree
    guard = config.get("max_field_degree", BlockDecomposition.MAX_FIELD_DEGREE)
    if m > guard:
        raise ResourceLimit(f"splitting field degree {m} exceeds the guard {guard}")
    F = field_create(2, m)
    logger.info("splitting %d components of degrees %s over %s", len(atoms), degrees, F)

    S_F, A_F = S.extend_scalars(F), A.extend_scalars(F)
    idempotents, components = [], []
    for c, (e, degree) in enumerate(zip(atoms, degrees)):
        if degree == 1:
            parts = [e]
        else:
            theta, powers = _primitive_element(S, e, degree, seed + c)
            coeffs = express(S.field, powers[:degree], powers[degree])
            if coeffs is None:
                raise LedgerMismatch("theta^degree is not a combination of lower powers")
            roots = _roots(F, coeffs, degree)
            if len(roots) != degree:
                raise LedgerMismatch(
                    f"minimal polynomial of degree {degree} has {len(roots)} roots in {F}"
                )
            parts = _split_component(S_F, e, theta, roots)
        for part in parts:
            idempotents.append(_lift(A_F, S.lift(part)))
            components.append(c)

    decomposition = BlockDecomposition(
        A, F, idempotents, components, degrees, J, center=center, extra_degree=extra_degree
    )
    decomposition.verify()
    return decomposition


def principal_block(g: GroupABC, d: BlockDecomposition) -> int:
    """The block whose idempotent has augmentation 1."""
    odd = (g.conjugacy.partition.sizes % 2).astype(bool)
    if len(odd) != d.algebra.dim:
        raise ValueError("decomposition is not in the class-sum coordinates of this group")
    hits = []
    for i, e in enumerate(d.idempotents):
        values = e[odd]
        if len(values) and int(np.bitwise_xor.reduce(values)) == 1:
            hits.append(i)
    if len(hits) != 1:
        raise LedgerMismatch(f"{len(hits)} blocks have augmentation 1")
    d.principal = hits[0]
    return hits[0]


# ------------------------------------------------------------------ ledger


def _zbar_dims(a: CommutativeAlgebra, t: Subspace) -> Dict[str, int]:
    zbar = QuotientAlgebra(a, t)
    chain = radical_chain(zbar)
    j, j2 = chain.power(1).dim, chain.power(2).dim
    return {
        "center": a.dim,
        "t1perp": t.dim,
        "zbar": zbar.dim,
        "j": j,
        "j2": j2,
        "jmodj2": j - j2,
    }


@dataclass
class BlockRow:
    block: int
    component: int
    principal: bool
    center: int
    t1perp: int
    zbar: int
    j: int
    j2: int
    jmodj2: int

    @property
    def family(self) -> str:
        return "B0" if self.principal else f"C{self.center}"

    def dims(self) -> Dict[str, int]:
        return {k: getattr(self, k) for k in LEDGER_KEYS}


@dataclass
class BlockLedger:
    rows: List[BlockRow]
    whole: Dict[str, int]
    field_degree: int = 1
    notes: List[str] = field(default_factory=list)

    @property
    def principal_row(self) -> BlockRow:
        rows = [r for r in self.rows if r.principal]
        if len(rows) != 1:
            raise LedgerMismatch(f"{len(rows)} principal rows in the ledger")
        return rows[0]

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame([{**vars(r), "family": r.family} for r in self.rows])
        return frame.set_index("block")

    def family_frame(self) -> pd.DataFrame:
        """kG, B0 and one column per cyclic family, rows Z, T1perp, Zbar, J, J^2, J/J^2."""
        frame = self.to_frame()
        columns = {"kG": pd.Series(self.whole)}
        for family, group in frame.groupby("family", sort=False):
            first = group.iloc[0]
            name = family if family == "B0" else f"{family} x{len(group)}"
            columns[name] = pd.Series({k: int(first[k]) for k in LEDGER_KEYS})
        out = pd.DataFrame(columns).loc[list(LEDGER_KEYS)]
        return out

    def totals(self) -> Dict[str, int]:
        return {k: sum(getattr(r, k) for r in self.rows) for k in LEDGER_KEYS}

    def check_additivity(self) -> None:
        totals = self.totals()
        bad = {k: (totals[k], self.whole[k]) for k in LEDGER_KEYS if totals[k] != self.whole[k]}
        if bad:
            raise LedgerMismatch(f"block dims do not add up to the whole algebra: {bad}")

    def to_dict(self):
        return {
            "field_degree": self.field_degree,
            "whole": dict(self.whole),
            "rows": [vars(r).copy() for r in self.rows],
        }


def block_ledger(
    g: GroupABC,
    d: BlockDecomposition,
    t1perp: Optional[Subspace] = None,
) -> BlockLedger:
    """Per-block Z, T_1^perp, Zbar, J, J^2 and J/J^2 with e T_1^perp as T_1^perp(B)."""
    if t1perp is None:
        t1perp = kuelshammer_perp_group(g, 1)
    if d.principal is None:
        principal_block(g, d)
    A, A_F, F = d.algebra, d.extended, d.field
    whole = _zbar_dims(A, t1perp)
    T_F = Subspace.from_vectors(F, A.dim, t1perp.basis())

    rows = []
    for b, e in enumerate(d.idempotents):
        ZB = A_F.span([A_F.mul(e, A_F.basis_vector(i)) for i in range(A.dim)])
        TB = A_F.span([A_F.mul(e, t) for t in T_F.basis()])
        if not TB.is_subspace_of(T_F):
            raise LedgerMismatch(f"block {b}: e T_1^perp is not inside T_1^perp")
        block_algebra = A_F.restrict(ZB, unit=e)
        t_local = Subspace.from_vectors(F, ZB.dim, [ZB.coordinates(v) for v in TB.basis()])
        dims = _zbar_dims(block_algebra, t_local)
        rows.append(BlockRow(block=b, component=d.components[b], principal=b == d.principal, **dims))
    ledger = BlockLedger(rows, whole, field_degree=d.m)
    ledger.check_additivity()
    return ledger


@functools.lru_cache(maxsize=None)
def cyclic_jmodj2(order: int) -> int:
    """dim J/J^2 of Zbar(kC_order) for a 2-power order.

    >>> [cyclic_jmodj2(2**a) for a in range(5)]
    [0, 0, 1, 1, 1]
    """
    from .group import Group

    if not is_power_of_two(order):
        raise ValueError(f"cyclic defect group order {order} is not a power of 2")
    g = Group("cyclic", order)
    z = center_of_group_algebra(g)
    return _zbar_dims(z.algebra, kuelshammer_perp_group(g, 1))["jmodj2"]


if __name__ == "__main__":
    import doctest

    doctest.testmod(optionflags=doctest.ELLIPSIS)
