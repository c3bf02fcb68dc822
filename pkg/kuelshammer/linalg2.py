"""
Exact linear algebra over F_{2^m} by restriction of scalars to F_2.

A vector of length d over F_{2^m} is a numpy array of element codes. For
elimination it is packed into a Python int whose bits [i*m, (i+1)*m) hold
coordinate i. Every F_{2^m}-subspace is stored as the reduced echelon basis
of its F_2 restriction; pivots are lowest set bits, so bases are canonical.

>>> F2 = field_create(2, 1)
>>> U = rref(F2, 3, [np.array([1, 1, 0]), np.array([0, 1, 1])])
>>> U.dim, U.contains(np.array([1, 0, 1]))
(2, True)
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .exceptions import DegenerateForm
from .ffield import FiniteField, field_create

Vector = np.ndarray


def pack(vec, m: int = 1) -> int:
    """Pack a code vector into an int with m bits per coordinate.

    >>> pack(np.array([1, 0, 1]))
    5
    >>> pack(np.array([2, 3]), 2)
    14
    """
    vec = np.asarray(vec, dtype=np.int64)
    if vec.size == 0:
        return 0
    if m == 1:
        bits = (vec & 1).astype(np.uint8)
    else:
        bits = ((vec[:, None] >> np.arange(m)) & 1).astype(np.uint8).ravel()
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def unpack(x: int, dim: int, m: int = 1) -> Vector:
    """Inverse of pack.

    >>> unpack(14, 2, 2).tolist()
    [2, 3]
    """
    nbits = dim * m
    if nbits == 0:
        return np.zeros(0, dtype=np.int64)
    raw = np.frombuffer(x.to_bytes((nbits + 7) // 8, "little"), dtype=np.uint8)
    bits = np.unpackbits(raw, bitorder="little")[:nbits].astype(np.int64)
    if m == 1:
        return bits
    return bits.reshape(dim, m) @ (1 << np.arange(m, dtype=np.int64))


class EchelonBasis:
    """Incremental reduced echelon form over F_2 on int bitsets.

    Each row may carry a tag recording which inputs combine to it, which is
    how kernels and coordinates are read off.
    """

    def __init__(self):
        self.rows: Dict[int, int] = {}
        self.tags: Dict[int, int] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: int, tag: int = 0) -> Tuple[int, int]:
        rest = v
        while rest:
            low = rest & -rest
            pivot = low.bit_length() - 1
            row = self.rows.get(pivot)
            if row is None:
                rest ^= low
                continue
            v ^= row
            tag ^= self.tags[pivot]
            rest = (v >> (pivot + 1)) << (pivot + 1)
        return v, tag

    def add(self, v: int, tag: int = 0) -> Optional[int]:
        """Insert v; return None if it was new, else the tag of the dependency."""
        v, tag = self.reduce(v, tag)
        if v == 0:
            return tag
        pivot = (v & -v).bit_length() - 1
        for p, row in self.rows.items():
            if row >> pivot & 1:
                self.rows[p] = row ^ v
                self.tags[p] ^= tag
        self.rows[pivot] = v
        self.tags[pivot] = tag
        return None

    def sorted_rows(self) -> List[int]:
        return [self.rows[p] for p in sorted(self.rows)]


def _scalings(field: FiniteField, vec: Vector) -> List[int]:
    """Packed x^t * vec for t < m, the F_2-span of F*vec."""
    m = field.k
    if m == 1:
        return [pack(vec)]
    return [pack(field.mul_array(1 << t, vec), m) for t in range(m)]


def express(field: FiniteField, vectors: Sequence[Vector], target: Vector) -> Optional[Vector]:
    """Coefficients c over F with sum c_i v_i = target, or None.

    >>> F2 = field_create(2, 1)
    >>> express(F2, [np.array([1, 1]), np.array([0, 1])], np.array([1, 0])).tolist()
    [1, 1]
    """
    m = field.k
    ech = EchelonBasis()
    for i, v in enumerate(vectors):
        for t, row in enumerate(_scalings(field, v)):
            ech.add(row, 1 << (i * m + t))
    residual, tag = ech.reduce(pack(target, m))
    if residual:
        return None
    return unpack(tag, len(vectors), m)


class Subspace:
    """An F_{2^m}-subspace of F_{2^m}^d held as a reduced F_2 basis."""

    def __init__(self, field: FiniteField, ambient_dim: int, rows: Iterable[int] = ()):
        if field.p != 2:
            raise ValueError("Subspace works over fields of characteristic 2")
        self.field = field
        self.ambient_dim = ambient_dim
        self.m = field.k
        self._ech = EchelonBasis()
        for r in rows:
            self._ech.add(r)
        if self.rank_f2 % self.m or not self._x_stable():
            raise ValueError("subspace is not stable under F_{2^m} scalars")

    def _x_stable(self) -> bool:
        """Closed under multiplication by x; x generates F_{2^m} over F_2."""
        if self.m == 1:
            return True
        d, m = self.ambient_dim, self.m
        return all(
            self._ech.reduce(pack(self.field.mul_array(2, unpack(r, d, m)), m))[0] == 0
            for r in self._ech.sorted_rows()
        )

    @classmethod
    def from_vectors(cls, field: FiniteField, ambient_dim: int, vectors: Iterable[Vector]) -> "Subspace":
        rows = []
        for v in vectors:
            v = np.asarray(v, dtype=np.int64)
            if v.shape != (ambient_dim,):
                raise ValueError(f"vector of shape {v.shape} in ambient dimension {ambient_dim}")
            rows.extend(_scalings(field, v))
        return cls(field, ambient_dim, rows)

    @classmethod
    def zero(cls, field: FiniteField, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim)

    @classmethod
    def full(cls, field: FiniteField, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, [1 << b for b in range(ambient_dim * field.k)])

    # -------------------------------------------------------------- queries

    @property
    def rank_f2(self) -> int:
        return len(self._ech)

    @property
    def dim(self) -> int:
        return self.rank_f2 // self.m

    @property
    def rows(self) -> List[int]:
        return self._ech.sorted_rows()

    @property
    def pivots(self) -> List[int]:
        return sorted(self._ech.rows)

    def _packed(self, v) -> int:
        if isinstance(v, (int, np.integer)):
            return int(v)
        v = np.asarray(v, dtype=np.int64)
        if v.shape != (self.ambient_dim,):
            raise ValueError(f"vector of shape {v.shape} in ambient dimension {self.ambient_dim}")
        return pack(v, self.m)

    def contains(self, v) -> bool:
        return self._ech.reduce(self._packed(v))[0] == 0

    __contains__ = contains

    def reduce(self, v: Vector) -> Vector:
        """Normal form of v modulo this subspace."""
        return unpack(self._ech.reduce(self._packed(v))[0], self.ambient_dim, self.m)

    def is_subspace_of(self, other: "Subspace") -> bool:
        _check_compatible(self, other)
        return all(other.contains(r) for r in self.rows)

    def __le__(self, other: "Subspace") -> bool:
        return self.is_subspace_of(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, tuple(self.rows)))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, field={self.field})"

    # ---------------------------------------------------------- F-bases

    @functools.cached_property
    def _basis(self) -> Tuple[Vector, ...]:
        if self.m == 1:
            return tuple(unpack(r, self.ambient_dim) for r in self.rows)
        chosen: List[Vector] = []
        span = EchelonBasis()
        for r in self.rows:
            if span.reduce(r)[0] == 0:
                continue
            v = unpack(r, self.ambient_dim, self.m)
            chosen.append(v)
            for row in _scalings(self.field, v):
                span.add(row)
        return tuple(chosen)

    def basis(self) -> List[Vector]:
        """An F_{2^m}-basis; rows of the echelon form for m = 1."""
        return [v.copy() for v in self._basis]

    @functools.cached_property
    def _coordinate_echelon(self) -> EchelonBasis:
        ech = EchelonBasis()
        for i, v in enumerate(self._basis):
            for t, row in enumerate(_scalings(self.field, v)):
                ech.add(row, 1 << (i * self.m + t))
        return ech

    def coordinates(self, v) -> Vector:
        """Coordinates of v with respect to basis()."""
        residual, tag = self._coordinate_echelon.reduce(self._packed(v))
        if residual:
            raise ValueError("vector does not lie in the subspace")
        return unpack(tag, self.dim, self.m)


def _check_compatible(u: Subspace, v: Subspace):
    if u.field != v.field or u.ambient_dim != v.ambient_dim:
        raise ValueError(
            f"dimension mismatch: ({u.ambient_dim}, {u.field}) vs ({v.ambient_dim}, {v.field})"
        )


def rref(field: FiniteField, ambient_dim: int, vectors: Iterable[Vector]) -> Subspace:
    return Subspace.from_vectors(field, ambient_dim, vectors)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_compatible(u, v)
    return Subspace(u.field, u.ambient_dim, u.rows + v.rows)


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """Zassenhaus intersection on the F_2 restrictions.

    >>> F2 = field_create(2, 1)
    >>> U = rref(F2, 3, [np.array([1, 0, 0]), np.array([0, 1, 0])])
    >>> V = rref(F2, 3, [np.array([0, 1, 0]), np.array([0, 0, 1])])
    >>> intersect(U, V).basis()[0].tolist()
    [0, 1, 0]
    """
    _check_compatible(u, v)
    n = u.ambient_dim * u.m
    ech = EchelonBasis()
    for r in u.rows:
        ech.add(r | (r << n))
    for r in v.rows:
        ech.add(r)
    return Subspace(u.field, u.ambient_dim, [row >> n for p, row in ech.rows.items() if p >= n])


def contains(u: Subspace, v) -> bool:
    return u.contains(v)


def kernel_of_images(images: Sequence[int]) -> List[int]:
    """F_2 kernel of the map sending basis vector i to images[i].

    >>> kernel_of_images([1, 1, 2])
    [3]
    """
    ech = EchelonBasis()
    kernel = []
    for idx, img in enumerate(images):
        dep = ech.add(img, 1 << idx)
        if dep is not None:
            kernel.append(dep)
    return kernel


def xor_reduce(values: np.ndarray, axis: int = 0) -> np.ndarray:
    """Sum over a characteristic 2 field along an axis."""
    if values.shape[axis] == 0:
        shape = list(values.shape)
        del shape[axis]
        return np.zeros(shape, dtype=np.int64)
    return np.bitwise_xor.reduce(values, axis=axis)


def matvec(field: FiniteField, matrix: np.ndarray, vec: Vector) -> Vector:
    """matrix @ vec over F_{2^m}."""
    return xor_reduce(field.mul_array(matrix, np.asarray(vec)[None, :]), axis=1)


def gram_rank(field: FiniteField, gram: np.ndarray) -> int:
    gram = np.asarray(gram, dtype=np.int64)
    return Subspace.from_vectors(field, gram.shape[1], list(gram)).dim


def orthogonal_complement(u: Subspace, gram: np.ndarray) -> Subspace:
    """{x : x^T G y = 0 for all y in u}.

    >>> F2 = field_create(2, 1)
    >>> swap = np.array([[0, 1], [1, 0]])
    >>> U = rref(F2, 2, [np.array([1, 1])])
    >>> orthogonal_complement(U, swap) == U
    True
    """
    field, d, m = u.field, u.ambient_dim, u.m
    gram = np.asarray(gram, dtype=np.int64)
    if gram.shape != (d, d):
        raise ValueError(f"Gram matrix of shape {gram.shape} for ambient dimension {d}")
    if gram_rank(field, gram) != d:
        raise DegenerateForm("the bilinear form is degenerate on the ambient space")
    functionals = [matvec(field, gram, y) for y in u.basis()]
    if not functionals:
        return Subspace.full(field, d)
    f = np.array(functionals, dtype=np.int64)  # r x d
    images = []
    for i in range(d):
        for t in range(m):
            images.append(pack(field.mul_array(1 << t, f[:, i]), m))
    return Subspace(field, d, kernel_of_images(images))


@dataclass(frozen=True)
class SemilinearMap:
    """v -> M . Frob^e(v), with columns[c] the image of basis vector c."""

    field: FiniteField
    dim: int
    columns: Tuple[Vector, ...]
    frobenius: int = 0

    def __post_init__(self):
        if len(self.columns) != self.dim:
            raise ValueError(f"{len(self.columns)} columns for dimension {self.dim}")

    @property
    def matrix(self) -> np.ndarray:
        if self.dim == 0:
            return np.zeros((0, 0), dtype=np.int64)
        return np.array(self.columns, dtype=np.int64)

    def apply(self, v: Vector) -> Vector:
        w = self.field.frobenius_array(np.asarray(v, dtype=np.int64), self.frobenius)
        return xor_reduce(self.field.mul_array(w[:, None], self.matrix), axis=0)

    def gf2_images(self) -> List[int]:
        """Images of the F_2 basis vectors x^t e_c, packed."""
        m = self.field.k
        images = []
        for c in range(self.dim):
            col = np.asarray(self.columns[c], dtype=np.int64)
            for t in range(m):
                scalar = self.field.frobenius(1 << t, self.frobenius)
                images.append(pack(self.field.mul_array(scalar, col), m))
        return images


def semilinear_kernel_chain(f: SemilinearMap) -> List[Subspace]:
    """[ker f, ker f^2, ...] up to the first repetition.

    >>> F2 = field_create(2, 1)
    >>> jordan = SemilinearMap(F2, 3, (np.array([0, 0, 0]), np.array([1, 0, 0]), np.array([0, 1, 0])), 1)
    >>> [s.dim for s in semilinear_kernel_chain(jordan)]
    [1, 2, 3]
    """
    base = f.gf2_images()
    n = len(base)

    def apply_f2(v: int) -> int:
        out = 0
        while v:
            low = v & -v
            out ^= base[low.bit_length() - 1]
            v ^= low
        return out

    current = list(base)
    chain: List[Subspace] = []
    for _ in range(n + 1):
        sub = Subspace(f.field, f.dim, kernel_of_images(current))
        if chain and sub.rank_f2 == chain[-1].rank_f2:
            break
        chain.append(sub)
        if sub.rank_f2 == n:
            break
        current = [apply_f2(c) for c in current]
    return chain


if __name__ == "__main__":
    import doctest

    doctest.testmod(optionflags=doctest.ELLIPSIS)
