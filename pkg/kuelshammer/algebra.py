"""
Commutative algebras over F_{2^m} given by a dense structure tensor.

structure[i, j, :] is the coordinate vector of b_i * b_j. Elements are code
vectors of length dim.

>>> F2 = field_create(2, 1)
>>> C = np.zeros((2, 2, 2), dtype=np.int64)
>>> C[0, 0, 0] = C[0, 1, 1] = C[1, 0, 1] = C[1, 1, 0] = 1
>>> kc2 = CommutativeAlgebra(F2, C, np.array([1, 0]), labels=["1", "g"])
>>> kc2.square(np.array([1, 1])).tolist()
[0, 0]
"""
import logging
from typing import List, Optional, Sequence

import numpy as np

from .exceptions import InvariantViolation
from .ffield import FiniteField, field_create
from .linalg2 import EchelonBasis, SemilinearMap, Subspace, pack, unpack, xor_reduce

logger = logging.getLogger("kuelshammer")


class CommutativeAlgebra:
    """
    :param field: Coefficient field of characteristic 2.
    :param structure: Array (d, d, d) of element codes.
    :param unit: Coordinates of the identity element.
    :param labels: Basis labels, defaulting to b0, b1, ...
    :param check: Verify commutativity and the unit law.
    """

    def __init__(
        self,
        field: FiniteField,
        structure: np.ndarray,
        unit: np.ndarray,
        labels: Optional[Sequence[str]] = None,
        check: bool = True,
        name: str = "",
    ):
        if field.p != 2:
            raise ValueError("coefficient field must have characteristic 2")
        structure = np.asarray(structure, dtype=np.int64)
        d = structure.shape[0]
        if structure.shape != (d, d, d):
            raise ValueError(f"structure tensor of shape {structure.shape} is not cubic")
        self.field = field
        self.structure = structure
        self.unit = np.asarray(unit, dtype=np.int64)
        self.labels = list(labels) if labels is not None else [f"b{i}" for i in range(d)]
        self.name = name
        self._flat = structure.reshape(d * d, d)
        self._binary = bool((structure <= 1).all())
        if check:
            if not self.is_commutative():
                raise ValueError("algebra is not commutative")
            for i in range(d):
                e = self.basis_vector(i)
                if not np.array_equal(self.mul(self.unit, e), e):
                    raise ValueError(f"unit law fails on basis element {self.labels[i]}")

    @property
    def dim(self) -> int:
        return self.structure.shape[0]

    def __repr__(self) -> str:
        return f"CommutativeAlgebra({self.name or 'unnamed'}, dim={self.dim}, field={self.field})"

    def zero(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.int64)

    def basis_vector(self, i: int) -> np.ndarray:
        v = self.zero()
        v[i] = 1
        return v

    def is_commutative(self) -> bool:
        return bool((self.structure == self.structure.transpose(1, 0, 2)).all())

    # ------------------------------------------------------ multiplication

    def mul(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        d = self.dim
        if d == 0:
            return self.zero()
        F = self.field
        if F.order == 2:
            w = np.outer(u, v).ravel()
            return (w @ self._flat) & 1
        w = F.mul_array(u[:, None], v[None, :]).ravel()
        if self._binary:
            out = np.zeros(d, dtype=np.int64)
            for t in range(F.k):
                out |= (((w >> t) & 1) @ self._flat & 1) << t
            return out
        support = np.flatnonzero(w)
        return xor_reduce(F.mul_array(w[support, None], self._flat[support]), axis=0)

    def square(self, u: np.ndarray) -> np.ndarray:
        return self.mul(u, u)

    def power(self, u: np.ndarray, e: int) -> np.ndarray:
        if e < 0:
            raise ValueError("negative powers are not defined")
        out = self.unit.copy()
        base = np.asarray(u, dtype=np.int64)
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def scale(self, c: int, u: np.ndarray) -> np.ndarray:
        return self.field.mul_array(c, u)

    def squaring_map(self) -> SemilinearMap:
        """x -> x^2, semilinear with Frobenius exponent 1."""
        columns = tuple(self.structure[i, i].copy() for i in range(self.dim))
        return SemilinearMap(self.field, self.dim, columns, frobenius=1)

    # ------------------------------------------------------- subspaces

    def span(self, vectors) -> Subspace:
        return Subspace.from_vectors(self.field, self.dim, vectors)

    def product_space(self, u: Subspace, v: Subspace) -> Subspace:
        ub, vb = u.basis(), v.basis()
        return self.span([self.mul(x, y) for x in ub for y in vb])

    def is_ideal(self, sub: Subspace) -> bool:
        return all(
            sub.contains(self.mul(t, self.basis_vector(i)))
            for t in sub.basis()
            for i in range(self.dim)
        )

    # ------------------------------------------------- derived algebras

    def restrict(
        self, sub: Subspace, unit: Optional[np.ndarray] = None, labels: Optional[Sequence[str]] = None
    ) -> "CommutativeAlgebra":
        """The subalgebra sub on its basis(), with the given unit (e.g. a block idempotent)."""
        basis = sub.basis()
        r = len(basis)
        C = np.zeros((r, r, r), dtype=np.int64)
        for a in range(r):
            for b in range(a, r):
                C[a, b] = C[b, a] = sub.coordinates(self.mul(basis[a], basis[b]))
        unit_coords = sub.coordinates(self.unit if unit is None else unit)
        return CommutativeAlgebra(self.field, C, unit_coords, labels=labels, name=f"{self.name}|sub")

    def quotient(
        self, ideal: Subspace, complement: Optional[Sequence[int]] = None, labels=None
    ) -> "QuotientAlgebra":
        return QuotientAlgebra(self, ideal, complement, labels)

    def extend_scalars(self, field: FiniteField) -> "CommutativeAlgebra":
        if field == self.field:
            return self
        if self.field.order != 2 or field.p != 2:
            raise ValueError("scalar extension is defined from F_2 to F_{2^m}")
        return CommutativeAlgebra(
            field, self.structure, self.unit, self.labels, check=False, name=self.name
        )


class QuotientAlgebra(CommutativeAlgebra):
    """
    ambient / ideal on the cosets of the basis vectors listed in complement.

    Without a complement the coordinates carrying no pivot of the ideal are
    used, i.e. the smallest-pivot cosets.
    """

    def __init__(
        self,
        ambient: CommutativeAlgebra,
        ideal: Subspace,
        complement: Optional[Sequence[int]] = None,
        labels: Optional[Sequence[str]] = None,
        source=None,
    ):
        if ideal.field != ambient.field or ideal.ambient_dim != ambient.dim:
            raise ValueError("ideal does not live in the ambient algebra")
        if not ambient.is_ideal(ideal):
            raise ValueError("subspace is not an ideal of the ambient algebra")
        d, m = ambient.dim, ambient.field.k
        if complement is None:
            pivot_coords = {p // m for p in ideal.pivots}
            complement = [i for i in range(d) if i not in pivot_coords]
        complement = list(complement)
        if len(complement) != d - ideal.dim:
            raise ValueError(
                f"complement has {len(complement)} vectors, expected {d - ideal.dim}"
            )
        self.ambient = ambient
        self.ideal = ideal
        self.complement = complement
        self.source = source
        chosen = set(complement)
        self._perm = np.array([i for i in range(d) if i not in chosen] + complement, dtype=np.int64)
        self._head = d - len(complement)
        self._ech = EchelonBasis()
        for b in ideal.basis():
            for t in range(m):
                self._ech.add(pack(ambient.field.mul_array(1 << t, b[self._perm]), m))
        if sorted(self._ech.rows) != list(range(self._head * m)):
            raise InvariantViolation("complement cosets do not span the quotient")
        r = len(complement)
        C = np.zeros((r, r, r), dtype=np.int64)
        for a, s in enumerate(complement):
            for b in range(a, r):
                C[a, b] = C[b, a] = self.reduce(ambient.structure[s, complement[b]])
        if labels is None:
            labels = [ambient.labels[s] for s in complement]
        super().__init__(ambient.field, C, self.reduce(ambient.unit), labels, name=f"{ambient.name}/ideal")

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """Coordinates in the quotient of the coset of an ambient vector."""
        m = self.ambient.field.k
        residual, _ = self._ech.reduce(pack(np.asarray(v)[self._perm], m))
        w = unpack(residual, self.ambient.dim, m)
        return w[self._head:]

    def lift(self, c: np.ndarray) -> np.ndarray:
        v = self.ambient.zero()
        v[self.complement] = c
        return v

    def span_of_ambient(self, vectors) -> Subspace:
        """Image in the quotient of a family of ambient vectors."""
        return self.span([self.reduce(v) for v in vectors])


if __name__ == "__main__":
    import doctest

    doctest.testmod(optionflags=doctest.ELLIPSIS)
