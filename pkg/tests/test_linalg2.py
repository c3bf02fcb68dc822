import numpy as np
import pytest

from kuelshammer.exceptions import DegenerateForm
from kuelshammer.ffield import field_create
from kuelshammer.linalg2 import (
    SemilinearMap,
    Subspace,
    express,
    gram_rank,
    intersect,
    kernel_of_images,
    orthogonal_complement,
    pack,
    rref,
    semilinear_kernel_chain,
    subspace_sum,
    unpack,
)

F2 = field_create(2, 1)
F4 = field_create(2, 2)


def test_pack_unpack():
    v = np.array([3, 0, 2, 1])
    assert unpack(pack(v, 2), 4, 2).tolist() == v.tolist()
    assert pack(np.array([1, 0, 1])) == 5


def test_rref_and_membership():
    U = rref(F2, 4, [np.array([1, 1, 0, 0]), np.array([0, 1, 1, 0]), np.array([1, 0, 1, 0])])
    assert U.dim == 2
    assert U.contains(np.array([1, 0, 1, 0]))
    assert not U.contains(np.array([0, 0, 0, 1]))


def test_canonical_bases():
    """Two spanning sets of one subspace give equal Subspace objects."""
    a = rref(F2, 3, [np.array([1, 1, 0]), np.array([0, 1, 1])])
    b = rref(F2, 3, [np.array([1, 0, 1]), np.array([1, 1, 0])])
    assert a == b
    assert hash(a) == hash(b)


def test_sum_and_intersection():
    U = rref(F2, 3, [np.array([1, 0, 0]), np.array([0, 1, 0])])
    V = rref(F2, 3, [np.array([0, 1, 0]), np.array([0, 0, 1])])
    assert subspace_sum(U, V).dim == 3
    W = intersect(U, V)
    assert W.dim == 1
    assert W.contains(np.array([0, 1, 0]))


def test_dimension_mismatch():
    with pytest.raises(ValueError, match="dimension mismatch"):
        subspace_sum(Subspace.zero(F2, 2), Subspace.zero(F2, 3))


def test_f4_subspaces_are_scalar_stable():
    """The F_4-span of (1, x) contains x * (1, x) = (x, x + 1)."""
    U = Subspace.from_vectors(F4, 2, [np.array([1, 2])])
    assert U.dim == 1
    assert U.contains(np.array([2, 3]))
    assert not U.contains(np.array([1, 0]))


def test_odd_characteristic_rejected():
    with pytest.raises(ValueError):
        Subspace(field_create(3, 1), 2)


def test_coordinates():
    U = rref(F2, 3, [np.array([1, 1, 0]), np.array([0, 1, 1])])
    v = np.array([1, 0, 1])
    c = U.coordinates(v)
    total = np.zeros(3, dtype=np.int64)
    for coeff, b in zip(c, U.basis()):
        if coeff:
            total ^= b
    assert total.tolist() == v.tolist()
    with pytest.raises(ValueError):
        U.coordinates(np.array([0, 0, 1]))


def test_express():
    coeffs = express(F2, [np.array([1, 1]), np.array([0, 1])], np.array([1, 0]))
    assert coeffs.tolist() == [1, 1]
    assert express(F2, [np.array([1, 1])], np.array([1, 0])) is None


def test_kernel_of_images():
    assert kernel_of_images([1, 1, 2]) == [3]
    assert kernel_of_images([1, 2, 4]) == []


def test_orthogonal_complement():
    swap = np.array([[0, 1], [1, 0]])
    U = rref(F2, 2, [np.array([1, 1])])
    assert orthogonal_complement(U, swap) == U
    assert orthogonal_complement(Subspace.zero(F2, 2), swap).dim == 2


def test_degenerate_form():
    with pytest.raises(DegenerateForm):
        orthogonal_complement(Subspace.zero(F2, 2), np.zeros((2, 2), dtype=np.int64))


def test_semilinear_kernel_chain_stabilizes():
    jordan = SemilinearMap(F2, 3, (np.array([0, 0, 0]), np.array([1, 0, 0]), np.array([0, 1, 0])), 1)
    chain = semilinear_kernel_chain(jordan)
    assert [s.dim for s in chain] == [1, 2, 3]
    assert all(a <= b for a, b in zip(chain, chain[1:]))


def test_semilinear_map_over_f4():
    """x -> x^2 on F_4 is injective, so its kernel chain is zero."""
    squaring = SemilinearMap(F4, 1, (np.array([1]),), 1)
    assert squaring.apply(np.array([2])).tolist() == [3]
    assert semilinear_kernel_chain(squaring)[-1].dim == 0


def _nondegenerate_symmetric(field, d, rng):
    while True:
        upper = np.triu(rng.integers(0, field.order, (d, d)))
        gram = upper ^ np.triu(upper, 1).T
        if gram_rank(field, gram) == d:
            return gram


@pytest.mark.parametrize("field", [F2, F4], ids=["F2", "F4"])
def test_orthogonal_complement_is_an_involution(field):
    rng = np.random.default_rng(2024)
    d = 7
    gram = _nondegenerate_symmetric(field, d, rng)
    for _ in range(50):
        count = int(rng.integers(0, d + 1))
        U = rref(field, d, list(rng.integers(0, field.order, (count, d))))
        perp = orthogonal_complement(U, gram)
        assert U.dim + perp.dim == d
        assert orthogonal_complement(perp, gram) == U


@pytest.mark.parametrize("field", [F2, F4], ids=["F2", "F4"])
def test_rref_is_idempotent(field):
    rng = np.random.default_rng(7)
    for _ in range(50):
        M = list(rng.integers(0, field.order, (5, 6)))
        once = rref(field, 6, M)
        assert rref(field, 6, once.basis()) == once
        assert once.rows == rref(field, 6, M[::-1]).rows


def test_subspace_rejects_rows_without_scalar_closure():
    # span_F2{(1, 0), (0, 1)} in F_4^2 has even F_2-rank but misses x (1, 0)
    with pytest.raises(ValueError, match="not stable"):
        Subspace(F4, 2, [0b0001, 0b0100])
    assert Subspace(F4, 2, [0b0001, 0b0010]).dim == 1
