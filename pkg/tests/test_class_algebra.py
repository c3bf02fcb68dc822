import numpy as np
import pytest

from kuelshammer.blocks import radical_chain
from kuelshammer.exceptions import InvariantViolation
from kuelshammer.class_algebra import (
    CenterAlgebra,
    center_of_group_algebra,
    class_index_sets,
    class_square_zbar,
    classsum_product_zbar,
    closed_form_radical_basis,
    closed_form_radical_square_basis,
    expected_class_square,
    expected_classsum_product,
    kuelshammer_perp_chain,
    kuelshammer_perp_group,
    quotient_zbar,
    square_map,
)
from kuelshammer.group import Group, pgl2


@pytest.fixture(scope="module")
def z9():
    return center_of_group_algebra(pgl2(9))


@pytest.fixture(scope="module")
def z17():
    return center_of_group_algebra(pgl2(17))


@pytest.fixture(scope="module")
def zbar17(z17):
    return quotient_zbar(z17, kuelshammer_perp_group(z17.group, 1))


def test_center_dimension(z9):
    """dim Z(kG) is the number of classes, q + 2."""
    assert z9.dim == 11
    z9.verify()
    assert z9.algebra.is_commutative()


def test_unit_is_identity_class(z9):
    unit = z9.class_sum(z9.identity_class)
    a = z9.class_sum(2, 5)
    assert np.array_equal(z9.algebra.mul(unit, a), a)


def test_augmentation(z9):
    assert z9.augmentation(z9.class_sum(0)) == 1
    # A2 has q^2 - 1 = 80 elements
    assert z9.augmentation(z9.class_sum(1)) == 0


def test_kuelshammer_perp_pgl2_9(z9):
    t1 = kuelshammer_perp_group(z9.group, 1)
    assert t1.dim == 6
    assert z9.algebra.is_ideal(t1)
    assert quotient_zbar(z9, t1).dim == 5


def test_square_map_fibers(z9):
    sq = square_map(z9.group)
    nonempty = [c for c, f in sq.fibers(1).items() if f]
    assert len(nonempty) == 6
    labelled = sq.labelled_fibers(1)
    assert "A1" in labelled["A1"]
    assert sum(len(f) for f in labelled.values()) == 11


def test_perp_chain_is_decreasing(z9):
    chain = kuelshammer_perp_chain(z9.group, 3, center=z9)
    assert len(chain) == 3
    assert all(b <= a for a, b in zip(chain, chain[1:]))
    assert all(z9.algebra.is_ideal(t) for t in chain)


def test_negative_depth():
    with pytest.raises(ValueError):
        kuelshammer_perp_group(Group("cyclic", 4), -1)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_cyclic_ladder(m):
    """kC_{2^m}: T_1^perp, J(Zbar) and J^2(Zbar) have dims 2^(m-1), 2^(m-1) - 1, max(0, 2^(m-1) - 2)."""
    G = Group("cyclic", 2**m)
    z = center_of_group_algebra(G)
    t1 = kuelshammer_perp_group(G, 1)
    chain = radical_chain(quotient_zbar(z, t1))
    half = 2 ** (m - 1)
    assert t1.dim == half
    assert chain.power(1).dim == half - 1
    assert chain.power(2).dim == max(0, half - 2)


def test_class_index_sets():
    assert [len(c.members) for c in class_index_sets(41)] == [1, 4, 4]
    # q = 17: q' = 1, a single set holding every index up to (q - 5)/4
    sets = class_index_sets(17)
    assert len(sets) == 1
    assert sets[0].members == (1, 2, 3)


def test_class_square_identity_q17(zbar17):
    for i in range(1, 9):
        assert np.array_equal(class_square_zbar(zbar17, i), expected_class_square(zbar17, i)), i


def test_classsum_product_identity_q17(zbar17):
    tested = 0
    for i in range(1, 9):
        for j in range(i + 1, 9):
            try:
                product = classsum_product_zbar(zbar17, i, j)
            except ValueError:
                continue
            tested += 1
            assert np.array_equal(product, expected_classsum_product(zbar17, i, j)), (i, j)
    assert tested > 0


def test_product_identity_outside_range(zbar17):
    # d = (q - 1)/4 = 4 divides i
    with pytest.raises(ValueError):
        classsum_product_zbar(zbar17, 4, 1)


def test_identities_need_pgl2():
    z = center_of_group_algebra(Group("cyclic", 8))
    zbar = quotient_zbar(z, kuelshammer_perp_group(z.group, 1))
    with pytest.raises(ValueError):
        class_square_zbar(zbar, 1)


def test_closed_form_bases_q17(z17, zbar17):
    chain = radical_chain(zbar17)
    radical = closed_form_radical_basis(z17)
    square = closed_form_radical_square_basis(z17)
    assert zbar17.span_of_ambient(radical) == chain.power(1)
    assert zbar17.span_of_ambient(square) == chain.power(2)
    assert len(radical) == chain.power(1).dim == 4
    assert len(square) == chain.power(2).dim == 2


@pytest.mark.slow
def test_closed_form_bases_q41():
    z = center_of_group_algebra(pgl2(41))
    zbar = quotient_zbar(z, kuelshammer_perp_group(z.group, 1))
    chain = radical_chain(zbar)
    assert zbar.span_of_ambient(closed_form_radical_basis(z)) == chain.power(1)
    assert zbar.span_of_ambient(closed_form_radical_square_basis(z)) == chain.power(2)


@pytest.mark.slow
def test_closed_form_bases_q23():
    z = center_of_group_algebra(pgl2(23))
    zbar = quotient_zbar(z, kuelshammer_perp_group(z.group, 1))
    chain = radical_chain(zbar)
    assert zbar.span_of_ambient(closed_form_radical_basis(z)) == chain.power(1)
    assert zbar.span_of_ambient(closed_form_radical_square_basis(z)) == chain.power(2)


def test_corrupted_counts_raise_invariant_violation(z9):
    i, j, k = [c for c in range(z9.dim) if c != z9.identity_class][:3]
    counts = z9.counts.copy()
    counts[i, j, k] += 1
    counts[j, i, k] += 1
    broken = CenterAlgebra(z9.group, z9.partition, counts, z9.identity_class)
    with pytest.raises(InvariantViolation, match="counting identity"):
        broken.verify()
    assert InvariantViolation.exit_code == 1
