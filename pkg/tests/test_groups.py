import numpy as np
import pytest

from kuelshammer.exceptions import ResourceLimit
from kuelshammer.finite_group_mixin_sylow import is_dihedral_2group
from kuelshammer.finite_group_pgl2 import prime_power
from kuelshammer.group import (
    Group,
    a3_family_mismatches,
    class_elements_a3,
    conjugacy_classes,
    direct_product,
    pgl2,
    regular_classes,
    sylow2,
)


@pytest.fixture(scope="module")
def g9():
    return pgl2(9)


def test_factory_dispatch():
    assert Group("cyclic", 8).order == 8
    assert Group("dihedral", 16).order == 16
    assert Group("symmetric", 4).order == 24
    assert Group("pgl2", 7).order == 336


def test_unsupported_kind():
    with pytest.raises(ValueError, match="Unsupported group kind"):
        Group("alternating", 5)


@pytest.mark.parametrize("q", [8, 15, 1])
def test_pgl2_rejects_bad_q(q):
    with pytest.raises(ValueError):
        pgl2(q)


def test_prime_power():
    assert prime_power(49) == (7, 2)
    assert prime_power(9) == (3, 2)


def test_element_guard():
    with pytest.raises(ResourceLimit):
        pgl2(9, guard=100)


def test_group_axioms(g9):
    assert g9.spot_check_axioms()
    assert Group("symmetric", 4).spot_check_axioms()


def test_pgl2_9_classes(g9):
    """q + 2 classes with the standard sizes, in the A1, A2, A3,i, A4,j order."""
    partition = conjugacy_classes(g9)
    assert len(partition) == 11
    assert partition.sizes.tolist() == g9.expected_class_sizes()
    assert int(partition.sizes.sum()) == 720
    assert partition.labels[:3] == ["A1", "A2", "A3,1"]
    assert partition.labels[-1] == "A4,5"


def test_centralizer_orders(g9):
    table = g9.conjugacy_cosets_table()
    assert table["centralizer"].tolist() == g9.expected_centralizer_orders()
    rep = int(conjugacy_classes(g9)[2].representative)
    assert g9.centralizer_order(rep) == g9.expected_centralizer_orders()[2]


def test_class_index_reduction(g9):
    assert g9.a3(0) == 0
    assert g9.a4(0) == 1
    assert g9.a3(1) == g9.a3(7) == g9.a3(-1)
    assert g9.a4(3) == g9.a4(7)


def test_two_regular_classes(g9):
    """A1, A2 and the two A4 classes of order 5."""
    assert len(regular_classes(g9, 2)) == 4
    assert int(g9.conjugacy_cosets_table()["two_regular"].sum()) == 4


def test_class_elements_a3(g9):
    ids = class_elements_a3(g9, 1)
    assert len(ids) == 90
    assert np.array_equal(np.sort(ids), conjugacy_classes(g9)[g9.a3(1)].elements)
    assert len(np.intersect1d(class_elements_a3(g9, 3), ids)) == 0


def test_a3_families_cover_their_classes(g9):
    assert a3_family_mismatches(g9) == []
    assert a3_family_mismatches(pgl2(7)) == []


def test_class_elements_a3_range(g9):
    with pytest.raises(ValueError):
        class_elements_a3(g9, 4)
    with pytest.raises(ValueError):
        class_elements_a3(Group("cyclic", 4), 1)


def test_sylow2_is_dihedral(g9):
    P = sylow2(g9)
    assert P.order == 16
    assert is_dihedral_2group(P)


def test_sylow2_of_cyclic_group_is_not_dihedral():
    P = sylow2(Group("cyclic", 8))
    assert P.order == 8
    assert not is_dihedral_2group(P)


def test_small_group_classes():
    assert len(conjugacy_classes(Group("dihedral", 16))) == 7
    assert len(conjugacy_classes(Group("symmetric", 4))) == 5
    assert len(conjugacy_classes(Group("cyclic", 16))) == 16


def test_direct_product_classes():
    G = direct_product(Group("symmetric", 4), Group("cyclic", 2))
    assert G.order == 48
    assert len(conjugacy_classes(G)) == 10
    assert G.spot_check_axioms()
