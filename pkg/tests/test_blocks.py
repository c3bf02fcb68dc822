import json

import numpy as np
import pytest

from kuelshammer.algebra import CommutativeAlgebra, QuotientAlgebra
from kuelshammer.blocks import (
    LEDGER_KEYS,
    block_idempotents,
    block_ledger,
    boolean_idempotents,
    cyclic_jmodj2,
    nilradical,
    principal_block,
    radical_chain,
    radical_power,
)
from kuelshammer.class_algebra import center_of_group_algebra, kuelshammer_perp_group
from kuelshammer.exceptions import ResourceLimit
from kuelshammer.ffield import field_create
from kuelshammer.group import Group, pgl2
from kuelshammer.symalg import matrix_algebra_table

F2 = field_create(2, 1)


@pytest.fixture(scope="module")
def g9():
    return pgl2(9)


@pytest.fixture(scope="module")
def z9(g9):
    return center_of_group_algebra(g9)


@pytest.fixture(scope="module")
def blocks9(g9, z9):
    d = block_idempotents(z9)
    principal_block(g9, d)
    return d


def _diagonal(n):
    """F_2^n with coordinatewise product."""
    C = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        C[i, i, i] = 1
    return CommutativeAlgebra(F2, C, np.ones(n, dtype=np.int64))


def test_radical_chain_kc4():
    z = center_of_group_algebra(Group("cyclic", 4))
    chain = radical_chain(z.algebra)
    assert chain.dims == [3, 2, 1, 0]
    assert chain.jmodj2 == 1
    chain.verify()


def test_nilradical_of_zbar(g9, z9):
    zbar = QuotientAlgebra(z9.algebra, kuelshammer_perp_group(g9, 1))
    assert nilradical(zbar).dim == 2
    chain = radical_chain(zbar)
    assert chain.dims == [2, 0]
    assert radical_power(zbar, chain.radical, 2) == chain.power(2)


def test_radical_of_semisimple_algebra():
    chain = radical_chain(_diagonal(3))
    assert chain.dims == [0]
    chain.verify()


def test_radical_needs_commutative_algebra():
    with pytest.raises(ValueError, match="commutative"):
        nilradical(matrix_algebra_table(2))


def test_radical_power_starts_at_one(z9):
    with pytest.raises(ValueError):
        radical_power(z9.algebra, nilradical(z9.algebra), 0)


def test_boolean_idempotents():
    atoms = boolean_idempotents(_diagonal(3))
    assert sorted(a.tolist() for a in atoms) == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]


def test_blocks_of_pgl2_9(blocks9):
    """Principal block plus two blocks with defect group C_2, split over F_4."""
    assert len(blocks9) == 3
    assert blocks9.m == 2
    blocks9.verify()
    assert blocks9.principal is not None


def test_blocks_with_larger_field(z9):
    d = block_idempotents(z9, extra_degree=2)
    assert len(d) == 3
    assert d.m == 4


def test_field_degree_guard(z9):
    with pytest.raises(ResourceLimit):
        block_idempotents(z9, config={"max_field_degree": 1})


def test_block_input_validation(z9):
    with pytest.raises(ValueError):
        block_idempotents(z9, extra_degree=0)
    F4 = field_create(2, 2)
    C = np.zeros((1, 1, 1), dtype=np.int64)
    C[0, 0, 0] = 1
    with pytest.raises(ValueError):
        block_idempotents(CommutativeAlgebra(F4, C, np.array([1])))


def test_s4_has_one_block():
    G = Group("symmetric", 4)
    d = block_idempotents(center_of_group_algebra(G))
    assert len(d) == 1
    assert principal_block(G, d) == 0


def test_c3_needs_f4():
    """kC_3 = F_2 x F_4 splits into three blocks over F_4."""
    G = Group("cyclic", 3)
    d = block_idempotents(center_of_group_algebra(G))
    assert len(d) == 3
    assert d.m == 2
    assert sorted(d.component_degrees) == [1, 2]
    d.verify()
    principal_block(G, d)
    assert d.principal is not None


def test_block_ledger_q9(g9, blocks9):
    ledger = block_ledger(g9, blocks9)
    assert ledger.whole == {"center": 11, "t1perp": 6, "zbar": 5, "j": 2, "j2": 0, "jmodj2": 2}
    assert ledger.principal_row.dims() == {"center": 7, "t1perp": 4, "zbar": 3, "j": 2, "j2": 0, "jmodj2": 2}
    others = [r for r in ledger.rows if not r.principal]
    assert len(others) == 2
    for row in others:
        assert row.family == "C2"
        assert (row.center, row.zbar, row.j, row.j2) == (2, 1, 0, 0)
    assert ledger.totals() == ledger.whole
    ledger.check_additivity()


def test_family_frame(g9, blocks9):
    frame = block_ledger(g9, blocks9).family_frame()
    assert set(frame.columns) == {"kG", "B0", "C2 x2"}
    assert list(frame.index) == list(LEDGER_KEYS)
    assert int(frame.loc["center", "B0"]) == 7


def test_ledger_to_dict_is_json(g9, blocks9):
    doc = block_ledger(g9, blocks9).to_dict()
    assert json.loads(json.dumps(doc))["field_degree"] == 2
    assert len(doc["rows"]) == 3


def test_cyclic_jmodj2():
    assert [cyclic_jmodj2(2**a) for a in range(5)] == [0, 0, 1, 1, 1]
    with pytest.raises(ValueError):
        cyclic_jmodj2(6)


@pytest.mark.parametrize("make_group", [lambda: pgl2(9), lambda: Group("cyclic", 3)], ids=["PGL2(9)", "C3"])
def test_block_ledger_stable_under_field_extension(make_group):
    group = make_group()
    z = center_of_group_algebra(group)
    t1perp = kuelshammer_perp_group(group, 1)
    ledgers = []
    for extra in (1, 2, 3):
        d = block_idempotents(z, extra_degree=extra)
        principal_block(group, d)
        ledger = block_ledger(group, d, t1perp)
        ledger.check_additivity()
        ledgers.append(sorted((r.principal, tuple(r.dims().values())) for r in ledger.rows))
    assert ledgers[0] == ledgers[1] == ledgers[2]
