import json

import numpy as np
import pytest

from kuelshammer.class_algebra import kuelshammer_perp_group
from kuelshammer.exceptions import ResourceLimit, TableParseError, ValidationFailure
from kuelshammer.ffield import field_create
from kuelshammer.group import Group
from kuelshammer.linalg2 import Subspace
from kuelshammer.quiver_d2a import d2a_table
from kuelshammer.symalg import (
    AlgebraTable,
    center,
    commutator_space,
    direct_sum,
    group_algebra_table,
    matrix_algebra_table,
    tn_perp,
    tn_space,
    validate,
)

F2 = field_create(2, 1)


def _non_associative_table():
    """e, x, y with xx = y, xy = e and yx = 0, so (xx)x != x(xx)."""
    products = [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (0, 2, 2, 1), (2, 0, 2, 1)]
    products += [(1, 1, 2, 1), (1, 2, 0, 1)]
    return AlgebraTable(F2, ["e", "x", "y"], [1, 0, 0], products, [0, 0, 1])


def test_group_algebra_kc2():
    kc2 = group_algebra_table(Group("cyclic", 2))
    assert validate(kc2).ok
    assert kc2.gram_matrix().tolist() == [[1, 0], [0, 1]]


def test_matrix_algebra():
    """M_2(F_2): K is the trace-zero part and T_1 = K, so T_1^perp = Z = scalars."""
    M = matrix_algebra_table(2)
    assert M.validate().ok
    assert commutator_space(M).dim == 3
    assert center(M).dim == 1
    assert tn_space(M, 1) == commutator_space(M)
    assert tn_perp(M, 1).dim == 1


def test_commutative_group_algebra_chain():
    """kC4: K = 0, T_1^perp has dim 2 and T_2^perp is the socle."""
    A = group_algebra_table(Group("cyclic", 4))
    assert A.commutator_space().dim == 0
    assert A.center().dim == 4
    assert A.tn_perp(1).dim == 2
    assert A.tn_perp(2).dim == 1
    assert A.tn_perp(2) <= A.tn_perp(1)


def test_tn_space_negative():
    with pytest.raises(ValueError):
        group_algebra_table(Group("cyclic", 2)).tn_space(-1)


def test_center_is_k_perp():
    A = group_algebra_table(Group("symmetric", 3))
    assert A.center() == A.tn_perp(0)
    assert A.center().dim == 3


@pytest.mark.parametrize("kind,arg", [("symmetric", 4), ("dihedral", 16), ("cyclic", 16), ("pgl2", 3)])
def test_t1perp_matches_class_sums(kind, arg):
    """The generic T_1^perp equals the span of squaring-fiber class sums."""
    G = Group(kind, arg)
    class_of = G.conjugacy.partition.class_of
    lifted = [np.asarray(v)[class_of] for v in kuelshammer_perp_group(G, 1).basis()]
    assert group_algebra_table(G).tn_perp(1) == Subspace.from_vectors(F2, G.order, lifted)


def test_direct_sum_is_additive():
    a = group_algebra_table(Group("symmetric", 4))
    b = group_algebra_table(Group("cyclic", 2))
    s = direct_sum(a, b)
    assert s.dim == 26
    assert s.validate().ok
    assert s.center().dim == a.center().dim + b.center().dim == 7
    for n in (1, 2):
        assert s.tn_perp(n).dim == a.tn_perp(n).dim + b.tn_perp(n).dim


def test_direct_sum_field_mismatch():
    a = group_algebra_table(Group("cyclic", 2))
    b = AlgebraTable(field_create(2, 2), ["e"], [1], [(0, 0, 0, 1)], [1])
    with pytest.raises(ValueError, match="field mismatch"):
        direct_sum(a, b)


def test_repeated_triples_add_up():
    A = AlgebraTable(F2, ["e"], [1], [(0, 0, 0, 1), (0, 0, 0, 1), (0, 0, 0, 1)], [1])
    assert A.products() == [(0, 0, 0, 1)]


def test_non_associative_table_is_rejected():
    A = _non_associative_table()
    report = A.validate()
    assert not report.ok
    assert "associativity" in {v.kind for v in report.violations}
    with pytest.raises(ValidationFailure) as info:
        A.require_valid()
    assert info.value.report is not None


def test_degenerate_form_is_reported():
    doc = group_algebra_table(Group("cyclic", 2)).to_dict()
    doc["form_functional"] = [0, 0]
    report = AlgebraTable.from_dict(doc).validate()
    assert not report.ok
    assert "nondegeneracy" in {v.kind for v in report.violations}
    assert "violation" in report.summary()


def test_sampled_validation_warns():
    A = group_algebra_table(Group("cyclic", 4), config={"sweep_limit": 1, "sample_triples": 50})
    with pytest.warns(UserWarning, match="sampled"):
        report = A.validate(seed=7)
    assert report.sampled
    assert report.seed == 7
    assert report.triples_checked == 50


def test_generic_guard():
    with pytest.raises(ResourceLimit):
        group_algebra_table(Group("cyclic", 8), config={"generic_guard": 4})


def test_index_out_of_range():
    with pytest.raises(ValueError):
        AlgebraTable(F2, ["e"], [1], [(0, 1, 0, 1)], [1])


def test_file_round_trip(tmp_path):
    A = group_algebra_table(Group("dihedral", 8))
    path = tmp_path / "d8.json"
    A.to_file(path)
    B = AlgebraTable.from_file(path)
    assert B.dim == A.dim
    assert B.labels == A.labels
    assert B.products() == A.products()
    assert B.tn_perp(1) == A.tn_perp(1)


def test_parse_errors(tmp_path):
    good = group_algebra_table(Group("cyclic", 2)).to_dict()
    for broken in (
        {k: v for k, v in good.items() if k != "unit"},
        {**good, "field": {"p": 3, "m": 1}},
        {**good, "unit": [1]},
        {**good, "products": [[0, 0, 0]]},
    ):
        with pytest.raises(TableParseError):
            AlgebraTable.from_dict(broken)
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(TableParseError):
        AlgebraTable.from_file(bad)
    with pytest.raises(TableParseError):
        AlgebraTable.from_file(tmp_path / "missing.json")
    array = tmp_path / "array.json"
    array.write_text(json.dumps([1, 2]), encoding="utf-8")
    with pytest.raises(TableParseError):
        AlgebraTable.from_file(array)


def _split_idempotent_table(n):
    """F_2^n with coordinatewise product in the basis f_a = e_a + e_{a+1}, f_{n-1} = e_{n-1}."""
    in_e = np.eye(n, dtype=np.int64) + np.eye(n, k=1, dtype=np.int64)
    products = []
    for a in range(n):
        for b in range(n):
            coords = np.cumsum(in_e[a] & in_e[b]) % 2
            products += [(a, b, int(k), 1) for k in np.flatnonzero(coords)]
    unit = (np.arange(n) + 1) % 2
    form = np.zeros(n, dtype=np.int64)
    form[-1] = 1
    return [f"f{a}" for a in range(n)], unit, products, form


def test_exhaustive_sweep_on_non_monomial_table():
    labels, unit, products, form = _split_idempotent_table(50)
    A = AlgebraTable(F2, labels, unit, products, form)
    assert not A.is_monomial
    report = A.validate()
    assert report.ok, report.summary()
    assert not report.sampled
    assert report.triples_checked == 50**3


def test_exhaustive_sweep_in_small_chunks_finds_broken_product():
    labels, unit, products, form = _split_idempotent_table(12)
    small = {"chunk_terms": 10}
    assert AlgebraTable(F2, labels, unit, products, form, config=small).validate().ok
    # f_3 f_4 = e_4 spreads over f_4 ... f_11; drop its f_7 term
    broken = [p for p in products if p[:3] != (3, 4, 7)]
    assert len(broken) == len(products) - 1
    report = AlgebraTable(F2, labels, unit, broken, form, config=small).validate()
    assert not report.ok
    assert not report.sampled
    assert any(v.kind == "associativity" for v in report.violations)


@pytest.mark.parametrize(
    "table",
    [
        pytest.param(lambda: group_algebra_table(Group("symmetric", 3)), id="kS3"),
        pytest.param(lambda: group_algebra_table(Group("symmetric", 4)), id="kS4"),
        pytest.param(lambda: d2a_table(4, 0), id="D2A4c0"),
        pytest.param(lambda: d2a_table(4, 1), id="D2A4c1"),
    ],
)
def test_squaring_is_additive_modulo_commutators(table):
    A = table()
    K = A.commutator_space()
    rng = np.random.default_rng(11)
    for _ in range(20):
        x, y = rng.integers(0, 2, A.dim), rng.integers(0, 2, A.dim)
        s = x ^ y
        defect = A.mul(s, s) ^ A.mul(x, x) ^ A.mul(y, y)
        assert K.contains(defect)
