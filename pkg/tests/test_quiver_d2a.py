import numpy as np
import pytest

from kuelshammer.quiver_d2a import D2APresentation, d2a_path_count, d2a_table, d2a_words


def _product(table, x, y):
    return table.basis_product(table.labels.index(x), table.labels.index(y))


@pytest.mark.parametrize("s, count", [(1, 10), (2, 19), (4, 37), (8, 73)])
def test_path_count(s, count):
    assert d2a_path_count(s) == count == 9 * s + 1


@pytest.mark.parametrize("s", [1, 2, 4])
def test_words_match_enumeration(s):
    words = d2a_words(s)
    assert len(words) == len(set(words)) == d2a_path_count(s) - 2
    assert all("cb" not in w and "aa" not in w for w in words)


@pytest.mark.parametrize("s", [1, 2, 4])
@pytest.mark.parametrize("c", [0, 1])
def test_table_is_symmetric(s, c):
    table = d2a_table(s, c)
    assert table.dim == 9 * s + 1
    report = table.validate()
    assert report.ok, report.summary()
    assert table.socle_support


def test_aa_relation():
    soc0 = "abc" * 4
    zero = d2a_table(4, 0)
    assert not _product(zero, "a", "a").any()
    one = d2a_table(4, 1)
    assert np.flatnonzero(_product(one, "a", "a")).tolist() == [one.labels.index(soc0)]


def test_cb_vanishes():
    table = d2a_table(2, 1)
    assert not _product(table, "c", "b").any()


def test_bca_power_is_abc_power():
    table = d2a_table(2, 0)
    assert "bcabca" not in table.labels
    left = _product(table, "bc", "abca")
    assert np.flatnonzero(left).tolist() == [table.labels.index("abcabc")]


def test_center_is_tn_perp_zero():
    table = d2a_table(4, 1)
    assert table.center() == table.tn_perp(0)


def test_tn_perp_chain_decreases():
    table = d2a_table(4, 0)
    dims = [table.tn_perp(n).dim for n in range(4)]
    assert dims == sorted(dims, reverse=True)


def test_presentation_validation():
    with pytest.raises(ValueError):
        D2APresentation(3, 0)
    with pytest.raises(ValueError):
        D2APresentation(4, 2)
    with pytest.raises(ValueError):
        d2a_path_count(0)
    pres = D2APresentation(8, 1)
    assert pres.n == 5
    assert pres.max_length == 24
