import pytest

from kuelshammer.decider import (
    DICHOTOMY,
    check_applicable,
    closed_form_predictions,
    decide_scalar,
    decide_scalar_presented,
    presented_dims,
)
from kuelshammer.exceptions import MethodInapplicable


@pytest.fixture(scope="module")
def sr9():
    return decide_scalar(9, depth=2)


@pytest.mark.parametrize("q", [3, 5, 11, 13])
def test_small_defect_is_inapplicable(q):
    with pytest.raises(MethodInapplicable, match="defect too small"):
        check_applicable(q)


@pytest.mark.parametrize("q", [8, 15, 1])
def test_not_an_odd_prime_power(q):
    with pytest.raises(ValueError):
        check_applicable(q)


def test_inapplicable_exit_code():
    assert MethodInapplicable("x").exit_code == 2


def test_predictions_q9():
    pred = closed_form_predictions(9)
    assert pred["center"] == 11
    assert pred["t1perp"] == 6
    assert pred["zbar"] == 5
    assert (pred["j"], pred["j2"], pred["jmodj2"]) == (2, 0, 2)
    assert pred["block_count"] == 3
    assert pred["principal_center"] == 7
    assert pred["families"]["C2"] == {"count": 2, "dims": [2, 1, 0, 0]}
    assert pred["families"]["C8"]["count"] == 0


def test_predictions_q7():
    pred = closed_form_predictions(7)
    assert (pred["center"], pred["t1perp"], pred["zbar"]) == (9, 5, 4)
    assert pred["block_count"] == 2
    assert pred["families"]["C2"]["count"] == 1


def test_predictions_q17():
    """q' = 1 for q = 17 and the principal block has dim Z = 2^(n-2) + 3."""
    pred = closed_form_predictions(17)
    assert (pred["j"], pred["j2"], pred["jmodj2"]) == (4, 2, 2)
    assert pred["principal_center"] == 2**3 + 3


def test_decide_scalar_q9(sr9):
    assert sr9.c == 1
    assert {k: sr9.dims[k] for k in ("center", "t1perp", "zbar", "j", "j2", "jmodj2")} == {
        "center": 11,
        "t1perp": 6,
        "zbar": 5,
        "j": 2,
        "j2": 0,
        "jmodj2": 2,
    }
    assert "t2perp" in sr9.dims
    assert sr9.routes == {"direct": 2, "subtraction": 2}
    assert sr9.block_count == 3
    assert sr9.principal["zbar"] == 3
    assert sr9.ok, sr9.failed_checks()


def test_q9_parameters(sr9):
    assert (sr9.p, sr9.k, sr9.n, sr9.q_odd, sr9.sign) == (3, 2, 4, 1, 1)
    assert sr9.s == 4
    assert sr9.field_degree == 2
    assert sr9.num_classes == 11
    assert sr9.sylow_order == 16
    assert sr9.sylow_dihedral


def test_decide_scalar_q7():
    sr = decide_scalar(7)
    assert sr.c == 1
    assert sr.block_count == 2
    assert sr.ok


def test_dichotomy_table():
    assert DICHOTOMY == {3: 0, 2: 1}


@pytest.mark.slow
@pytest.mark.parametrize("q", [17, 23, 25, 31, 41, 47, 49])
def test_decide_scalar_suite(q):
    sr = decide_scalar(q)
    assert sr.c == 1
    assert sr.ok, sr.failed_checks()
    assert sr.routes["direct"] == sr.routes["subtraction"] == 2


@pytest.mark.parametrize("c_in, expected", [(0, 3), (1, 2)])
def test_presented_dichotomy(c_in, expected):
    report = decide_scalar_presented(4, c_in)
    assert report.jmodj2 == expected
    assert report.decided_c == c_in
    assert report.dims["dim"] == 37


@pytest.mark.slow
@pytest.mark.parametrize("c_in, expected", [(0, 3), (1, 2)])
def test_presented_dichotomy_s8(c_in, expected):
    assert decide_scalar_presented(8, c_in).jmodj2 == expected


@pytest.mark.parametrize("s", [1, 2])
def test_presented_small_defect(s):
    with pytest.raises(MethodInapplicable):
        decide_scalar_presented(s, 0)


def test_presented_dims_records_support():
    report = presented_dims(4, 0)
    assert report.socle_support
    assert report.dims["center"] >= report.dims["t1perp"] >= 1
