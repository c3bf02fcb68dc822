import numpy as np
import pytest

from kuelshammer.exceptions import ResourceLimit
from kuelshammer.ffield import FiniteField, embed_quadratic, field_create, generator


def test_field_orders_and_generator():
    """The multiplicative group of F_q is cyclic of order q - 1."""
    for p, k in [(3, 1), (3, 2), (5, 1), (7, 2), (2, 4)]:
        F = field_create(p, k)
        assert F.order == p**k
        assert generator(F).multiplicative_order() == p**k - 1


def test_f4_arithmetic():
    """F_4 = F_2[x]/(x^2 + x + 1): x * x = x + 1 and Frobenius swaps x and x + 1."""
    F4 = field_create(2, 2)
    assert F4.mul(2, 2) == 3
    assert F4.frobenius(2) == 3
    assert F4.frobenius(3) == 2
    assert F4.add(2, 3) == 1


def test_inverses_in_f16():
    F16 = field_create(2, 4)
    for a in range(1, 16):
        assert F16.mul(a, F16.inv(a)) == 1


def test_array_arithmetic_matches_scalar():
    for F in (field_create(2, 3), field_create(3, 2)):
        a = np.arange(F.order)
        b = a[::-1].copy()
        assert F.mul_array(a, b).tolist() == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
        assert F.add_array(a, b).tolist() == [F.add(int(x), int(y)) for x, y in zip(a, b)]
        assert F.square_array(a).tolist() == [F.mul(int(x), int(x)) for x in a]
        assert F.inv_array(a[1:]).tolist() == [F.inv(int(x)) for x in a[1:]]


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        field_create(3, 1).inv(0)


def test_field_create_is_cached():
    assert field_create(3, 2) is field_create(3, 2)


def test_bad_characteristic():
    with pytest.raises(ValueError, match="not prime"):
        FiniteField(4, 1)


def test_size_guard():
    with pytest.raises(ResourceLimit):
        FiniteField(2, 40)


def test_self_check():
    assert field_create(7, 2).self_check()
    assert field_create(2, 8).self_check()


def test_embed_quadratic_is_a_ring_homomorphism():
    """Additive and multiplicative on all pairs of F_9."""
    base = field_create(3, 2)
    emb = embed_quadratic(base)
    elements = base.elements()
    for x in elements:
        for y in elements:
            assert emb(x + y) == emb(x) + emb(y)
            assert emb(x * y) == emb(x) * emb(y)


def test_embed_quadratic_sigma_tau():
    emb = embed_quadratic(field_create(3, 2))
    assert emb.sigma.multiplicative_order() == 80
    assert emb.tau.multiplicative_order() == 8
    assert emb.tau == emb.sigma**10


def test_embed_quadratic_preimage():
    emb = embed_quadratic(field_create(5, 1))
    for x in emb.base.elements():
        assert emb.preimage(emb(x)) == x
    with pytest.raises(ValueError):
        emb.preimage(emb.sigma)


def test_embed_quadratic_rejects_characteristic_two():
    with pytest.raises(ValueError):
        embed_quadratic(field_create(2, 2))
