"""
Exact arithmetic in finite fields F_{p^k}.

Odd characteristic fields carry the matrix entries of PGL_2(q); fields of
characteristic 2 are the coefficient side of the group algebra. Elements are
coded as integers sum(c_i p^i) of their polynomial coefficients, which lets
numpy arrays of codes stand in for vectors over the field.

>>> F = field_create(3, 2)
>>> F.order, F.modulus
(9, (1, 0, 1))
>>> g = generator(F)
>>> g.multiplicative_order()
8
"""
from __future__ import annotations

import functools
import logging
import random
from dataclasses import dataclass, field as dataclass_field
from typing import Dict, List, Optional, Tuple

import numpy as np
from sympy import isprime, primefactors
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem, gf_strip

from .exceptions import ResourceLimit
from .utilities import DEFAULT_SEED

logger = logging.getLogger(__name__)


class FiniteField:
    """The field F_{p^k} with the lowest lexicographic irreducible modulus."""

    SIZE_GUARD = 2**32
    LOG_TABLE_LIMIT = 2**16
    DENSE_TABLE_LIMIT = 2**12

    def __init__(self, p: int, k: int = 1, config: Optional[dict] = None):
        """
        :param p: the characteristic, a prime.
        :param k: the degree over F_p.
        :param config: optional overrides for ``size_guard``.

        >>> FiniteField(4, 1)
        Traceback (most recent call last):
        ...
        ValueError: p = 4 is not prime
        >>> FiniteField(2, 40)
        Traceback (most recent call last):
        ...
        kuelshammer.exceptions.ResourceLimit: field of order 2^40 exceeds the size guard 4294967296
        """
        config = config or {}
        guard = config.get("size_guard", self.SIZE_GUARD)
        if not isprime(p):
            raise ValueError(f"p = {p} is not prime")
        if k < 1:
            raise ValueError(f"degree k = {k} must be positive")
        if p**k > guard:
            raise ResourceLimit(f"field of order {p}^{k} exceeds the size guard {guard}")

        self.p = p
        self.k = k
        self.order = p**k
        self.modulus: Tuple[int, ...] = self._lowest_irreducible()
        self._modulus_high = list(reversed(self.modulus))
        self._modulus_int = sum(c << i for i, c in enumerate(self.modulus)) if p == 2 else None

        self._exp: Optional[np.ndarray] = None
        self._log: Optional[np.ndarray] = None
        self._generator_code: Optional[int] = None
        if self.order <= self.LOG_TABLE_LIMIT:
            self._build_log_tables()

    # ------------------------------------------------------------------ setup

    def _lowest_irreducible(self) -> Tuple[int, ...]:
        if self.k == 1:
            return (0, 1)
        for code in range(self.p**self.k):
            low = self.digits(code)
            high = [1] + list(reversed(low))
            if gf_irreducible_p([ZZ(c) for c in high], self.p, ZZ):
                return tuple(low) + (1,)
        raise ValueError(f"no irreducible polynomial of degree {self.k} over F_{self.p}")

    def _build_log_tables(self):
        n = self.order - 1
        g = self._find_generator()
        exp = np.zeros(n, dtype=np.int64)
        log = np.zeros(self.order, dtype=np.int64)
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._poly_mul(x, g)
        self._exp, self._log = exp, log

    def _find_generator(self) -> int:
        if self._generator_code is not None:
            return self._generator_code
        n = self.order - 1
        if n == 1:
            self._generator_code = 1
            return 1
        exponents = [n // r for r in primefactors(n)]
        for code in range(2, self.order):
            if all(self._poly_pow(code, e) != 1 for e in exponents):
                self._generator_code = code
                return code
        raise ValueError(f"no generator found in F_{self.order}")

    # ----------------------------------------------------------- code helpers

    def digits(self, code: int) -> List[int]:
        """Coefficients of a code, lowest degree first.

        >>> field_create(3, 2).digits(7)
        [1, 2]
        """
        out = []
        for _ in range(self.k):
            code, d = divmod(code, self.p)
            out.append(d)
        return out

    def from_digits(self, digits) -> int:
        code = 0
        for d in reversed(list(digits)):
            code = code * self.p + (int(d) % self.p)
        return code

    def _poly_mul(self, a: int, b: int) -> int:
        if self.p == 2:
            out = 0
            while b:
                if b & 1:
                    out ^= a
                b >>= 1
                a <<= 1
                if a >> self.k & 1:
                    a ^= self._modulus_int
            return out
        if self.k == 1:
            return a * b % self.p
        fa = gf_strip([ZZ(c) for c in reversed(self.digits(a))])
        fb = gf_strip([ZZ(c) for c in reversed(self.digits(b))])
        rem = gf_rem(gf_mul(fa, fb, self.p, ZZ), self._modulus_high, self.p, ZZ)
        return self.from_digits(int(c) for c in reversed(rem))

    def _poly_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._poly_mul(result, base)
            base = self._poly_mul(base, base)
            e >>= 1
        return result

    # ------------------------------------------------------ scalar arithmetic

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def degree(self) -> int:
        return self.k

    @property
    def has_log_tables(self) -> bool:
        return self._exp is not None

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.from_digits(x + y for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.from_digits(-x for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return int(self._exp[(self._log[a] + self._log[b]) % (self.order - 1)])
        return self._poly_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self._exp is not None:
            return int(self._exp[(-self._log[a]) % (self.order - 1)])
        return self._poly_pow(a, self.order - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return int(self._exp[(self._log[a] * e) % (self.order - 1)])
        return self._poly_pow(a, e)

    def frobenius(self, a: int, e: int = 1) -> int:
        """a^(p^e)."""
        return self.pow(a, self.p**e)

    # -------------------------------------------------- vectorized arithmetic

    @functools.cached_property
    def dense_tables(self) -> Tuple[np.ndarray, np.ndarray]:
        """(add, mul) tables of shape (order, order) for small fields."""
        if self.order > self.DENSE_TABLE_LIMIT:
            raise ResourceLimit(f"dense tables not built above order {self.DENSE_TABLE_LIMIT}")
        codes = np.arange(self.order, dtype=np.int64)
        add = self._add_digitwise(codes[:, None], codes[None, :])
        mul = self.mul_array(codes[:, None], codes[None, :])
        return add, mul

    def _add_digitwise(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        out = np.zeros(a.shape, dtype=np.int64)
        place = 1
        for _ in range(self.k):
            out += ((a // place + b // place) % self.p) * place
            place *= self.p
        return out

    def add_array(self, a, b) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if self.order <= self.DENSE_TABLE_LIMIT:
            return self.dense_tables[0][np.asarray(a), np.asarray(b)]
        return self._add_digitwise(a, b)

    def neg_array(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        out = np.zeros(a.shape, dtype=np.int64)
        place = 1
        for _ in range(self.k):
            out += ((-(a // place)) % self.p) * place
            place *= self.p
        return out

    def mul_array(self, a, b) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if self._exp is None:
            return np.vectorize(self.mul, otypes=[np.int64])(a, b)
        out = self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def square_array(self, a) -> np.ndarray:
        return self.mul_array(a, a)

    def inv_array(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if (a == 0).any():
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self._exp is None:
            return np.vectorize(self.inv, otypes=[np.int64])(a)
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def pow_array(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self._exp is None:
            return np.vectorize(lambda x: self.pow(x, e), otypes=[np.int64])(a)
        out = self._exp[(self._log[a] * e) % (self.order - 1)]
        if e == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, out)

    def frobenius_array(self, a, e: int = 1) -> np.ndarray:
        return self.pow_array(a, self.p**e)

    # ------------------------------------------------------------ elements

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            return value
        return FieldElement(self, int(value) % self.order if self.k == 1 else int(value))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> List["FieldElement"]:
        return [FieldElement(self, c) for c in range(self.order)]

    def generator(self) -> "FieldElement":
        return FieldElement(self, self._find_generator())

    def self_check(self, seed: int = DEFAULT_SEED, samples: int = 100) -> bool:
        """Frobenius fixed-point test x^|F| = x.

        >>> field_create(7, 2).self_check()
        True
        """
        if self.order <= 10**4:
            codes = range(self.order)
        else:
            rng = random.Random(seed)
            codes = [rng.randrange(self.order) for _ in range(samples)]
        return all(self.pow(c, self.order) == c for c in codes)

    # ------------------------------------------------------------- dunders

    @property
    def key(self) -> Tuple[int, int, Tuple[int, ...]]:
        return (self.p, self.k, self.modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"FiniteField({self.p}, {self.k})"

    def __str__(self) -> str:
        return f"F_{self.order}"


@dataclass(frozen=True)
class FieldElement:
    """An element of a FiniteField, stored by its integer code."""

    field: FiniteField = dataclass_field(repr=False)
    code: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"cannot combine elements of {self.field} and {other.field}")
            return other.code
        return self.field.element(other).code

    @property
    def coefficients(self) -> Tuple[int, ...]:
        return tuple(self.field.digits(self.code))

    def is_zero(self) -> bool:
        return self.code == 0

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.code, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.code, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.code, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.mul(self.code, self.field.inv(self._coerce(other))))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def __int__(self) -> int:
        return self.code

    def multiplicative_order(self) -> int:
        if self.code == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.field.order - 1
        order = n
        for r in primefactors(n):
            while order % r == 0 and self.field.pow(self.code, order // r) == 1:
                order //= r
        return order


@functools.lru_cache(maxsize=None)
def field_create(p: int, k: int = 1) -> FiniteField:
    """Build (and cache) F_{p^k}.

    >>> field_create(3, 1).modulus
    (0, 1)
    >>> field_create(3, 2).order - 1
    8
    """
    return FiniteField(p, k)


def generator(field: FiniteField) -> FieldElement:
    """Smallest code of multiplicative order |F| - 1.

    >>> generator(field_create(3, 1)).code
    2
    """
    return field.generator()


@dataclass(frozen=True)
class QuadraticEmbedding:
    """F_q inside F_{q^2}, with sigma generating F_{q^2}^* and tau = sigma^(q+1)."""

    base: FiniteField
    ext: FiniteField
    sigma: FieldElement
    tau: FieldElement
    table: Tuple[int, ...]
    inverse: Dict[int, int] = dataclass_field(repr=False, compare=False)

    def __call__(self, x) -> FieldElement:
        code = x.code if isinstance(x, FieldElement) else int(x)
        return FieldElement(self.ext, self.table[code])

    def preimage(self, y: FieldElement) -> FieldElement:
        """Base element mapping to y; ValueError if y is outside the image."""
        try:
            return FieldElement(self.base, self.inverse[y.code])
        except KeyError:
            raise ValueError(f"{y} does not lie in the embedded F_{self.base.order}") from None


def embed_quadratic(base: FiniteField) -> QuadraticEmbedding:
    """Embed F_q in F_{q^2} and fix (sigma, tau).

    >>> emb = embed_quadratic(field_create(3, 2))
    >>> emb.tau.multiplicative_order()
    8
    >>> emb.tau == emb.sigma ** 10
    True
    """
    if base.p == 2:
        raise ValueError("embed_quadratic expects an odd characteristic field")
    q = base.order
    ext = field_create(base.p, 2 * base.k)
    sigma = ext.generator()
    tau = sigma ** (q + 1)

    # root of the base modulus inside the subfield {0} u <tau>; prime-field codes agree
    subfield = [tau ** i for i in range(q - 1)]
    root = None
    for candidate in ([ext.zero] if base.k == 1 else []) + subfield:
        value = ext.zero
        for c in reversed(base.modulus):
            value = value * candidate + c
        if value.is_zero():
            root = candidate
            break
    if root is None:
        raise ValueError(f"base modulus has no root in F_{ext.order}")

    powers = [ext.one]
    for _ in range(1, base.k):
        powers.append(powers[-1] * root)
    table = []
    for code in range(q):
        value = ext.zero
        for d, rp in zip(base.digits(code), powers):
            value = value + rp * d
        table.append(value.code)
    logger.debug("embedded F_%d into F_%d; sigma code %d", q, ext.order, sigma.code)
    return QuadraticEmbedding(
        base=base, ext=ext, sigma=sigma, tau=tau,
        table=tuple(table), inverse={c: i for i, c in enumerate(table)},
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod(optionflags=doctest.ELLIPSIS)
