"""
PGL_2(q) for odd q as an explicit element table.

Matrices are scaled so their first nonzero entry is 1, which makes each
projective class a unique 4-tuple of F_q codes. Elements are numbered by the
sorted order of key = ((a*q + b)*q + c)*q + d.

Class ids follow the standard ordering of representatives:

==============  =====================================  ============
class           representative                         cid
==============  =====================================  ============
A1              [[1, 0], [0, 1]]                       0
A2              [[1, 1], [0, 1]]                       1
A3,i            [[1, 0], [0, tau^i]], 1 <= i <= (q-1)/2  1 + i
A4,j            [[0, -tau^j], [1, sigma^j + sigma^jq]]  1 + (q-1)/2 + j
A4,(q+1)/2      [[0, tau], [1, 0]]                     q + 1
==============  =====================================  ============

where sigma generates F_{q^2}^* and tau = sigma^(q+1) generates F_q^*.

>>> G = GroupPGL2(9)
>>> G.order, G.class_label(G.a3(5)), G.a4(0)
(720, 'A3,3', 1)
"""
import logging
from typing import List, Optional, Tuple

import numpy as np
import pandas as pd
from sympy import factorint

from .exceptions import InvariantViolation
from .ffield import embed_quadratic, field_create
from .finite_group import GroupABC
from .utilities import congruence_data, odd_part, two_adic_valuation

logger = logging.getLogger("kuelshammer")


def prime_power(q: int) -> Tuple[int, int]:
    """(p, k) with q = p^k and p odd.

    >>> prime_power(49)
    (7, 2)
    """
    if q < 3:
        raise ValueError(f"q = {q} must be an odd prime power at least 3")
    if q % 2 == 0:
        raise ValueError(f"q = {q} must be odd")
    factors = factorint(q)
    if len(factors) != 1:
        raise ValueError(f"q = {q} is not a prime power")
    (p, k), = factors.items()
    return int(p), int(k)


class GroupPGL2(GroupABC):
    """
    The projective general linear group PGL_2(q).

    :param q: An odd prime power.
    """

    kind = "pgl2"

    def __init__(self, q: int, **kwargs):
        p, k = prime_power(q)
        order = q * (q * q - 1)
        # guard check before any table is built
        GroupABC.__init__(self, order, **kwargs)
        self.q, self.p, self.k = q, p, k
        self.field = field_create(p, k)
        self.embedding = embed_quadratic(self.field)
        self._add, self._mul = self.field.dense_tables
        self._neg = self.field.neg_array(np.arange(q))
        self._inv = np.zeros(q, dtype=np.int64)
        self._inv[1:] = self.field.inv_array(np.arange(1, q))
        self._mats, self._keys = self._enumerate()
        if len(self._keys) != order:
            raise InvariantViolation(f"enumerated {len(self._keys)} elements, expected {order}")
        logger.info("PGL_2(%d): %d elements enumerated", q, order)

    # --------------------------------------------------------- element table

    def _key(self, mats: np.ndarray) -> np.ndarray:
        q = self.q
        return ((mats[..., 0] * q + mats[..., 1]) * q + mats[..., 2]) * q + mats[..., 3]

    def _enumerate(self):
        q = self.q
        r = np.arange(q, dtype=np.int64)
        b, c, d = (x.ravel() for x in np.meshgrid(r, r, r, indexing="ij"))
        det = self._add[d, self._neg[self._mul[b, c]]]
        keep = det != 0
        first = np.stack([np.ones(keep.sum(), dtype=np.int64), b[keep], c[keep], d[keep]], axis=1)
        c2, d2 = (x.ravel() for x in np.meshgrid(r[1:], r, indexing="ij"))
        second = np.stack([np.zeros_like(c2), np.ones_like(c2), c2, d2], axis=1)
        mats = np.concatenate([first, second])
        keys = self._key(mats)
        order = np.argsort(keys)
        return mats[order], keys[order]

    def canonicalize(self, mats: np.ndarray) -> np.ndarray:
        lead = np.where(mats[..., 0] != 0, mats[..., 0], mats[..., 1])
        return self._mul[mats, self._inv[lead][..., None]]

    def lookup(self, mats: np.ndarray) -> np.ndarray:
        keys = self._key(self.canonicalize(mats))
        idx = np.minimum(np.searchsorted(self._keys, keys), len(self._keys) - 1)
        if not (self._keys[idx] == keys).all():
            raise ValueError("singular matrix has no element id")
        return idx

    def from_matrix(self, entries) -> int:
        return int(self.lookup(np.array([entries], dtype=np.int64))[0])

    def matrix(self, x: int) -> List[int]:
        return self._mats[int(x)].tolist()

    def multiply(self, a, b):
        x, y = self._mats[np.asarray(a)], self._mats[np.asarray(b)]
        add, mul = self._add, self._mul
        out = np.stack(
            [
                add[mul[x[..., 0], y[..., 0]], mul[x[..., 1], y[..., 2]]],
                add[mul[x[..., 0], y[..., 1]], mul[x[..., 1], y[..., 3]]],
                add[mul[x[..., 2], y[..., 0]], mul[x[..., 3], y[..., 2]]],
                add[mul[x[..., 2], y[..., 1]], mul[x[..., 3], y[..., 3]]],
            ],
            axis=-1,
        )
        return self.lookup(out)

    def invert(self, a):
        x = self._mats[np.asarray(a)]
        adj = np.stack([x[..., 3], self._neg[x[..., 1]], self._neg[x[..., 2]], x[..., 0]], axis=-1)
        return self.lookup(adj)

    @property
    def identity(self) -> int:
        return self.from_matrix([1, 0, 0, 1])

    def encode(self, x: int) -> bytes:
        width = 1 if self.q < 256 else 2
        return b"".join(int(v).to_bytes(width, "big") for v in self._mats[int(x)])

    def describe(self, x: int) -> str:
        a, b, c, d = self._mats[int(x)]
        return f"[[{a}, {b}], [{c}, {d}]]"

    def __repr__(self) -> str:
        return f"PGL_2({self.q})"

    # ------------------------------------------------------ class ordering

    @property
    def tau(self) -> int:
        """Code in F_q of tau = sigma^(q+1)."""
        return self.embedding.preimage(self.embedding.tau).code

    def _base(self, element) -> int:
        return self.embedding.preimage(element).code

    def class_representative_matrices(self) -> List[List[int]]:
        q, F = self.q, self.field
        sigma = self.embedding.sigma
        reps = [[1, 0, 0, 1], [1, 1, 0, 1]]
        for i in range(1, (q - 1) // 2 + 1):
            reps.append([1, 0, 0, F.pow(self.tau, i)])
        for j in range(1, (q - 1) // 2 + 1):
            norm = self._base(sigma ** (j * (q + 1)))
            trace = self._base(sigma ** j + sigma ** (j * q))
            reps.append([0, F.neg(norm), 1, trace])
        reps.append([0, self.tau, 1, 0])
        return reps

    def class_seeds(self) -> List[int]:
        return [self.from_matrix(m) for m in self.class_representative_matrices()]

    @property
    def num_classes(self) -> int:
        return self.q + 2

    def class_label(self, cid: int) -> str:
        half = (self.q - 1) // 2
        if cid == 0:
            return "A1"
        if cid == 1:
            return "A2"
        if cid <= 1 + half:
            return f"A3,{cid - 1}"
        if cid <= self.q + 1:
            return f"A4,{cid - 1 - half}"
        raise ValueError(f"class id {cid} out of range for PGL_2({self.q})")

    def a3(self, i: int) -> int:
        """cid of A3,i for any integer i; A3,0 is A1."""
        q = self.q
        i %= q - 1
        if i > (q - 1) // 2:
            i = q - 1 - i
        return 0 if i == 0 else 1 + i

    def a4(self, j: int) -> int:
        """cid of A4,j for any integer j; A4,0 is taken to be A2."""
        q = self.q
        j %= q + 1
        if j > (q + 1) // 2:
            j = q + 1 - j
        return 1 if j == 0 else 1 + (q - 1) // 2 + j

    def expected_class_sizes(self) -> List[int]:
        q = self.q
        sizes = [1, q * q - 1]
        sizes += [q * (q + 1)] * ((q - 3) // 2) + [q * (q + 1) // 2]
        sizes += [q * (q - 1)] * ((q - 1) // 2) + [q * (q - 1) // 2]
        return sizes

    def expected_centralizer_orders(self) -> List[int]:
        return [self.order // s for s in self.expected_class_sizes()]

    # -------------------------------------------------- arithmetic of q

    def two_part(self) -> int:
        return two_adic_valuation(self.order)

    def odd_part(self) -> int:
        return odd_part(self.order)

    def congruence(self) -> Optional[int]:
        """+1 or -1 for q = +-1 mod 8, None otherwise."""
        return {1: 1, 7: -1}.get(self.q % 8)

    def congruence_data(self) -> Tuple[int, int, int]:
        return congruence_data(self.q)

    def zbar_complement(self) -> Optional[List[int]]:
        """cids spanning a complement of T_1^perp in the center.

        q = 1 mod 8: A1, A3,(q-1)/2, A3,i for i <= (q-5)/4, A4,j for j <= (q-1)/4.
        q = 7 mod 8: A1, A4,(q+1)/2, A3,i for i <= (q-3)/4, A4,j for j <= (q-3)/4.
        """
        sign = self.congruence()
        if sign is None:
            return None
        q = self.q
        if sign == 1:
            cids = [0, self.a3((q - 1) // 2)]
            cids += [self.a3(i) for i in range(1, (q - 5) // 4 + 1)]
            cids += [self.a4(j) for j in range(1, (q - 1) // 4 + 1)]
        else:
            cids = [0, self.a4((q + 1) // 2)]
            cids += [self.a3(i) for i in range(1, (q - 3) // 4 + 1)]
            cids += [self.a4(j) for j in range(1, (q - 3) // 4 + 1)]
        return sorted(cids)

    def conjugacy_cosets_table(self) -> pd.DataFrame:
        """One row per class: label, representative, size, centralizer and element order."""
        partition = self.conjugacy.partition
        orders = self.element_order(partition.representatives)
        rows = []
        for c, order in zip(partition, orders):
            rows.append(
                {
                    "class": c.label,
                    "representative": self.describe(c.representative),
                    "size": c.size,
                    "centralizer": self.order // c.size,
                    "element_order": int(order),
                    "two_regular": bool(order % 2),
                }
            )
        return pd.DataFrame(rows)

    def class_elements_a3(self, i: int) -> np.ndarray:
        """Ids of A3,i built from its two parametrized families.

        The q^2 matrices M(alpha, beta) and the q matrices
        [[t, 0], [gamma (t - 1), 1]] with t = tau^i, 1 <= i <= (q-3)/2.
        """
        q = self.q
        if not 1 <= i <= (q - 3) // 2:
            raise ValueError(f"A3,{i} needs 1 <= i <= {(q - 3) // 2}")
        add, mul, neg = self._add, self._mul, self._neg
        t = self.field.pow(self.tau, i)
        r = np.arange(q, dtype=np.int64)
        alpha, beta = (x.ravel() for x in np.meshgrid(r, r, indexing="ij"))
        ab = mul[alpha, beta]
        one_ab = add[1, ab]
        first = np.stack(
            [
                add[one_ab, neg[mul[ab, t]]],
                add[neg[beta], mul[beta, t]],
                mul[mul[alpha, one_ab], add[1, neg[t]]],
                add[neg[ab], mul[one_ab, t]],
            ],
            axis=1,
        )
        gamma = r
        second = np.stack(
            [np.full(q, t), np.zeros(q, dtype=np.int64), mul[gamma, add[t, neg[1]]], np.ones(q, dtype=np.int64)],
            axis=1,
        )
        return self.lookup(np.concatenate([first, second]))


if __name__ == "__main__":
    import doctest

    doctest.testmod(optionflags=doctest.ELLIPSIS)
