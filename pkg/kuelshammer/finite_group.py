"""
Abstract base for finite group backends.

Elements are integer ids 0..|G|-1 and every operation is vectorized over
numpy id arrays. Backends supply multiply, invert, identity and encode;
class computation and Sylow search live in composition modules.
"""
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

import numpy as np

from .exceptions import InvariantViolation, ResourceLimit
from .finite_group_mixin_conjugacy import ConjugacyModule
from .finite_group_mixin_sylow import SylowModule
from .utilities import DEFAULT_SEED


class GroupABC(ABC):
    """
    Base class for finite groups given by element ids.

    :param order: |G|.
    :param config: Optional overrides, e.g. {"element_guard": 500_000}.
    :param allow_large: Raise the guard to LARGE_ELEMENT_GUARD.
    :param guard: Explicit element guard, taking precedence over the rest.
    """

    ELEMENT_GUARD = 200_000
    LARGE_ELEMENT_GUARD = 2_100_000

    kind = "abstract"

    def __init__(
        self,
        order: int,
        config: Optional[Dict[str, Any]] = None,
        allow_large: bool = False,
        guard: Optional[int] = None,
    ):
        self.config = config or {}
        limit = guard or self.config.get("element_guard")
        if limit is None:
            limit = self.LARGE_ELEMENT_GUARD if allow_large else self.ELEMENT_GUARD
        if order > limit:
            raise ResourceLimit(f"group of order {order} exceeds the element guard {limit}")
        self.order = order
        self.conjugacy = ConjugacyModule(self)
        self.sylow = SylowModule(self)

    @abstractmethod
    def multiply(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise products of id arrays."""

    @abstractmethod
    def invert(self, a: np.ndarray) -> np.ndarray:
        pass

    @property
    @abstractmethod
    def identity(self) -> int:
        pass

    @abstractmethod
    def encode(self, x: int) -> bytes:
        """A canonical byte string for element x."""

    def describe(self, x: int) -> str:
        return str(int(x))

    def class_seeds(self) -> List[int]:
        """Representatives fixing the leading class ids; empty means smallest id first."""
        return []

    def class_label(self, cid: int) -> str:
        return f"K{cid}"

    def __repr__(self) -> str:
        return f"{type(self).__name__}(order={self.order})"

    # ------------------------------------------------------------ helpers

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def mul(self, a: int, b: int) -> int:
        return int(self.multiply(np.array([a]), np.array([b]))[0])

    def power(self, ids: np.ndarray, e: int) -> np.ndarray:
        ids = np.asarray(ids, dtype=np.int64)
        if e < 0:
            ids, e = self.invert(ids), -e
        out = np.full(ids.shape, self.identity, dtype=np.int64)
        base = ids
        while e:
            if e & 1:
                out = self.multiply(out, base)
            base = self.multiply(base, base)
            e >>= 1
        return out

    def element_order(self, ids: np.ndarray) -> np.ndarray:
        ids = np.asarray(ids, dtype=np.int64)
        orders = np.ones(ids.shape, dtype=np.int64)
        done = ids == self.identity
        cur = ids
        k = 1
        while not done.all():
            cur = self.multiply(cur, ids)
            k += 1
            if k > self.order:
                raise InvariantViolation("element order exceeds group order")
            newly = (cur == self.identity) & ~done
            orders[newly] = k
            done |= newly
        return orders

    def centralizer_order(self, x: int) -> int:
        g = self.elements()
        xs = np.full(len(g), x, dtype=np.int64)
        return int((self.multiply(g, xs) == self.multiply(xs, g)).sum())

    def spot_check_axioms(self, samples: int = 500, seed: int = DEFAULT_SEED) -> bool:
        """Associativity, identity and inverse laws on seeded random triples."""
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, self.order, size=(3, samples))
        e = np.full(samples, self.identity, dtype=np.int64)
        assoc = self.multiply(self.multiply(a, b), c) == self.multiply(a, self.multiply(b, c))
        ident = (self.multiply(a, e) == a) & (self.multiply(e, a) == a)
        inv = self.multiply(a, self.invert(a)) == e
        return bool(assoc.all() and ident.all() and inv.all())

    # ---------------------------------------------------------- delegation

    def conjugacy_classes(self):
        return self.conjugacy.partition

    def regular_classes(self, p: int = 2) -> List[int]:
        return self.conjugacy.regular_classes(p)

    def sylow2(self, seed: int = DEFAULT_SEED):
        return self.sylow.sylow2(seed)
