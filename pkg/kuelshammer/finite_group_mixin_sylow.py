import logging
from typing import TYPE_CHECKING, List, Optional, Set

import numpy as np

from .exceptions import InvariantViolation
from .utilities import DEFAULT_SEED, is_power_of_two, two_adic_valuation

if TYPE_CHECKING:
    from .finite_group import GroupABC
    from .finite_group_product import GroupSub

logger = logging.getLogger("kuelshammer")


class SylowModule:
    """Greedy construction of a Sylow 2-subgroup from 2-elements."""

    MAX_ATTEMPTS = 3

    def __init__(self, group: "GroupABC"):
        self.group = group

    def two_elements(self) -> np.ndarray:
        """Non-identity elements of 2-power order."""
        partition = self.group.conjugacy.partition
        rep_orders = self.group.element_order(partition.representatives)
        orders = rep_orders[partition.class_of]
        mask = (orders > 1) & ((orders & (orders - 1)) == 0)
        return np.flatnonzero(mask)

    def closure(self, gens: List[int], limit: int) -> Optional[Set[int]]:
        """<gens> if it is a 2-group of order at most limit, else None."""
        group = self.group
        gen_arr = np.array(gens, dtype=np.int64)
        seen = {group.identity}
        frontier = np.array([group.identity], dtype=np.int64)
        while len(frontier):
            left = np.repeat(frontier, len(gen_arr))
            right = np.tile(gen_arr, len(frontier))
            new = [int(x) for x in np.unique(group.multiply(left, right)) if int(x) not in seen]
            seen.update(new)
            if len(seen) > limit:
                return None
            frontier = np.array(new, dtype=np.int64)
        if not is_power_of_two(len(seen)):
            return None
        return seen

    def sylow2(self, seed: int = DEFAULT_SEED) -> "GroupSub":
        from .finite_group_product import GroupSub

        group = self.group
        target = 2 ** two_adic_valuation(group.order)
        if target == 1:
            return GroupSub(group, [group.identity])
        candidates = self.two_elements()
        orders = group.element_order(candidates)
        for attempt in range(self.MAX_ATTEMPTS):
            rng = np.random.default_rng(seed + attempt)
            keys = rng.permutation(len(candidates))
            # one element of largest order, then the rest smallest order first
            first = candidates[np.lexsort((keys, -orders))][0]
            rest = candidates[np.lexsort((keys, orders))]
            members = self.closure([int(first)], target)
            gens = [int(first)]
            for g in rest:
                if members is None or len(members) == target:
                    break
                if int(g) in members:
                    continue
                grown = self.closure(gens + [int(g)], target)
                if grown is not None:
                    members = grown
                    gens.append(int(g))
            if members is not None and len(members) == target:
                logger.info("%s: Sylow 2-subgroup of order %d from %d generators", group, target, len(gens))
                return GroupSub(group, sorted(members), generators=gens)
        raise InvariantViolation(f"Sylow 2-subgroup search failed for {group}")


def is_dihedral_2group(sub: "GroupSub") -> bool:
    """True when sub is dihedral of order 2^k >= 4 (Klein four included)."""
    n = sub.order
    if n < 4 or not is_power_of_two(n):
        return False
    ids = sub.elements()
    orders = sub.element_order(ids)
    rotations = ids[orders == n // 2]
    if len(rotations) == 0:
        return False
    r = int(rotations[0])
    cyclic = {sub.identity}
    x = r
    while x != sub.identity:
        cyclic.add(x)
        x = sub.mul(x, r)
    r_inv = int(sub.invert(np.array([r]))[0])
    for s in ids[orders == 2]:
        s = int(s)
        if s in cyclic:
            continue
        if sub.mul(sub.mul(s, r), s) == r_inv:
            return True
    return False
