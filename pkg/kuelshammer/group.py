from typing import Any, Dict, List, Optional

import numpy as np

from .finite_group import GroupABC


class Group:
    """
    Factory dispatching on the group kind.

    >>> Group("cyclic", 8).order
    8
    >>> Group("pgl2", 7).order
    336
    """

    def __new__(cls, kind: str, *args, **kwargs) -> GroupABC:

        from .finite_group_pgl2 import GroupPGL2
        from .finite_group_product import GroupProduct
        from .finite_group_small import GroupCyclic, GroupDihedral, GroupSymmetric

        handlers = {
            "pgl2": GroupPGL2,
            "cyclic": GroupCyclic,
            "dihedral": GroupDihedral,
            "symmetric": GroupSymmetric,
            "product": GroupProduct,
        }

        handler = handlers.get(kind)
        if handler is None:
            raise ValueError(f"Unsupported group kind: {kind}")

        return handler(*args, **kwargs)


def pgl2(q: int, config: Optional[Dict[str, Any]] = None, allow_large: bool = False, guard: Optional[int] = None):
    return Group("pgl2", q, config=config, allow_large=allow_large, guard=guard)


def direct_product(a: GroupABC, b: GroupABC, guard: Optional[int] = None) -> GroupABC:
    """
    >>> len(conjugacy_classes(direct_product(Group("symmetric", 4), Group("cyclic", 2))))
    10
    """
    return Group("product", a, b, guard=guard)


def conjugacy_classes(g: GroupABC):
    return g.conjugacy.partition


def regular_classes(g: GroupABC, p: int = 2):
    return g.conjugacy.regular_classes(p)


def sylow2(g: GroupABC, seed: Optional[int] = None):
    return g.sylow2() if seed is None else g.sylow2(seed)


def class_elements_a3(g: GroupABC, i: int):
    if g.kind != "pgl2":
        raise ValueError("class_elements_a3 needs a PGL_2(q) group")
    return g.class_elements_a3(i)


def a3_family_mismatches(g: GroupABC) -> List[int]:
    """Indices i whose two parametrized families do not give exactly the class A3,i."""
    partition = g.conjugacy.partition
    bad = []
    for i in range(1, (g.q - 3) // 2 + 1):
        ids = class_elements_a3(g, i)
        members = partition[g.a3(i)].elements
        if len(np.unique(ids)) != len(ids) or not np.array_equal(np.sort(ids), members):
            bad.append(i)
    return bad


if __name__ == "__main__":
    import doctest

    doctest.testmod(optionflags=doctest.ELLIPSIS)
