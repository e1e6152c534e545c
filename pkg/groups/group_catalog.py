# group_catalog.py
# Libraries
from itertools import permutations, product
from math import prod
from sympy import factorint
from sympy.combinatorics.named_groups import AbelianGroup, AlternatingGroup, CyclicGroup, DihedralGroup, SymmetricGroup
# Interfaces
from groups.igroup_catalog import IGroupCatalog
# Constants
from config.system_config import SystemConfig
# Personal libraries
from groups.group import Group, GroupMap, are_isomorphic, isomorphisms
from shapes.integer_partitions import integer_partitions
from utils.logging_setup import log_group_catalog


class GroupCatalog(IGroupCatalog):
    def __init__(self, max_order: int = SystemConfig.MAX_GROUP_ORDER):
        """
        Builds the catalog constructively: every abelian group from its invariant factors, plus
        the non-abelian groups of order at most 15, deduplicated by isomorphism testing.

        Args:
            max_order (int): Largest group order to include, at most 15.

        Raises:
            ValueError: If max_order is not in 1..15.
        """
        if not 1 <= max_order <= SystemConfig.MAX_GROUP_ORDER:
            raise ValueError(f"Catalog order must lie in 1..{SystemConfig.MAX_GROUP_ORDER}, got {max_order}")
        self.max_order = max_order
        self.__by_order: dict[int, list[Group]] = {}
        self.__by_name: dict[str, Group] = {}
        self.__automorphisms: dict[str, list[GroupMap]] = {}
        self._build()

    def _build(self) -> None:
        for order in range(1, self.max_order + 1):
            kept: list[Group] = []
            for candidate in self._candidates(order):
                if any(are_isomorphic(candidate, group) for group in kept):
                    log_group_catalog.debug(f"Drop {candidate.name}: isomorphic to a kept group of order {order}")
                    continue
                kept.append(candidate)
            kept.sort(key=lambda g: g.name)
            self.__by_order[order] = kept
            for group in kept:
                self.__by_name[group.name] = group
        log_group_catalog.info(f"Catalog up to order {self.max_order}: "
                               f"{[len(self.__by_order[o]) for o in range(1, self.max_order + 1)]}")

    def _candidates(self, order: int) -> list[Group]:
        candidates = [self._abelian(factors) for factors in abelian_invariant_factors(order)]
        if order == 4:
            candidates.append(Group.from_sympy('D2', DihedralGroup(2)))
        if order == 6:
            candidates.append(Group.from_sympy('S3', SymmetricGroup(3)))
            candidates.append(Group.from_sympy('D3', DihedralGroup(3)))
        if order in (8, 10, 12, 14):
            candidates.append(Group.from_sympy(f'D{order // 2}', DihedralGroup(order // 2)))
        if order == 8:
            candidates.append(dicyclic_group(2, name='Q8'))
        if order == 12:
            candidates.append(Group.from_sympy('A4', AlternatingGroup(4)))
            candidates.append(dicyclic_group(3, name='Dic3'))
        return candidates

    @staticmethod
    def _abelian(factors: tuple[int, ...]) -> Group:
        name = 'x'.join(f'C{k}' for k in factors)
        if factors == (1,):
            return Group.trivial()
        if len(factors) == 1:
            return Group.from_sympy(name, CyclicGroup(factors[0]))
        return Group.from_sympy(name, AbelianGroup(*factors))

    def catalog(self) -> list[Group]:
        return [group for order in sorted(self.__by_order) for group in self.__by_order[order]]

    def by_order(self, order: int) -> list[Group]:
        return list(self.__by_order.get(order, []))

    def by_name(self, name: str) -> Group:
        try:
            return self.__by_name[name]
        except KeyError:
            raise ValueError(f"Unknown group {name!r}; known groups: {sorted(self.__by_name)}") from None

    def automorphisms(self, group: Group) -> list[GroupMap]:
        if group.name not in self.__automorphisms:
            found = sorted(isomorphisms(group, group), key=lambda m: m.images)
            self.__automorphisms[group.name] = found
            log_group_catalog.debug(f"{group.name}: {len(found)} automorphisms")
        return self.__automorphisms[group.name]

    def bijections(self, source: Group, target: Group) -> list[GroupMap]:
        if source.order != target.order:
            raise ValueError(f"Cannot biject {source.name} (order {source.order}) onto "
                             f"{target.name} (order {target.order})")
        return [GroupMap(source=source, target=target, images=images)
                for images in permutations(range(source.order))]


def abelian_invariant_factors(order: int) -> list[tuple[int, ...]]:
    """
    Returns the invariant factor lists (d1, ..., dk) with d(i+1) | d(i) and product `order`,
    one per abelian group of that order.
    """
    if order == 1:
        return [(1,)]
    primes = sorted(factorint(order).items())
    choices = [list(integer_partitions(exponent)) for _, exponent in primes]
    result = []
    for combination in product(*choices):
        length = max(len(parts) for parts in combination)
        factors = tuple(
            prod(p ** (parts[i] if i < len(parts) else 0) for (p, _), parts in zip(primes, combination))
            for i in range(length)
        )
        result.append(factors)
    return result


def dicyclic_group(m: int, name: str) -> Group:
    """The dicyclic group of order 4m on pairs (k, j), k mod 2m, j mod 2."""
    elements = [(k, j) for j in range(2) for k in range(2 * m)]

    def mult(x, y):
        (k1, j1), (k2, j2) = x, y
        if j1 == 0:
            return (k1 + k2) % (2 * m), j2
        if j2 == 0:
            return (k1 - k2) % (2 * m), 1
        return (k1 - k2 + m) % (2 * m), 0

    return Group.from_func(name, elements, mult)
