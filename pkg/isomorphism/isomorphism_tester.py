# isomorphism_tester.py
# Libraries
from itertools import permutations
from typing import Optional
# Interfaces
from isomorphism.iisomorphism_tester import IIsomorphismTester
# Constants
from config.enumeration_constants import EnumerationConstants
from config.system_config import SystemConfig
# Personal libraries
from esn.inverse_semigroup import InverseSemigroup
from groups.group_catalog import GroupCatalog
from isomorphism.isg_store import InvariantKey, IsgStore
from orders.colored_isomorphism import ColoredIsomorphismFinder
from orders.poset import ColoredPoset
from utils.logging_setup import log_isomorphism_tester


class IsomorphismTester(IIsomorphismTester):
    def __init__(self, catalog: Optional[GroupCatalog] = None, finder: Optional[ColoredIsomorphismFinder] = None):
        self.catalog = catalog if catalog else GroupCatalog()
        self.finder = finder if finder else ColoredIsomorphismFinder()

    def lonely_idempotents(self, semigroup: InverseSemigroup) -> list[int]:
        semilattice = semigroup.semilattice
        bottom = semilattice.minimum()
        singletons = {block[0] for block in semigroup.d_restriction.blocks if len(block) == 1}
        lonely = []
        for e in range(semigroup.idempotent_count):
            if e == bottom or e not in singletons:
                continue
            covers_bottom = semilattice.down[e] == (1 << e) | (1 << bottom)
            maximal = semilattice.up[e] == 1 << e
            if covers_bottom and maximal and len(semigroup.maximal_subgroup(e)) == 1:
                lonely.append(e)
        return lonely

    def invariants(self, semigroup: InverseSemigroup) -> InvariantKey:
        lev = tuple(len(level) for level in semigroup.natural_order.down_levels())
        class_size = self._class_sizes(semigroup)
        xmap = tuple(
            (level[0], tuple(sorted((class_size[e], semigroup.group_name(e)) for e in level)))
            for level in semigroup.semilattice.up_down_levels()
        )
        return InvariantKey(lev=lev, xmap=xmap)

    def e_coloring(self, semigroup: InverseSemigroup) -> ColoredPoset:
        class_size = self._class_sizes(semigroup)
        rank = {e: i for i, e in enumerate(self.lonely_idempotents(semigroup), start=1)}
        colors = tuple(
            (EnumerationConstants.LONELY_COLOR_TAG, rank[e]) if e in rank
            else (EnumerationConstants.SHARED_COLOR_TAG, semigroup.group_name(e), class_size[e])
            for e in range(semigroup.idempotent_count)
        )
        return ColoredPoset(poset=semigroup.semilattice.poset, colors=colors)

    @staticmethod
    def _class_sizes(semigroup: InverseSemigroup) -> list[int]:
        sizes = [0] * semigroup.idempotent_count
        for block in semigroup.d_restriction.blocks:
            for e in block:
                sizes[e] = len(block)
        return sizes

    def is_isoc(self, source: InverseSemigroup, target: InverseSemigroup) -> bool:
        if source.semilattice != target.semilattice:
            raise ValueError("Isomorphism test needs semigroups over the same semilattice of idempotents")
        if self.invariants(source) != self.invariants(target):
            raise ValueError("Isomorphism test needs semigroups with equal invariant keys")
        source_classes = source.d_restriction.blocks
        target_classes = {frozenset(block) for block in target.d_restriction.blocks}
        locate = {(row, col, g): x for x, (_, row, col, g) in enumerate(target.elements)}
        for p in self.finder.colored_isomorphisms(self.e_coloring(source), self.e_coloring(target)):
            if {frozenset(p[e] for e in block) for block in source_classes} != target_classes:
                continue
            if self._extends(source, target, p, locate):
                return True
        return False

    def _extends(self, source: InverseSemigroup, target: InverseSemigroup, p: tuple[int, ...], locate: dict) -> bool:
        """
        Searches cell maps g_{j,k} -> phi(g)_{p(j),p(k)}, automorphisms on diagonal cells and
        bijections elsewhere, for one that makes the whole map a homomorphism.
        """
        n = source.size
        source_locate = {(row, col, g): x for x, (_, row, col, g) in enumerate(source.elements)}
        cells = []
        for block in source.d_restriction.blocks:
            group = self.catalog.by_name(source.group_name(block[0]))
            automorphisms = self.catalog.automorphisms(group)
            # Off-diagonal cells only exist in blocks of two or more idempotents, where |G| <= 3
            bijections = self.catalog.bijections(group, group) if len(block) > 1 else []
            for j in block:
                for k in block:
                    members = [source_locate[(j, k, g)] for g in range(group.order)]
                    cells.append((members, p[j], p[k], automorphisms if j == k else bijections))

        image = [-1] * n
        for e in range(source.idempotent_count):
            image[e] = p[e]
        products_to: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for y in range(n):
            for z in range(n):
                products_to[source.table[y][z]].append((y, z))
        s_table, t_table = source.table, target.table

        def consistent(new: list[int]) -> bool:
            for x in new:
                ix = image[x]
                for y in range(n):
                    iy = image[y]
                    if iy == -1:
                        continue
                    xy, yx = s_table[x][y], s_table[y][x]
                    if image[xy] != -1 and image[xy] != t_table[ix][iy]:
                        return False
                    if image[yx] != -1 and image[yx] != t_table[iy][ix]:
                        return False
                for y, z in products_to[x]:
                    if image[y] != -1 and image[z] != -1 and t_table[image[y]][image[z]] != ix:
                        return False
            return True

        def extend(index: int) -> bool:
            if index == len(cells):
                return True
            members, pj, pk, maps = cells[index]
            for cell_map in maps:
                new = []
                fits = True
                for g, s in enumerate(members):
                    mapped = locate[(pj, pk, cell_map(g))]
                    if image[s] == -1:
                        image[s] = mapped
                        new.append(s)
                    elif image[s] != mapped:
                        fits = False
                        break
                if fits and consistent(new) and extend(index + 1):
                    return True
                for s in new:
                    image[s] = -1
            return False

        return extend(0)

    def is_new(self, semigroup: InverseSemigroup, key: InvariantKey, store: IsgStore) -> bool:
        store.generated += 1
        bucket = store.bucket(key)
        if not bucket:
            store.accepted_immediately += 1
            return True
        for entry in bucket:
            store.iso_tests += 1
            entry.tested = True
            if self.is_isoc(semigroup, entry.semigroup):
                log_isomorphism_tester.debug(f"Rejected a semigroup of order {semigroup.size}: isomorphic to a stored one")
                return False
        return True


def brute_force_isomorphic(source: InverseSemigroup, target: InverseSemigroup) -> bool:
    """
    Exhaustive isomorphism test over all bijections, for semigroups of at most
    SystemConfig.BRUTE_FORCE_LIMIT elements.

    Raises:
        ValueError: If the semigroups are larger than the limit.
    """
    n = source.size
    if max(n, target.size) > SystemConfig.BRUTE_FORCE_LIMIT:
        raise ValueError(f"Brute-force isomorphism is limited to {SystemConfig.BRUTE_FORCE_LIMIT} elements, "
                         f"got {n} and {target.size}")
    if n != target.size:
        return False
    s_table, t_table = source.table, target.table
    rng = range(n)
    for images in permutations(rng):
        if all(images[s_table[a][b]] == t_table[images[a]][images[b]] for a in rng for b in rng):
            return True
    return False
