# basis_order_search.py
# Libraries
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Optional, Sequence
# Interfaces
from groupoid.ibasis_order_search import IBasisOrderSearch
# Constants
from config.system_config import SystemConfig
# Personal libraries
from esn.esn_builder import ESNHypothesisError
from groupoid.natural_basis import BasisOrder, NaturalBasis
from groupoid.possibility_cache import PossibilityCache, shared_cache
from groups.group import Group
from utils.bitset import bits, mask_of, popcount
from utils.logging_setup import log_basis_order_search


@dataclass(frozen=True)
class SearchNode:
    """
    A node of the block-by-block search.

    Attributes:
        depth (int): Number of blocks already ordered, in block order.
        below (tuple): Down-set masks; set for every idempotent and every element of an ordered block.
    """
    depth: int
    below: tuple[int, ...]


class _Plan:
    """Per-basis data shared by all nodes of one search."""

    def __init__(self, search: 'BasisOrderSearch', basis: NaturalBasis):
        semilattice = basis.semilattice
        self.order = search.block_order(basis)
        position = {block: i for i, block in enumerate(self.order)}
        owner = basis.owner
        self.covered: dict[int, list[int]] = {block: [] for block in self.order}
        for lower, upper in semilattice.covers():
            b, j = owner[upper], owner[lower]
            if b == j:
                raise ESNHypothesisError(f"Idempotents {lower} < {upper} share a D-class")
            if position[j] > position[b]:
                raise ESNHypothesisError(f"Block {j} is covered by block {b} but comes after it")
            if j not in self.covered[b]:
                self.covered[b].append(j)
        for block in self.covered:
            self.covered[block].sort(key=lambda j: position[j])
        self.members = {
            block: [x for x in bits(basis.block_masks[block]) if not basis.is_idempotent(x)]
            for block in self.order
        }
        self.__search = search
        self.__basis = basis
        self.__possibilities: dict[tuple[int, int], list[dict[int, int]]] = {}

    def possibilities(self, upper: int, lower: int) -> list[dict[int, int]]:
        key = (upper, lower)
        if key not in self.__possibilities:
            self.__possibilities[key] = self.__search.poset_possibilities(self.__basis, upper, lower)
        return self.__possibilities[key]


class BasisOrderSearch(IBasisOrderSearch):
    def __init__(self, cache: Optional[PossibilityCache] = None, validate_leaves: bool = SystemConfig.VALIDATE_LEAVES):
        self.cache = cache if cache is not None else shared_cache
        self.validate_leaves = validate_leaves

    def block_order(self, basis: NaturalBasis) -> list[int]:
        depth_of = {}
        for depth, level in enumerate(basis.semilattice.down_levels(), start=1):
            for x in level:
                depth_of[x] = depth
        blocks = basis.partition.blocks
        return sorted(range(len(blocks)),
                      key=lambda i: (-max(depth_of[x] for x in blocks[i]), -len(blocks[i]), blocks[i]))

    def poset_possibilities(self, basis: NaturalBasis, upper: int, lower: int) -> list[dict[int, int]]:
        upper_rows = basis.partition.blocks[upper]
        lower_rows = basis.partition.blocks[lower]
        upper_group, lower_group = basis.group(upper), basis.group(lower)
        leq = basis.semilattice.leq
        relation = tuple(tuple(leq(c, a) for c in lower_rows) for a in upper_rows)
        canonical, upper_perm, lower_perm = _canonical_relation(relation)
        key = (upper_group.name, lower_group.name, len(upper_rows), len(lower_rows), canonical)
        found = self.cache.get(key, lambda: _local_possibilities(upper_group, lower_group, canonical))

        # Local coordinates of the canonical relation back to basis indices
        upper_global = [
            basis.locate(upper_rows[a], upper_rows[b], g)
            for a in range(len(upper_rows)) for b in range(len(upper_rows)) for g in range(upper_group.order)
        ]
        lower_back = [0] * len(lower_rows)
        for c, image in enumerate(lower_perm):
            lower_back[image] = c
        canonical_lower_global = [
            basis.locate(lower_rows[lower_back[c]], lower_rows[lower_back[d]], h)
            for c in range(len(lower_rows)) for d in range(len(lower_rows)) for h in range(lower_group.order)
        ]
        ru, nu = len(upper_rows), upper_group.order
        result = []
        for option in found:
            mapped = {}
            for a in range(ru):
                for b in range(ru):
                    for g in range(nu):
                        local_mask = option[(upper_perm[a] * ru + upper_perm[b]) * nu + g]
                        mapped[upper_global[(a * ru + b) * nu + g]] = mask_of(canonical_lower_global[t] for t in bits(local_mask))
            result.append(mapped)
        return result

    def root(self, basis: NaturalBasis, plan: Optional[_Plan] = None) -> SearchNode:
        plan = plan if plan else _Plan(self, basis)
        below = [0] * basis.size
        for e in range(basis.idempotent_count):
            below[e] = basis.semilattice.down[e]
        for s in plan.members[plan.order[0]]:
            below[s] = 1 << s
        return SearchNode(depth=1, below=tuple(below))

    def children(self, basis: NaturalBasis, node: SearchNode, plan: Optional[_Plan] = None) -> Iterator[SearchNode]:
        """
        Extends the order to the next block: one cached possibility per covered block, joined
        with the down-sets already present, kept when the down-set counts agree across the block.
        """
        plan = plan if plan else _Plan(self, basis)
        if node.depth >= len(plan.order):
            return
        block = plan.order[node.depth]
        earlier = plan.order[:node.depth]
        choices = [plan.possibilities(block, lower) for lower in plan.covered[block]]
        for combination in product(*choices):
            below = list(node.below)
            for s in plan.members[block]:
                mask = 1 << s
                for option in combination:
                    for t in bits(option[s]):
                        mask |= below[t]
                below[s] = mask
            if self.passes_cardinality_test(basis, below, block, earlier):
                yield SearchNode(depth=node.depth + 1, below=tuple(below))

    def passes_cardinality_test(self, basis: NaturalBasis, below: Sequence[int], block: int, earlier: Sequence[int]) -> bool:
        reference = basis.partition.blocks[block][0]
        for h in earlier:
            h_mask = basis.block_masks[h]
            expected = popcount(below[reference] & h_mask)
            for s in bits(basis.block_masks[block]):
                if popcount(below[s] & h_mask) != expected:
                    return False
        return True

    def g_posets(self, basis: NaturalBasis) -> Iterator[BasisOrder]:
        plan = _Plan(self, basis)
        leaves = 0
        stack = [self.root(basis, plan)]
        while stack:
            node = stack.pop()
            if node.depth == len(plan.order):
                if self.validate_leaves:
                    problems = hypothesis_violations(basis, node.below)
                    if problems:
                        raise ESNHypothesisError(f"Search produced an invalid order: {problems[0]}")
                leaves += 1
                yield BasisOrder(basis=basis, below=node.below)
                continue
            # Reversed so that children are visited in generation order
            stack.extend(reversed(list(self.children(basis, node, plan))))
        log_basis_order_search.debug(f"Basis of size {basis.size} over groups {basis.assignment.names}: {leaves} orders")


def _canonical_relation(relation: tuple[tuple[bool, ...], ...]):
    """
    Returns the lexicographically least relabelling of a cross-block relation under row
    permutations of both blocks, with the permutations reaching it (old position -> new).
    """
    ru, rl = len(relation), len(relation[0]) if relation else 0
    best = None
    for upper_perm in permutations(range(ru)):
        for lower_perm in permutations(range(rl)):
            rows = [[False] * rl for _ in range(ru)]
            for a in range(ru):
                for c in range(rl):
                    rows[upper_perm[a]][lower_perm[c]] = relation[a][c]
            candidate = tuple(tuple(row) for row in rows)
            if best is None or candidate < best[0]:
                best = (candidate, upper_perm, lower_perm)
    return best


def _local_possibilities(upper_group: Group, lower_group: Group, relation: tuple[tuple[bool, ...], ...]) -> list[tuple[int, ...]]:
    """
    Orders of an upper block above a lower block in local coordinates: g_{a,b} of the upper block
    is (a * ru + b) * |Gu| + g and h_{c,d} of the lower block is (c * rl + d) * |Gl| + h.

    Each result lists, per upper element, the mask of lower elements below it. Below g_{a,b} lies
    exactly one element per lower idempotent under b (its domain) and one per lower idempotent
    under a (its range); inverses and products must be respected.
    """
    ru, rl = len(relation), len(relation[0])
    nu, nl = upper_group.order, lower_group.order

    def upper_index(a: int, b: int, g: int) -> int:
        return (a * ru + b) * nu + g

    def lower_index(c: int, d: int, h: int) -> int:
        return (c * rl + d) * nl + h

    upper = [(a, b, g) for a in range(ru) for b in range(ru) for g in range(nu)]
    lower = [(c, d, h) for c in range(rl) for d in range(rl) for h in range(nl)]
    upper_inv = [upper_index(b, a, upper_group.inv[g]) for a, b, g in upper]
    lower_inv = [lower_index(d, c, lower_group.inv[h]) for c, d, h in lower]

    options: list[list[int]] = []
    for a, b, g in upper:
        ranges = [c for c in range(rl) if relation[a][c]]
        domains = [c for c in range(rl) if relation[b][c]]
        if len(ranges) != len(domains):
            return []
        if a == b and g == 0:
            options.append([mask_of(lower_index(c, c, 0) for c in domains)])
            continue
        choice = []
        for images in permutations(ranges):
            for elements in product(range(nl), repeat=len(domains)):
                choice.append(mask_of(lower_index(images[i], domains[i], elements[i]) for i in range(len(domains))))
        options.append(choice)

    def invert(mask: int) -> int:
        return mask_of(lower_inv[t] for t in bits(mask))

    def lower_product(s: int, t: int) -> Optional[int]:
        c, d, h = lower[s]
        c2, d2, h2 = lower[t]
        if d != c2:
            return None
        return lower_index(c, d2, lower_group.mul[h][h2])

    # (y, z, yz) for every defined product of upper elements, indexed by each participant
    triples = []
    for y, (a, b, g) in enumerate(upper):
        for c in range(ru):
            for h in range(nu):
                z = upper_index(b, c, h)
                triples.append((y, z, upper_index(a, c, upper_group.mul[g][h])))
    involved: list[list[tuple[int, int, int]]] = [[] for _ in upper]
    for triple in triples:
        for x in set(triple):
            involved[x].append(triple)

    assigned: list[Optional[int]] = [None] * len(upper)
    results: list[tuple[int, ...]] = []

    def respects_products(touched: set[int]) -> bool:
        checked = set()
        for x in touched:
            for y, z, yz in involved[x]:
                if (y, z) in checked or assigned[y] is None or assigned[z] is None or assigned[yz] is None:
                    continue
                checked.add((y, z))
                target = assigned[yz]
                for s in bits(assigned[y]):
                    for t in bits(assigned[z]):
                        st = lower_product(s, t)
                        if st is not None and not (target >> st) & 1:
                            return False
        return True

    def search(k: int) -> None:
        while k < len(upper) and assigned[k] is not None:
            k += 1
        if k == len(upper):
            results.append(tuple(assigned))
            return
        partner = upper_inv[k]
        for mask in options[k]:
            image = invert(mask)
            if partner == k and image != mask:
                continue
            assigned[k] = mask
            assigned[partner] = image
            if respects_products({k, partner}):
                search(k + 1)
            assigned[k] = None
            assigned[partner] = None

    search(0)
    return results


def hypothesis_violations(basis: NaturalBasis, below: Sequence[int]) -> list[str]:
    """
    Lists the ways an order on the basis fails to be a partial order extending the idempotent
    order under which inverses, products, restrictions and corestrictions behave. Empty when valid.
    """
    size = basis.size
    semilattice = basis.semilattice
    problems = []

    def leq(s: int, t: int) -> bool:
        return bool((below[t] >> s) & 1)

    for s in range(size):
        if not leq(s, s):
            problems.append(f"{s} is not below itself")
        for t in bits(below[s]):
            if t != s and leq(s, t):
                problems.append(f"{s} and {t} are below each other")
            if below[t] & ~below[s]:
                problems.append(f"order is not transitive through {t} <= {s}")
    for e in range(basis.idempotent_count):
        for f in range(basis.idempotent_count):
            if leq(f, e) != semilattice.leq(f, e):
                problems.append(f"idempotents {f}, {e} are not ordered as in the semilattice")
    for s in range(size):
        for t in bits(below[s]):
            if not leq(basis.inv[t], basis.inv[s]):
                problems.append(f"{t} <= {s} but their inverses are not ordered")
    for y in range(size):
        for z in range(size):
            yz = basis.compose(y, z)
            if yz is None:
                continue
            for s in bits(below[y]):
                for t in bits(below[z]):
                    st = basis.compose(s, t)
                    if st is not None and not leq(st, yz):
                        problems.append(f"{s}*{t} is not below {y}*{z}")
    for s in range(size):
        for e in bits(semilattice.down[basis.dom(s)]):
            if sum(1 for t in bits(below[s]) if basis.dom(t) == e) != 1:
                problems.append(f"{s} has no unique restriction to domain {e}")
        for e in bits(semilattice.down[basis.ran(s)]):
            if sum(1 for t in bits(below[s]) if basis.ran(t) == e) != 1:
                problems.append(f"{s} has no unique corestriction to range {e}")
    return problems


def brute_force_orders(basis: NaturalBasis, max_free_pairs: int = 20) -> set[tuple[int, ...]]:
    """
    Every admissible order on a small basis, by filtering all relations extending the idempotent
    order. A strict relation t < s is only tried when dom(t) < dom(s) and ran(t) < ran(s).

    Raises:
        ValueError: If more than max_free_pairs relations would have to be tried.
    """
    semilattice = basis.semilattice
    free: list[tuple[int, int]] = []
    for s in range(basis.idempotent_count, basis.size):
        for t in range(basis.size):
            if t == s:
                continue
            if basis.dom(t) != basis.dom(s) and semilattice.leq(basis.dom(t), basis.dom(s)) \
                    and basis.ran(t) != basis.ran(s) and semilattice.leq(basis.ran(t), basis.ran(s)):
                free.append((t, s))
    if len(free) > max_free_pairs:
        raise ValueError(f"Brute force over {len(free)} free relations exceeds the limit {max_free_pairs}")
    base = [semilattice.down[x] if basis.is_idempotent(x) else 1 << x for x in range(basis.size)]
    found = set()
    for chosen in product((False, True), repeat=len(free)):
        below = list(base)
        for (t, s), take in zip(free, chosen):
            if take:
                below[s] |= 1 << t
        if not hypothesis_violations(basis, below):
            found.add(tuple(below))
    return found
