# shape_planner.py
# Libraries
from collections import Counter
from itertools import product
from typing import Iterator, Optional
# Interfaces
from shapes.ishape_planner import IShapePlanner
# Personal libraries
from groups.group_catalog import GroupCatalog
from orders.poset import MeetSemilattice
from shapes.d_partition import Composition, DPartition, GroupAssignment, Shape
from shapes.integer_partitions import integer_partitions
from utils.bitset import bits, popcount
from utils.logging_setup import log_shape_planner


class ShapePlanner(IShapePlanner):
    def __init__(self, catalog: Optional[GroupCatalog] = None):
        """
        :param catalog: Groups offered by group_maps; the full catalog is built on first use if omitted.
        """
        self.__catalog = catalog

    @property
    def catalog(self) -> GroupCatalog:
        if self.__catalog is None:
            self.__catalog = GroupCatalog()
        return self.__catalog

    def partitions(self, m: int) -> list[Shape]:
        return list(integer_partitions(m))

    def admissible_compositions(self, n: int, shape: Shape) -> list[Composition]:
        squares = [part * part for part in shape]
        result: list[Composition] = []
        chosen: list[int] = []

        def search(i: int, remaining: int) -> None:
            if i == len(squares):
                if remaining == 0:
                    result.append(tuple(chosen))
                return
            # Every later block needs at least one group element
            reserve = sum(squares[i + 1:])
            for c in range(1, (remaining - reserve) // squares[i] + 1):
                chosen.append(c)
                search(i + 1, remaining - squares[i] * c)
                chosen.pop()

        search(0, n)
        return result

    def d_partitions(self, semilattice: MeetSemilattice, shape: Shape) -> list[DPartition]:
        if sum(shape) != semilattice.size:
            raise ValueError(f"Shape {shape} does not partition a semilattice of size {semilattice.size}")
        found = [DPartition.from_blocks(blocks) for blocks in self._search_blocks(semilattice, shape)]
        found.sort(key=lambda partition: partition.blocks)
        log_shape_planner.debug(f"{len(found)} D-partitions of shape {shape} on a semilattice of size {semilattice.size}")
        return found

    @staticmethod
    def _search_blocks(semilattice: MeetSemilattice, shape: Shape) -> Iterator[list[list[int]]]:
        """
        Places the elements by increasing down-set size, a linear extension, so the down-set of an
        element is fully placed when the element is. An element joins an open block only if its
        down-set meets every block as often as the down-set of the first member of that block does.
        """
        size = semilattice.size
        down = semilattice.down
        owner = [-1] * size
        blocks: list[list[int]] = []
        capacity: list[int] = []
        profiles: list[tuple[int, ...]] = []
        unused = Counter(shape)
        sequence = sorted(range(size), key=lambda x: (popcount(down[x]), x))

        def profile(x: int) -> tuple[int, ...]:
            counts = [0] * len(blocks)
            for y in bits(down[x]):
                counts[owner[y]] += 1
            return tuple(counts)

        def place(i: int) -> Iterator[list[list[int]]]:
            if i == size:
                if not +unused:
                    yield [list(block) for block in blocks]
                return
            x = sequence[i]
            spare = sum(capacity[j] - len(blocks[j]) for j in range(len(blocks)))
            if spare > size - i:
                return
            for j in range(len(blocks)):
                if len(blocks[j]) == capacity[j]:
                    continue
                owner[x] = j
                blocks[j].append(x)
                # A profile only counts the blocks that existed when it was taken
                counts = profile(x)
                reference = profiles[j]
                if counts[:len(reference)] == reference and not any(counts[len(reference):]):
                    yield from place(i + 1)
                blocks[j].pop()
                owner[x] = -1
            for target in sorted(+unused, reverse=True):
                unused[target] -= 1
                owner[x] = len(blocks)
                blocks.append([x])
                capacity.append(target)
                profiles.append(profile(x))
                yield from place(i + 1)
                profiles.pop()
                capacity.pop()
                blocks.pop()
                owner[x] = -1
                unused[target] += 1

        yield from place(0)

    def is_d_partition(self, semilattice: MeetSemilattice, partition: DPartition) -> bool:
        members = sorted(x for block in partition.blocks for x in block)
        if members != list(range(semilattice.size)):
            return False
        owner = partition.block_of()
        for block in partition.blocks:
            reference = Counter(owner[y] for y in bits(semilattice.down[block[0]]))
            for e in block[1:]:
                if Counter(owner[y] for y in bits(semilattice.down[e])) != reference:
                    return False
        return True

    def group_maps(self, partition: DPartition, composition: Composition) -> list[GroupAssignment]:
        if len(partition) != len(composition):
            raise ValueError(f"{len(partition)} blocks cannot take the {len(composition)} group orders {composition}")
        choices = [self.catalog.by_order(order) for order in composition]
        return [GroupAssignment(groups=tuple(groups)) for groups in product(*choices)]


def brute_force_d_partitions(planner: IShapePlanner, semilattice: MeetSemilattice, shape: Shape) -> list[DPartition]:
    """Filters every set partition of the semilattice by shape and count condition."""
    def set_partitions(x: int, blocks: list[list[int]]) -> Iterator[list[list[int]]]:
        if x == semilattice.size:
            yield [list(block) for block in blocks]
            return
        for block in blocks:
            block.append(x)
            yield from set_partitions(x + 1, blocks)
            block.pop()
        blocks.append([x])
        yield from set_partitions(x + 1, blocks)
        blocks.pop()

    wanted = sorted(shape, reverse=True)
    found = []
    for blocks in set_partitions(0, []):
        if sorted((len(block) for block in blocks), reverse=True) != wanted:
            continue
        partition = DPartition.from_blocks(blocks)
        if planner.is_d_partition(semilattice, partition):
            found.append(partition)
    return sorted(found, key=lambda partition: partition.blocks)
