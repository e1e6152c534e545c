# natural_basis.py
# Libraries
from __future__ import annotations
from dataclasses import dataclass, field
from typing import Optional
# Personal libraries
from groups.group import Group
from orders.poset import MeetSemilattice
from shapes.d_partition import DPartition, GroupAssignment
from utils.bitset import mask_of

# A basis element: (block, row, column, group element); row and column are semilattice elements
BasisElement = tuple[int, int, int, int]


@dataclass(frozen=True)
class NaturalBasis:
    """
    The natural basis of a direct sum of matrix algebras over group algebras, one block per
    D-partition block. Element g_{a,b} of block i has range a and domain b, both members of X_i.

    Idempotent ()_{e,e} takes index e, so the first |E| indices are the semilattice itself. The
    remaining elements follow ordered by (block, row, column, group element).

    Attributes:
        semilattice (MeetSemilattice): The semilattice E of idempotents.
        partition (DPartition): The blocks X_i.
        assignment (GroupAssignment): The group G_i of each block.
        elements (tuple): elements[x] is the tuple (block, row, column, group element) of index x.
    """
    semilattice: MeetSemilattice
    partition: DPartition
    assignment: GroupAssignment
    elements: tuple[BasisElement, ...] = field(repr=False)
    index: dict = field(compare=False, repr=False)
    inv: tuple[int, ...] = field(compare=False, repr=False)
    block_masks: tuple[int, ...] = field(compare=False, repr=False)
    owner: tuple[int, ...] = field(compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def idempotent_count(self) -> int:
        return self.semilattice.size

    @property
    def block_count(self) -> int:
        return len(self.partition.blocks)

    def group(self, block: int) -> Group:
        return self.assignment.groups[block]

    def is_idempotent(self, x: int) -> bool:
        return x < self.semilattice.size

    def block(self, x: int) -> int:
        return self.elements[x][0]

    def ran(self, x: int) -> int:
        return self.elements[x][1]

    def dom(self, x: int) -> int:
        return self.elements[x][2]

    def compose(self, x: int, y: int) -> Optional[int]:
        """Groupoid product: defined only when dom(x) == ran(y)."""
        block, row, col, g = self.elements[x]
        _, row_y, col_y, h = self.elements[y]
        if col != row_y:
            return None
        return self.index[(block, row, col_y, self.assignment.groups[block].mul[g][h])]

    def locate(self, row: int, col: int, g: int) -> int:
        """Index of g_{row,col}; the block follows from the row."""
        return self.index[(self.owner[row], row, col, g)]


def e_groupoid(semilattice: MeetSemilattice, partition: DPartition, assignment: GroupAssignment) -> NaturalBasis:
    """
    Builds the natural basis over (E, P, f).

    Raises:
        ValueError: If P does not cover E or a group list of the wrong length is given.
    """
    if partition.size != semilattice.size or sorted(x for b in partition.blocks for x in b) != list(range(semilattice.size)):
        raise ValueError(f"Blocks {partition.blocks} do not partition a semilattice of size {semilattice.size}")
    if len(assignment) != len(partition):
        raise ValueError(f"{len(assignment)} groups given for {len(partition)} blocks")
    owner = partition.block_of()
    elements: list[BasisElement] = [(owner[e], e, e, 0) for e in range(semilattice.size)]
    for block, members in enumerate(partition.blocks):
        for row in members:
            for col in members:
                for g in range(assignment.groups[block].order):
                    if row != col or g != 0:
                        elements.append((block, row, col, g))
    index = {element: x for x, element in enumerate(elements)}
    inv = tuple(index[(b, col, row, assignment.groups[b].inv[g])] for b, row, col, g in elements)
    block_masks = tuple(
        mask_of(x for x, element in enumerate(elements) if element[0] == block)
        for block in range(len(partition.blocks))
    )
    return NaturalBasis(semilattice=semilattice, partition=partition, assignment=assignment,
                        elements=tuple(elements), index=index, inv=inv, block_masks=block_masks,
                        owner=tuple(owner))


@dataclass(frozen=True)
class BasisOrder:
    """
    A partial order on a natural basis.

    Attributes:
        basis (NaturalBasis): The ordered basis.
        below (tuple): Bit t of below[s] is set iff t <= s.
    """
    basis: NaturalBasis = field(compare=False, repr=False)
    below: tuple[int, ...]

    def leq(self, s: int, t: int) -> bool:
        return bool((self.below[t] >> s) & 1)
