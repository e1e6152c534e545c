# d_partition.py
# Libraries
from __future__ import annotations
from dataclasses import dataclass
from typing import Sequence
# Personal libraries
from groups.group import Group

# A shape is a weakly decreasing tuple of positive integers, a composition a tuple of positive integers
Shape = tuple[int, ...]
Composition = tuple[int, ...]


@dataclass(frozen=True)
class DPartition:
    """
    An ordered set partition (X_1, ..., X_k) of the elements of a semilattice, blocks sorted by
    size descending and then by least element. Each block is a sorted tuple.
    """
    blocks: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_blocks(blocks: Sequence[Sequence[int]]) -> DPartition:
        ordered = sorted((tuple(sorted(block)) for block in blocks), key=lambda block: (-len(block), block[0]))
        return DPartition(blocks=tuple(ordered))

    @property
    def shape(self) -> Shape:
        return tuple(len(block) for block in self.blocks)

    @property
    def size(self) -> int:
        return sum(len(block) for block in self.blocks)

    def block_of(self) -> list[int]:
        """block_of()[x] is the index of the block holding element x."""
        owner = [0] * self.size
        for index, block in enumerate(self.blocks):
            for x in block:
                owner[x] = index
        return owner

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class GroupAssignment:
    """One catalog group per block of a D-partition, in block order."""
    groups: tuple[Group, ...]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(group.name for group in self.groups)

    def __len__(self) -> int:
        return len(self.groups)
