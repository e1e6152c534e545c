# inverse_semigroup.py
# Libraries
from __future__ import annotations
from dataclasses import dataclass, field
from functools import cached_property
# Constants
from config.file_constants import FileConstants
# Personal libraries
from groupoid.natural_basis import BasisElement
from orders.poset import MeetSemilattice, Poset
from shapes.d_partition import DPartition
from utils.bitset import mask_of


@dataclass(frozen=True)
class InverseSemigroup:
    """
    A finite inverse semigroup given by its Cayley table. Indices 0..|E|-1 are the idempotents,
    named after the semilattice elements they stand for.

    Attributes:
        semilattice (MeetSemilattice): The semilattice E of idempotents.
        partition (DPartition): The D-partition the semigroup was built from.
        group_names (tuple): Catalog name of the maximal subgroups in each block of the partition.
        elements (tuple): Basis coordinates (block, row, column, group element) of each index.
        table (tuple): table[s][t] is the index of s*t.
        inv (tuple): inv[s] is the index of the inverse of s.
    """
    semilattice: MeetSemilattice = field(repr=False)
    partition: DPartition
    group_names: tuple[str, ...]
    elements: tuple[BasisElement, ...] = field(repr=False)
    table: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...] = field(compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.table)

    @property
    def idempotent_count(self) -> int:
        return self.semilattice.size

    def multiply(self, s: int, t: int) -> int:
        return self.table[s][t]

    def dom(self, s: int) -> int:
        return self.table[self.inv[s]][s]

    def ran(self, s: int) -> int:
        return self.table[s][self.inv[s]]

    @cached_property
    def natural_order(self) -> Poset:
        """s <= t iff s = t s^-1 s, read off the table."""
        table, inv = self.table, self.inv
        down = [mask_of(s for s in range(self.size) if table[table[t][inv[s]]][s] == s) for t in range(self.size)]
        return Poset.from_down(down)

    @cached_property
    def d_restriction(self) -> DPartition:
        """Green's D restricted to the idempotents: e D f iff some x has dom(x) = e and ran(x) = f."""
        parent = list(range(self.idempotent_count))

        def find(e: int) -> int:
            while parent[e] != e:
                parent[e] = parent[parent[e]]
                e = parent[e]
            return e

        for x in range(self.size):
            a, b = find(self.dom(x)), find(self.ran(x))
            if a != b:
                parent[max(a, b)] = min(a, b)
        classes: dict[int, list[int]] = {}
        for e in range(self.idempotent_count):
            classes.setdefault(find(e), []).append(e)
        return DPartition.from_blocks(classes.values())

    def maximal_subgroup(self, e: int) -> list[int]:
        return [s for s in range(self.size) if self.dom(s) == e and self.ran(s) == e]

    def group_name(self, e: int) -> str:
        """Catalog name of the maximal subgroup at idempotent e."""
        return self._idempotent_groups[e]

    @cached_property
    def _idempotent_groups(self) -> tuple[str, ...]:
        return tuple(self.group_names[block] for block in self.partition.block_of())

    def is_commutative(self) -> bool:
        table = self.table
        return all(table[s][t] == table[t][s] for s in range(self.size) for t in range(s))

    def is_monoid(self) -> bool:
        return self.semilattice.has_maximum()

    def to_cayley_text(self) -> str:
        header = FileConstants.CAYLEY_HEADER.format(size=self.size, idempotents=self.idempotent_count)
        rows = [' '.join(str(x) for x in row) for row in self.table]
        return '\n'.join([header] + rows) + '\n'


def parse_cayley_text(text: str) -> tuple[list[list[int]], int]:
    """
    Reads a Cayley-table file body back into (table, idempotent count).

    Raises:
        ValueError: If the header or a row is malformed.
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("Empty Cayley table")
    try:
        fields = dict(part.split('=') for part in lines[0].split())
        size, idempotents = int(fields['n']), int(fields['e'])
    except (KeyError, ValueError):
        raise ValueError(f"Malformed Cayley header {lines[0]!r}") from None
    rows = [[int(x) for x in line.split()] for line in lines[1:]]
    if len(rows) != size or any(len(row) != size or not all(0 <= x < size for x in row) for row in rows):
        raise ValueError(f"Cayley table body does not match its header n={size}")
    return rows, idempotents
