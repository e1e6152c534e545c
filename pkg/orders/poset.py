# poset.py
# Libraries
from __future__ import annotations
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence
# Personal libraries
from utils.bitset import bits, mask_of


@dataclass(frozen=True)
class Poset:
    """
    A finite partial order on 0..size-1 stored as bit rows.

    Attributes:
        down (tuple): Bit y of down[x] is set iff y <= x (x itself included).
        up (tuple): Bit y of up[x] is set iff x <= y (x itself included).
    """
    down: tuple[int, ...]
    up: tuple[int, ...] = field(compare=False, repr=False)

    @staticmethod
    def from_down(down: Sequence[int]) -> Poset:
        """
        Builds a poset from its down-set rows.

        Raises:
            ValueError: If the rows are not reflexive, antisymmetric and transitive.
        """
        down = tuple(down)
        size = len(down)
        full = (1 << size) - 1
        for x, row in enumerate(down):
            if not (row >> x) & 1:
                raise ValueError(f"Relation is not reflexive at {x}")
            if row & ~full:
                raise ValueError(f"Row {x} refers to elements outside 0..{size - 1}")
            for y in bits(row):
                if y != x and (down[y] >> x) & 1:
                    raise ValueError(f"Relation is not antisymmetric on {x}, {y}")
                if down[y] & ~row:
                    raise ValueError(f"Relation is not transitive through {y} <= {x}")
        up = [0] * size
        for x, row in enumerate(down):
            for y in bits(row):
                up[y] |= 1 << x
        return Poset(down=down, up=tuple(up))

    @staticmethod
    def from_covers(size: int, covers: Iterable[tuple[int, int]]) -> Poset:
        """
        Builds a poset from cover pairs (lower, upper) by transitive closure.

        Raises:
            ValueError: If a pair leaves 0..size-1 or the pairs contain a cycle.
        """
        if size < 1:
            raise ValueError(f"A poset needs at least one element, got size {size}")
        down = [1 << x for x in range(size)]
        for lower, upper in covers:
            if not (0 <= lower < size and 0 <= upper < size) or lower == upper:
                raise ValueError(f"Invalid cover {lower}<{upper} for size {size}")
            down[upper] |= 1 << lower
        changed = True
        while changed:
            changed = False
            for x in range(size):
                row = down[x]
                for y in bits(row):
                    row |= down[y]
                if row != down[x]:
                    down[x] = row
                    changed = True
        return Poset.from_down(down)

    @property
    def size(self) -> int:
        return len(self.down)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def leq(self, x: int, y: int) -> bool:
        return bool((self.down[y] >> x) & 1)

    def covers(self) -> list[tuple[int, int]]:
        """Returns the transitive reduction as sorted (lower, upper) pairs."""
        pairs = []
        for upper in range(self.size):
            for lower in self.maximal(self.down[upper] & ~(1 << upper)):
                pairs.append((lower, upper))
        return sorted(pairs)

    def maximal(self, mask: int) -> list[int]:
        """Maximal elements of the subset given by mask."""
        return [x for x in bits(mask) if self.up[x] & mask == 1 << x]

    def minimal(self, mask: int) -> list[int]:
        """Minimal elements of the subset given by mask."""
        return [x for x in bits(mask) if self.down[x] & mask == 1 << x]

    def down_levels(self) -> list[tuple[int, ...]]:
        """Peels the maximal elements repeatedly; the first level holds the maximal elements."""
        return self._peel(self.maximal)

    def up_levels(self) -> list[tuple[int, ...]]:
        """Peels the minimal elements repeatedly; the first level holds the minimal elements."""
        return self._peel(self.minimal)

    def _peel(self, extremal) -> list[tuple[int, ...]]:
        remaining = self.full_mask
        levels = []
        while remaining:
            level = extremal(remaining)
            levels.append(tuple(level))
            remaining &= ~mask_of(level)
        return levels

    def relabel(self, new_label: Sequence[int]) -> Poset:
        """Returns the poset with element x renamed new_label[x]."""
        down = [0] * self.size
        for x, row in enumerate(self.down):
            down[new_label[x]] = mask_of(new_label[y] for y in bits(row))
        return Poset.from_down(down)


@dataclass(frozen=True)
class MeetSemilattice:
    """
    A finite meet-semilattice: a poset in which any two elements have a greatest lower bound.

    Attributes:
        poset (Poset): The underlying order.
        meet (tuple): meet[x][y] is the greatest lower bound of x and y.
    """
    poset: Poset
    meet: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    @staticmethod
    def from_poset(poset: Poset) -> MeetSemilattice:
        """
        Raises:
            ValueError: If some pair of elements has no greatest lower bound.
        """
        by_down = {row: x for x, row in enumerate(poset.down)}
        size = poset.size
        meet = [[0] * size for _ in range(size)]
        for x in range(size):
            for y in range(x, size):
                common = poset.down[x] & poset.down[y]
                z = by_down.get(common)
                if z is None:
                    raise ValueError(f"Elements {x} and {y} have no meet")
                meet[x][y] = meet[y][x] = z
        return MeetSemilattice(poset=poset, meet=tuple(tuple(row) for row in meet))

    @staticmethod
    def from_down(down: Sequence[int]) -> MeetSemilattice:
        return MeetSemilattice.from_poset(Poset.from_down(down))

    @staticmethod
    def from_covers(size: int, covers: Iterable[tuple[int, int]]) -> MeetSemilattice:
        return MeetSemilattice.from_poset(Poset.from_covers(size, covers))

    @property
    def size(self) -> int:
        return self.poset.size

    @property
    def down(self) -> tuple[int, ...]:
        return self.poset.down

    @property
    def up(self) -> tuple[int, ...]:
        return self.poset.up

    def leq(self, x: int, y: int) -> bool:
        return self.poset.leq(x, y)

    def minimum(self) -> int:
        return next(x for x in range(self.size) if self.poset.down[x] == 1 << x)

    def has_maximum(self) -> bool:
        return any(row == self.poset.full_mask for row in self.poset.down)

    def covers(self) -> list[tuple[int, int]]:
        return self.poset.covers()

    def down_levels(self) -> list[tuple[int, ...]]:
        return self.poset.down_levels()

    def up_levels(self) -> list[tuple[int, ...]]:
        return self.poset.up_levels()

    def up_down_levels(self) -> list[tuple[int, ...]]:
        """
        The common refinement of the up-levels and the down-levels: their nonempty pairwise
        intersections, ordered by least element.
        """
        downs = [mask_of(level) for level in self.down_levels()]
        ups = [mask_of(level) for level in self.up_levels()]
        cells = [tuple(bits(d & u)) for d in downs for u in ups if d & u]
        return sorted(cells)

    def relabel(self, new_label: Sequence[int]) -> MeetSemilattice:
        return MeetSemilattice.from_poset(self.poset.relabel(new_label))


@dataclass(frozen=True)
class ColoredPoset:
    """
    A poset whose elements carry colour tokens. Tokens of one poset must be mutually comparable.
    """
    poset: Poset
    colors: tuple[Hashable, ...]

    def __post_init__(self):
        if len(self.colors) != self.poset.size:
            raise ValueError(f"{len(self.colors)} colours given for {self.poset.size} elements")

    @property
    def size(self) -> int:
        return self.poset.size
