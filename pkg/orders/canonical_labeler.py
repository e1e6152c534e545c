# canonical_labeler.py
# Libraries
from __future__ import annotations
from dataclasses import dataclass
from typing import Hashable, Optional, Sequence
# Personal libraries
from orders.poset import ColoredPoset
from utils.bitset import bits, popcount


@dataclass(frozen=True)
class CanonicalForm:
    """
    Attributes:
        encoding (tuple): Relabelled down rows followed by the colours in label order. Two coloured
            posets are isomorphic iff their encodings are equal.
        labeling (tuple): labeling[x] is the canonical position of element x.
    """
    encoding: tuple
    labeling: tuple[int, ...]


class _Leaf:
    __slots__ = ('encoding', 'labeling', 'vertex_at', 'path')

    def __init__(self, encoding, labeling, path):
        self.encoding = encoding
        self.labeling = labeling
        self.path = path
        self.vertex_at = [0] * len(labeling)
        for v, position in enumerate(labeling):
            self.vertex_at[position] = v


class CanonicalLabeler:
    """
    Canonical labelling of coloured posets by individualisation and refinement.

    Colour refinement splits elements by (colour, colours strictly below, colours strictly above)
    until stable. The search individualises the elements of the first non-singleton cell in turn,
    and the canonical form is the least leaf encoding. Automorphisms discovered at equal leaves
    prune sibling subtrees by orbits.
    """

    def refined_colors(self, down: Sequence[int], up: Sequence[int], colors: Sequence[Hashable]) -> list[int]:
        """Returns the stable colour ranks of the elements, an isomorphism-invariant colouring."""
        below, above = self._neighbourhoods(down, up)
        return self._refine(self._initial_ranks(down, up, colors), below, above)

    def canonical_form(self, down: Sequence[int], up: Sequence[int], colors: Optional[Sequence[Hashable]] = None) -> CanonicalForm:
        if colors is None:
            colors = [0] * len(down)
        search = _Search(self, tuple(down), tuple(up), tuple(colors))
        return search.run()

    def colored_form(self, colored: ColoredPoset) -> CanonicalForm:
        return self.canonical_form(colored.poset.down, colored.poset.up, colored.colors)

    @staticmethod
    def _neighbourhoods(down, up):
        below = [tuple(y for y in bits(row) if y != x) for x, row in enumerate(down)]
        above = [tuple(y for y in bits(row) if y != x) for x, row in enumerate(up)]
        return below, above

    @staticmethod
    def _initial_ranks(down, up, colors) -> list[int]:
        signatures = [(colors[x], popcount(down[x]), popcount(up[x])) for x in range(len(down))]
        return _rank(signatures)

    @staticmethod
    def _refine(ranks: list[int], below, above) -> list[int]:
        count = len(set(ranks))
        while True:
            signatures = [
                (ranks[x], tuple(sorted(ranks[y] for y in below[x])), tuple(sorted(ranks[y] for y in above[x])))
                for x in range(len(ranks))
            ]
            new_ranks = _rank(signatures)
            new_count = max(new_ranks) + 1 if new_ranks else 0
            if new_count == count:
                return new_ranks
            ranks, count = new_ranks, new_count

    @staticmethod
    def _individualize(ranks: list[int], x: int) -> list[int]:
        return _rank([(rank, 0 if v == x else 1) for v, rank in enumerate(ranks)])


class _Search:
    def __init__(self, labeler: CanonicalLabeler, down, up, colors):
        self.labeler = labeler
        self.down = down
        self.up = up
        self.colors = colors
        self.size = len(down)
        self.below, self.above = labeler._neighbourhoods(down, up)
        self.first: Optional[_Leaf] = None
        self.best: Optional[_Leaf] = None
        self.automorphisms: list[tuple[int, ...]] = []

    def run(self) -> CanonicalForm:
        if self.size == 0:
            return CanonicalForm(encoding=((), ()), labeling=())
        ranks = self.labeler._initial_ranks(self.down, self.up, self.colors)
        ranks = self.labeler._refine(ranks, self.below, self.above)
        self._search(ranks, [])
        return CanonicalForm(encoding=self.best.encoding, labeling=tuple(self.best.labeling))

    def _search(self, ranks: list[int], path: list[int]) -> Optional[int]:
        cell = self._target_cell(ranks)
        if cell is None:
            return self._leaf(ranks, path)
        depth = len(path)
        explored: list[int] = []
        for x in cell:
            if explored and self._equivalent_to_explored(x, explored, path):
                continue
            explored.append(x)
            child = self.labeler._refine(self.labeler._individualize(ranks, x), self.below, self.above)
            result = self._search(child, path + [x])
            if result is not None and result < depth:
                return result
        return None

    @staticmethod
    def _target_cell(ranks: list[int]) -> Optional[list[int]]:
        cells: dict[int, list[int]] = {}
        for v, rank in enumerate(ranks):
            cells.setdefault(rank, []).append(v)
        for rank in sorted(cells):
            if len(cells[rank]) > 1:
                return cells[rank]
        return None

    def _leaf(self, ranks: list[int], path: list[int]) -> Optional[int]:
        labeling = ranks
        vertex_at = [0] * self.size
        for v, position in enumerate(labeling):
            vertex_at[position] = v
        rows = tuple(sum(1 << labeling[y] for y in bits(self.down[v])) for v in vertex_at)
        encoding = (rows, tuple(self.colors[v] for v in vertex_at))
        leaf = _Leaf(encoding, list(labeling), list(path))
        if self.first is None:
            self.first = self.best = leaf
            return None
        for stored in (self.first, self.best):
            if encoding == stored.encoding:
                return self._record_automorphism(leaf, stored)
        if encoding < self.best.encoding:
            self.best = leaf
        return None

    def _record_automorphism(self, leaf: _Leaf, stored: _Leaf) -> Optional[int]:
        gamma = tuple(stored.vertex_at[leaf.labeling[v]] for v in range(self.size))
        if any(gamma[v] != v for v in range(self.size)):
            self.automorphisms.append(gamma)
        d = 0
        while d < len(leaf.path) and d < len(stored.path) and leaf.path[d] == stored.path[d]:
            d += 1
        if d < len(leaf.path) and d < len(stored.path):
            if all(gamma[v] == v for v in leaf.path[:d]) and gamma[leaf.path[d]] == stored.path[d]:
                return d
        return None

    def _equivalent_to_explored(self, x: int, explored: list[int], path: list[int]) -> bool:
        parent = list(range(self.size))

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for gamma in self.automorphisms:
            if all(gamma[v] == v for v in path):
                for v in range(self.size):
                    a, b = find(v), find(gamma[v])
                    if a != b:
                        parent[a] = b
        root = find(x)
        return any(find(y) == root for y in explored)


def _rank(signatures: list) -> list[int]:
    index = {signature: i for i, signature in enumerate(sorted(set(signatures)))}
    return [index[signature] for signature in signatures]
