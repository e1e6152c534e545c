# group.py
# Libraries
from __future__ import annotations
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterator, Optional, Sequence
from sympy.combinatorics import PermutationGroup


@dataclass(frozen=True)
class Group:
    """
    A finite group given by its multiplication table. Element 0 is the identity.

    Attributes:
        name (str): Canonical tag of the isomorphism class, e.g. "C4", "C2xC2", "S3".
        mul (tuple): mul[a][b] is the index of a*b.
        inv (tuple): inv[a] is the index of the inverse of a.
    """
    name: str
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...] = field(compare=False)

    def __post_init__(self):
        n = len(self.mul)
        if n == 0:
            raise ValueError(f"Group {self.name} has no elements")
        for a in range(n):
            if len(self.mul[a]) != n:
                raise ValueError(f"Group {self.name}: row {a} has {len(self.mul[a])} entries, expected {n}")
            if self.mul[0][a] != a or self.mul[a][0] != a:
                raise ValueError(f"Group {self.name}: element 0 is not the identity")
            if self.mul[a][self.inv[a]] != 0 or self.mul[self.inv[a]][a] != 0:
                raise ValueError(f"Group {self.name}: inv[{a}] is not an inverse of {a}")

    @property
    def order(self) -> int:
        return len(self.mul)

    @property
    def identity(self) -> int:
        return 0

    def is_abelian(self) -> bool:
        return all(self.mul[a][b] == self.mul[b][a] for a in range(self.order) for b in range(a))

    def is_associative(self) -> bool:
        mul = self.mul
        rng = range(self.order)
        return all(mul[mul[a][b]][c] == mul[a][mul[b][c]] for a in rng for b in rng for c in rng)

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = self.mul[y][x]
            k += 1
        return k

    def closure(self, generators: Sequence[int]) -> set[int]:
        """Returns the subgroup generated by the given elements."""
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for g in generators:
                y = self.mul[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    @cached_property
    def generating_set(self) -> tuple[int, ...]:
        """A generating set chosen greedily, trying elements of larger order first."""
        candidates = sorted(range(1, self.order), key=lambda x: (-self.element_order(x), x))
        generators: list[int] = []
        span = {0}
        for x in candidates:
            if len(span) == self.order:
                break
            if x not in span:
                generators.append(x)
                span = self.closure(generators)
        return tuple(generators)

    @staticmethod
    def trivial() -> Group:
        return Group(name='C1', mul=((0,),), inv=(0,))

    @staticmethod
    def from_func(name: str, elements: Sequence[Hashable], mult: Callable) -> Group:
        """Builds the table of a group given by its elements (identity first) and a product rule."""
        index = {element: i for i, element in enumerate(elements)}
        if len(index) != len(elements):
            raise ValueError(f"Group {name}: repeated elements")
        table = tuple(tuple(index[mult(a, b)] for b in elements) for a in elements)
        return Group(name=name, mul=table, inv=_inverses(table))

    @staticmethod
    def from_sympy(name: str, pgroup: PermutationGroup) -> Group:
        """Builds the table of a permutation group; elements are sorted by their array form."""
        degree = pgroup.degree
        elements = sorted(pgroup.elements, key=lambda p: _padded(p.array_form, degree))
        if not elements[0].is_Identity:
            raise RuntimeError(f"Group {name}: identity is not the first element")
        index = {element: i for i, element in enumerate(elements)}
        table = tuple(tuple(index[a * b] for b in elements) for a in elements)
        return Group(name=name, mul=table, inv=_inverses(table))


@dataclass(frozen=True)
class GroupMap:
    """
    A bijection between the elements of two groups of equal order.

    Attributes:
        source (Group): Domain of the map.
        target (Group): Codomain of the map.
        images (tuple): images[x] is the image of element x.
        automorphism (bool): Set when the map is known to be an automorphism.
    """
    source: Group = field(compare=False, repr=False)
    target: Group = field(compare=False, repr=False)
    images: tuple[int, ...]
    automorphism: bool = field(default=False, compare=False)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def compose(self, other: GroupMap) -> GroupMap:
        """Returns self after other."""
        images = tuple(self.images[y] for y in other.images)
        return GroupMap(source=other.source, target=self.target, images=images,
                        automorphism=self.automorphism and other.automorphism)

    def inverse(self) -> GroupMap:
        images = [0] * len(self.images)
        for x, y in enumerate(self.images):
            images[y] = x
        return GroupMap(source=self.target, target=self.source, images=tuple(images), automorphism=self.automorphism)

    def is_bijection(self) -> bool:
        return sorted(self.images) == list(range(self.target.order))

    def is_homomorphism(self) -> bool:
        g, h, im = self.source.mul, self.target.mul, self.images
        rng = range(self.source.order)
        return all(im[g[a][b]] == h[im[a]][im[b]] for a in rng for b in rng)


def isomorphisms(source: Group, target: Group, first_only: bool = False) -> Iterator[GroupMap]:
    """
    Yields the isomorphisms source -> target by backtracking over the images of the
    generating set of source, extending each choice along the Cayley graph.
    """
    if source.order != target.order:
        return
    generators = source.generating_set
    orders = [source.element_order(g) for g in generators]
    by_order: dict[int, list[int]] = {}
    for y in range(target.order):
        by_order.setdefault(target.element_order(y), []).append(y)
    candidates = [by_order.get(k, []) for k in orders]
    chosen: list[int] = []

    def backtrack(depth: int) -> Iterator[GroupMap]:
        if depth == len(generators):
            images = _extend(source, target, generators, chosen)
            if images is not None:
                yield GroupMap(source=source, target=target, images=images, automorphism=source is target)
            return
        for y in candidates[depth]:
            if y in chosen:
                continue
            chosen.append(y)
            yield from backtrack(depth + 1)
            chosen.pop()

    for found in backtrack(0):
        yield found
        if first_only:
            return


def are_isomorphic(source: Group, target: Group) -> bool:
    return next(isomorphisms(source, target, first_only=True), None) is not None


def _extend(source: Group, target: Group, generators: Sequence[int], images: Sequence[int]) -> Optional[tuple[int, ...]]:
    n = source.order
    mapped = [-1] * n
    mapped[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g, image in zip(generators, images):
            y = source.mul[x][g]
            value = target.mul[mapped[x]][image]
            if mapped[y] == -1:
                mapped[y] = value
                queue.append(y)
            elif mapped[y] != value:
                return None
    if -1 in mapped or len(set(mapped)) != n:
        return None
    for a in range(n):
        row, image_row = source.mul[a], target.mul[mapped[a]]
        for b in range(n):
            if mapped[row[b]] != image_row[mapped[b]]:
                return None
    return tuple(mapped)


def _inverses(table: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return tuple(row.index(0) for row in table)


def _padded(array_form: list[int], degree: int) -> list[int]:
    return list(array_form) + list(range(len(array_form), degree))
