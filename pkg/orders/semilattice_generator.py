# semilattice_generator.py
# Libraries
from typing import Iterator, Optional
# Interfaces
from orders.isemilattice_generator import ISemilatticeGenerator
# Personal libraries
from orders.canonical_labeler import CanonicalForm, CanonicalLabeler
from orders.poset import MeetSemilattice, Poset
from utils.bitset import bits
from utils.logging_setup import log_semilattice_generator


class SemilatticeGenerator(ISemilatticeGenerator):
    """
    Isomorph-free generation of finite lattices by canonical augmentation.

    Removing an atom from a lattice with at least three elements leaves a lattice, so every
    lattice of size N + 1 is a lattice of size N plus a new atom a whose strict up-set F is a
    nonempty up-set of the non-bottom elements such that F together with the bottom is closed
    under meets. A child is kept when its new atom lies in the canonical orbit of atoms; siblings
    are deduplicated by the canonical form of the child with the new atom marked.
    """

    def __init__(self, labeler: Optional[CanonicalLabeler] = None):
        self.labeler = labeler if labeler else CanonicalLabeler()

    def lattices(self, size: int) -> Iterator[MeetSemilattice]:
        if size < 1:
            raise ValueError(f"A lattice has at least one element, got size {size}")
        if size == 1:
            yield MeetSemilattice.from_down((1,))
            return
        count = 0
        for down in self._walk((0b01, 0b11), size):
            count += 1
            yield MeetSemilattice.from_down(down)
        log_semilattice_generator.info(f"Generated {count} lattices of size {size}")

    def meet_semilattices(self, m: int) -> Iterator[MeetSemilattice]:
        if m < 1:
            raise ValueError(f"A meet-semilattice has at least one element, got order {m}")
        for lattice in self.lattices(m + 1):
            # The top carries the last label and belongs to no other down row
            yield MeetSemilattice.from_down(lattice.down[:-1])

    def _walk(self, down: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
        if len(down) == size:
            yield down
            return
        for child in self._children(down):
            yield from self._walk(child, size)

    def _children(self, down: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        parent = MeetSemilattice.from_down(down)
        seen: set = set()
        for up_set in self._atom_up_sets(parent):
            child = tuple(row | (1 << len(down)) if (up_set >> x) & 1 else row for x, row in enumerate(down))
            child = child + (1 | (1 << len(down)),)
            form = self._canonical_child_form(child)
            if form is None or form.encoding in seen:
                continue
            seen.add(form.encoding)
            yield self._normalize(child, form)

    def _atom_up_sets(self, parent: MeetSemilattice) -> Iterator[int]:
        """
        Yields the masks F of nonempty up-sets of the non-bottom elements for which F plus the
        bottom is closed under meets. Elements are decided from the top label downwards, so all
        strict upper bounds of an element are decided before it.
        """
        size = parent.size
        top = size - 1
        strict_up = [row & ~(1 << x) for x, row in enumerate(parent.up)]
        meet = parent.meet

        def closed(mask: int) -> bool:
            allowed = mask | 1
            members = list(bits(mask))
            for i, x in enumerate(members):
                row = meet[x]
                for y in members[i + 1:]:
                    if not (allowed >> row[y]) & 1:
                        return False
            return True

        def extend(x: int, mask: int) -> Iterator[int]:
            if x == 0:
                if closed(mask):
                    yield mask
                return
            yield from extend(x - 1, mask)
            if strict_up[x] & ~mask == 0:
                yield from extend(x - 1, mask | (1 << x))

        yield from extend(top - 1, 1 << top)

    def _canonical_child_form(self, down: tuple[int, ...]) -> Optional[CanonicalForm]:
        """Returns the marked canonical form when the newest atom is in the canonical orbit of atoms."""
        poset = Poset.from_down(down)
        new = len(down) - 1
        atoms = [x for x in range(1, len(down)) if down[x] == 1 | (1 << x)]
        ranks = self.labeler.refined_colors(poset.down, poset.up, [0] * len(down))
        best = max(ranks[a] for a in atoms)
        if ranks[new] != best:
            return None
        form = self._marked_form(poset, new)
        for atom in atoms:
            if atom != new and ranks[atom] == best:
                if self._marked_form(poset, atom).encoding < form.encoding:
                    return None
        return form

    def _marked_form(self, poset: Poset, atom: int) -> CanonicalForm:
        colors = [1 if x == atom else 0 for x in range(poset.size)]
        return self.labeler.canonical_form(poset.down, poset.up, colors)

    @staticmethod
    def _normalize(down: tuple[int, ...], form: CanonicalForm) -> tuple[int, ...]:
        """Relabels along a linear extension: by up-level, then by canonical position."""
        poset = Poset.from_down(down)
        level_of = {}
        for index, level in enumerate(poset.up_levels()):
            for x in level:
                level_of[x] = index
        order = sorted(range(len(down)), key=lambda x: (level_of[x], form.labeling[x]))
        new_label = [0] * len(down)
        for label, x in enumerate(order):
            new_label[x] = label
        return poset.relabel(new_label).down
