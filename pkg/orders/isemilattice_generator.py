# isemilattice_generator.py
# Libraries
from abc import ABC, abstractmethod
from typing import Iterator
# Personal libraries
from orders.poset import MeetSemilattice


class ISemilatticeGenerator(ABC):
    """
    SemilatticeGenerator produces finite lattices and meet-semilattices up to isomorphism,
    one representative per class, as a stream.

    Every emitted structure is labelled along a linear extension: x <= y implies
    label(x) <= label(y), and the least element is 0.
    """

    @abstractmethod
    def lattices(self, size: int) -> Iterator[MeetSemilattice]:
        """
        Yields one lattice per isomorphism class of lattices with `size` elements.

        Raises:
            ValueError: If size < 1.
        """
        pass

    @abstractmethod
    def meet_semilattices(self, m: int) -> Iterator[MeetSemilattice]:
        """
        Yields one meet-semilattice per isomorphism class of order m, obtained from the lattices
        of order m + 1 by removing their greatest element.

        Raises:
            ValueError: If m < 1.
        """
        pass
