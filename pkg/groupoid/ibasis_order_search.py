# ibasis_order_search.py
# Libraries
from abc import ABC, abstractmethod
from typing import Iterator
# Personal libraries
from groupoid.natural_basis import BasisOrder, NaturalBasis


class IBasisOrderSearch(ABC):
    """
    BasisOrderSearch finds every partial order on a natural basis that extends the order of the
    idempotents and under which the basis closes into an inverse semigroup. Blocks are added one at
    a time; each step combines cached cross-block possibilities and filters by down-set counts.
    """

    @abstractmethod
    def block_order(self, basis: NaturalBasis) -> list[int]:
        """
        Returns the block indices sorted so that blocks reaching deeper down-levels of the
        semilattice come first. Ties are broken by block size descending, then by idempotents.
        """
        pass

    @abstractmethod
    def poset_possibilities(self, basis: NaturalBasis, upper: int, lower: int) -> list[dict[int, int]]:
        """
        Returns the ways to order the upper block above the lower block. Each possibility maps every
        element s of the upper block to the bit mask of the lower-block elements below s.
        """
        pass

    @abstractmethod
    def g_posets(self, basis: NaturalBasis) -> Iterator[BasisOrder]:
        """
        Yields each admissible partial order on the basis exactly once.

        Raises:
            ESNHypothesisError: If leaf validation is enabled and a leaf violates the hypotheses.
        """
        pass
