# iesn_builder.py
# Libraries
from abc import ABC, abstractmethod
# Personal libraries
from esn.inverse_semigroup import InverseSemigroup
from groupoid.natural_basis import BasisOrder, NaturalBasis


class IESNBuilder(ABC):
    """
    ESNBuilder turns an ordered natural basis into the inverse semigroup it determines. The product
    of two elements is the groupoid product of their restrictions to the meet of the domain of
    the first and the range of the second.
    """

    @abstractmethod
    def esn(self, basis: NaturalBasis, order: BasisOrder) -> InverseSemigroup:
        """
        Builds the full Cayley table.

        Raises:
            ESNHypothesisError: If a restriction needed by some product is missing or not unique.
        """
        pass

    @abstractmethod
    def multiply(self, order: BasisOrder, s: int, t: int) -> int:
        """
        Returns the index of the product of s and t.

        Raises:
            ESNHypothesisError: If the order does not provide the restrictions the product needs.
        """
        pass
