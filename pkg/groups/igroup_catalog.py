# igroup_catalog.py
# Libraries
from abc import ABC, abstractmethod
# Personal libraries
from groups.group import Group, GroupMap


class IGroupCatalog(ABC):
    """
    GroupCatalog holds one representative of every isomorphism class of groups up to a
    maximal order, together with their automorphism groups.

    Methods:
        catalog():
            Returns every representative, sorted by order then by name.
        by_order(order):
            Returns the representatives of one order.
        by_name(name):
            Returns the representative carrying a canonical name.
        automorphisms(group):
            Returns all automorphisms of a catalog group.
        bijections(source, target):
            Returns all bijections between two groups of equal order.
    """

    @abstractmethod
    def catalog(self) -> list[Group]:
        """
        Returns exactly one group per isomorphism class of each order up to the catalog limit,
        ordered by group order and then by canonical name.
        """
        pass

    @abstractmethod
    def by_order(self, order: int) -> list[Group]:
        """
        Returns the catalog groups of the given order (an empty list past the limit).
        """
        pass

    @abstractmethod
    def by_name(self, name: str) -> Group:
        """
        Returns the catalog group with the given canonical name.

        Raises:
            ValueError: If no catalog group carries this name.
        """
        pass

    @abstractmethod
    def automorphisms(self, group: Group) -> list[GroupMap]:
        """
        Returns all automorphisms of the group, the identity map first. Results are cached.
        """
        pass

    @abstractmethod
    def bijections(self, source: Group, target: Group) -> list[GroupMap]:
        """
        Returns all |G|! bijections source -> target in lexicographic order of their images.

        Raises:
            ValueError: If the two groups have different orders.
        """
        pass
