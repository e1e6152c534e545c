# iisomorphism_tester.py
# Libraries
from abc import ABC, abstractmethod
# Personal libraries
from esn.inverse_semigroup import InverseSemigroup
from isomorphism.isg_store import InvariantKey, IsgStore
from orders.poset import ColoredPoset


class IIsomorphismTester(ABC):
    """
    IsomorphismTester decides isomorphism between inverse semigroups that share their semilattice
    of idempotents. Semigroups are first bucketed by an invariant key; within a bucket a search
    extends colour-preserving automorphisms of the semilattice to the whole semigroup.
    """

    @abstractmethod
    def lonely_idempotents(self, semigroup: InverseSemigroup) -> list[int]:
        """
        Returns, by ascending index, the idempotents with a trivial maximal subgroup and a
        singleton D-class that cover the least idempotent and are covered by none.
        """
        pass

    @abstractmethod
    def invariants(self, semigroup: InverseSemigroup) -> InvariantKey:
        pass

    @abstractmethod
    def e_coloring(self, semigroup: InverseSemigroup) -> ColoredPoset:
        """
        Colours the semilattice: a lonely idempotent by its rank among the lonely ones, any other
        idempotent by (maximal subgroup name, size of its D-class within E).
        """
        pass

    @abstractmethod
    def is_isoc(self, source: InverseSemigroup, target: InverseSemigroup) -> bool:
        """
        Raises:
            ValueError: If the semigroups differ in semilattice or invariant key.
        """
        pass

    @abstractmethod
    def is_new(self, semigroup: InverseSemigroup, key: InvariantKey, store: IsgStore) -> bool:
        """Returns True iff no semigroup stored under the key is isomorphic to the given one."""
        pass
