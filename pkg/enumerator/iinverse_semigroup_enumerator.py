# iinverse_semigroup_enumerator.py
# Libraries
from abc import ABC, abstractmethod
from typing import Callable, Optional
# Personal libraries
from enumerator.count_ledger import CountLedger
from esn.inverse_semigroup import InverseSemigroup
from orders.poset import MeetSemilattice
from shapes.d_partition import DPartition, GroupAssignment


class IInverseSemigroupEnumerator(ABC):
    """
    Interface for the InverseSemigroupEnumerator class, which lists the inverse semigroups of a
    given order up to isomorphism, one task per semilattice of idempotents.
    """

    @abstractmethod
    def enumerate(self, n: int, sink: Optional[Callable[[list[InverseSemigroup]], None]] = None,
                  monoids_only: bool = False) -> CountLedger:
        """
        Enumerates the inverse semigroups of order n. Every (semilattice, shape) store is handed to
        the sink once complete, in semilattice generation order and then shape order.

        :param n: Order of the semigroups.
        :param sink: Receives the representatives of each flushed store.
        :param monoids_only: Only visit lattices, giving the inverse monoids.
        :return: The per-(idempotents, shape) counts.
        """
        pass

    @abstractmethod
    def enumerate_counts_only(self, n: int, monoids_only: bool = False) -> CountLedger:
        """
        Counts the inverse semigroups of order n without keeping them. Semilattices of order n are
        counted directly instead of being built into semigroups.
        """
        pass

    @abstractmethod
    def enumerate_fixed(self, semilattice: MeetSemilattice, partition: DPartition,
                        assignment: GroupAssignment) -> list[InverseSemigroup]:
        """
        Returns one representative per isomorphism class of inverse semigroups with the given
        semilattice, D-restriction and maximal subgroups.

        :raises ValueError: If the partition is not a D-partition of the semilattice.
        """
        pass
