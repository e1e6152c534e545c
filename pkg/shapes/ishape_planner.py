# ishape_planner.py
# Libraries
from abc import ABC, abstractmethod
# Personal libraries
from orders.poset import MeetSemilattice
from shapes.d_partition import Composition, DPartition, GroupAssignment, Shape


class IShapePlanner(ABC):
    """
    ShapePlanner prepares the combinatorial data an inverse semigroup is assembled from: the shape of
    its D-classes, the orders of their maximal subgroups, the partition of the idempotents into
    D-classes and the choice of groups.
    """

    @abstractmethod
    def partitions(self, m: int) -> list[Shape]:
        """
        Returns all partitions of m, in reverse lexicographic order.

        Raises:
            ValueError: If m < 1.
        """
        pass

    @abstractmethod
    def admissible_compositions(self, n: int, shape: Shape) -> list[Composition]:
        """
        Returns every composition C with len(C) == len(shape) and sum(shape[i]**2 * C[i]) == n,
        in ascending lexicographic order.
        """
        pass

    @abstractmethod
    def d_partitions(self, semilattice: MeetSemilattice, shape: Shape) -> list[DPartition]:
        """
        Returns every set partition of the semilattice with block sizes given by the shape that
        satisfies the D-partition count condition, once per set partition.

        Raises:
            ValueError: If the shape does not sum to the size of the semilattice.
        """
        pass

    @abstractmethod
    def is_d_partition(self, semilattice: MeetSemilattice, partition: DPartition) -> bool:
        """
        Checks that the blocks partition the semilattice and that e1 ~ e2, f <= e1 imply
        |{h <= e1 : h ~ f}| == |{h <= e2 : h ~ f}|.
        """
        pass

    @abstractmethod
    def group_maps(self, partition: DPartition, composition: Composition) -> list[GroupAssignment]:
        """
        Returns every assignment of a catalog group of order composition[i] to block i.

        Raises:
            ValueError: If the partition and the composition differ in length.
        """
        pass
