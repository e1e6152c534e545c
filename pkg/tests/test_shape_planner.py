import unittest
from orders.poset import MeetSemilattice
from orders.semilattice_generator import SemilatticeGenerator
from shapes.d_partition import DPartition
from shapes.integer_partitions import integer_partitions
from shapes.shape_planner import ShapePlanner, brute_force_d_partitions

VEE = MeetSemilattice.from_covers(3, [(0, 1), (0, 2)])
CHAIN = MeetSemilattice.from_covers(3, [(0, 1), (1, 2)])


class TestIntegerPartitions(unittest.TestCase):

    def test_order(self):
        self.assertEqual(list(integer_partitions(4)), [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])
        self.assertEqual(list(integer_partitions(1)), [(1,)])

    def test_counts(self):
        self.assertEqual([sum(1 for _ in integer_partitions(n)) for n in range(1, 11)],
                         [1, 2, 3, 5, 7, 11, 15, 22, 30, 42])

    def test_invalid(self):
        with self.assertRaises(ValueError):
            list(integer_partitions(0))


class TestShapePlanner(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.planner = ShapePlanner()

    def test_admissible_compositions(self):
        self.assertEqual(self.planner.admissible_compositions(10, (2, 1)), [(1, 6), (2, 2)])
        self.assertEqual(self.planner.admissible_compositions(5, (2, 1)), [(1, 1)])
        self.assertEqual(self.planner.admissible_compositions(3, (2, 1)), [])
        self.assertEqual(self.planner.admissible_compositions(4, (1, 1)), [(1, 3), (2, 2), (3, 1)])

    def test_d_partitions_small_semilattices(self):
        self.assertEqual(self.planner.d_partitions(VEE, (2, 1)), [DPartition(blocks=((1, 2), (0,)))])
        self.assertEqual(self.planner.d_partitions(CHAIN, (2, 1)), [])
        self.assertEqual(self.planner.d_partitions(CHAIN, (1, 1, 1)),
                         [DPartition(blocks=((0,), (1,), (2,)))])

    def test_d_partitions_ignore_labelling(self):
        relabelled = MeetSemilattice.from_covers(3, [(2, 0), (2, 1)])
        self.assertEqual(self.planner.d_partitions(relabelled, (2, 1)), [DPartition(blocks=((0, 1), (2,)))])

    def test_d_partitions_match_brute_force(self):
        generator = SemilatticeGenerator()
        for m in range(1, 6):
            for semilattice in generator.meet_semilattices(m):
                for shape in self.planner.partitions(m):
                    self.assertEqual(self.planner.d_partitions(semilattice, shape),
                                     brute_force_d_partitions(self.planner, semilattice, shape),
                                     (semilattice.down, shape))

    def test_d_partitions_shape_mismatch(self):
        with self.assertRaises(ValueError):
            self.planner.d_partitions(VEE, (2, 2))

    def test_is_d_partition(self):
        self.assertTrue(self.planner.is_d_partition(VEE, DPartition.from_blocks([(2, 1), (0,)])))
        self.assertFalse(self.planner.is_d_partition(CHAIN, DPartition.from_blocks([(1, 2), (0,)])))
        self.assertFalse(self.planner.is_d_partition(VEE, DPartition.from_blocks([(1, 2)])))

    def test_group_maps(self):
        partition = DPartition.from_blocks([(0,), (1, 2)])
        assignments = self.planner.group_maps(partition, (1, 4))
        self.assertEqual([a.names for a in assignments], [('C1', 'C2xC2'), ('C1', 'C4')])
        with self.assertRaises(ValueError):
            self.planner.group_maps(partition, (1,))

    def test_partition_ordering(self):
        partition = DPartition.from_blocks([(3,), (0,), (2, 1)])
        self.assertEqual(partition.blocks, ((1, 2), (0,), (3,)))
        self.assertEqual(partition.shape, (2, 1, 1))
        self.assertEqual(partition.block_of(), [1, 0, 0, 2])


if __name__ == '__main__':
    unittest.main()
