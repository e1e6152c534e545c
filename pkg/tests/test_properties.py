import os
import unittest
from collections import defaultdict
from itertools import combinations
from config.enumeration_constants import EnumerationConstants
from enumerator.inverse_semigroup_enumerator import InverseSemigroupEnumerator
from esn.esn_builder import ESNBuilder
from esn.semigroup_validator import validate_inverse_semigroup
from groupoid.basis_order_search import BasisOrderSearch, brute_force_orders
from groupoid.natural_basis import e_groupoid
from groups.group_catalog import GroupCatalog
from isomorphism.isomorphism_tester import IsomorphismTester, brute_force_isomorphic
from orders.semilattice_generator import SemilatticeGenerator
from shapes.shape_planner import ShapePlanner
from utils.bitset import bits

SLOW = os.environ.get(EnumerationConstants.SLOW_TESTS_ENV) == '1'
CATALOG = GroupCatalog(max_order=7)


def raw_bases(n):
    """Every natural basis of order n, before any isomorphism rejection."""
    planner = ShapePlanner(CATALOG)
    generator = SemilatticeGenerator()
    for m in range(1, n + 1):
        for semilattice in generator.meet_semilattices(m):
            for shape in planner.partitions(m):
                for composition in planner.admissible_compositions(n, shape):
                    for partition in planner.d_partitions(semilattice, shape):
                        for assignment in planner.group_maps(partition, composition):
                            yield e_groupoid(semilattice, partition, assignment)


class TestEmittedSemigroups(unittest.TestCase):

    def check_properties(self, n):
        semigroups = []
        InverseSemigroupEnumerator().enumerate(n, sink=semigroups.extend)
        for semigroup in semigroups:
            self.assertTrue(validate_inverse_semigroup(semigroup.table))
            blocks = semigroup.partition.blocks
            expected = sum(len(block) ** 2 * CATALOG.by_name(name).order
                           for block, name in zip(blocks, semigroup.group_names))
            self.assertEqual(semigroup.size, expected)
            self.assertEqual(semigroup.d_restriction, semigroup.partition)
            owner = semigroup.d_restriction.block_of()
            # D-related elements are never strictly comparable
            for t in range(semigroup.size):
                for s in bits(semigroup.natural_order.down[t]):
                    if s != t:
                        self.assertNotEqual(owner[semigroup.dom(s)], owner[semigroup.dom(t)])
        return semigroups

    def check_pairwise_non_isomorphic(self, semigroups):
        by_idempotents = defaultdict(list)
        for semigroup in semigroups:
            by_idempotents[semigroup.idempotent_count].append(semigroup)
        for group in by_idempotents.values():
            for first, second in combinations(group, 2):
                self.assertFalse(brute_force_isomorphic(first, second))

    def test_orders_up_to_5(self):
        for n in range(1, 6):
            self.check_pairwise_non_isomorphic(self.check_properties(n))

    def test_small_orders_need_no_isomorphism_test(self):
        for n in range(1, 4):
            statistics = InverseSemigroupEnumerator().enumerate(n).statistics
            self.assertEqual(statistics.accepted_immediately, statistics.generated, n)
            self.assertEqual(statistics.iso_tests, 0)

    @unittest.skipUnless(SLOW, 'slow tier')
    def test_orders_6_and_7(self):
        self.check_pairwise_non_isomorphic(self.check_properties(6))
        self.check_properties(7)


class TestRawStream(unittest.TestCase):

    def check_raw_stream(self, n):
        search = BasisOrderSearch(validate_leaves=True)
        builder = ESNBuilder()
        tester = IsomorphismTester(CATALOG)
        buckets = defaultdict(list)
        for basis in raw_bases(n):
            orders = list(search.g_posets(basis))
            if basis.size <= 6:
                self.assertEqual({order.below for order in orders}, brute_force_orders(basis))
            for order in orders:
                semigroup = builder.esn(basis, order)
                self.assertEqual(semigroup.natural_order.down, order.below)
                buckets[(basis.semilattice.down, tester.invariants(semigroup))].append(semigroup)
        for bucket in buckets.values():
            for first, second in combinations(bucket, 2):
                self.assertEqual(tester.is_isoc(first, second), brute_force_isomorphic(first, second))

    def test_orders_up_to_5(self):
        for n in range(1, 6):
            self.check_raw_stream(n)

    @unittest.skipUnless(SLOW, 'slow tier')
    def test_order_6(self):
        self.check_raw_stream(6)


if __name__ == '__main__':
    unittest.main()
