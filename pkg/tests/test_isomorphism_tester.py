import unittest
from itertools import combinations
from config.enumeration_constants import EnumerationConstants
from enumerator.inverse_semigroup_enumerator import InverseSemigroupEnumerator
from esn.esn_builder import ESNBuilder
from esn.inverse_semigroup import InverseSemigroup
from esn.semigroup_validator import anti_isomorphic_copy, validate_inverse_semigroup
from groupoid.basis_order_search import BasisOrderSearch
from groups.group_catalog import GroupCatalog
from isomorphism.isg_store import IsgStore
from isomorphism.isomorphism_tester import IsomorphismTester, brute_force_isomorphic
from orders.colored_isomorphism import ColoredIsomorphismFinder
from orders.poset import ColoredPoset
from shapes.d_partition import DPartition
from tests.builders import CATALOG, VEE, brandt, build_basis, chain

LONELY = EnumerationConstants.LONELY_COLOR_TAG
SHARED = EnumerationConstants.SHARED_COLOR_TAG


def semigroups(basis):
    builder = ESNBuilder()
    return [builder.esn(basis, order) for order in BasisOrderSearch().g_posets(basis)]


def relabel(semigroup, sigma):
    """
    The copy of the semigroup obtained by renaming idempotent e as sigma[e], sigma an automorphism
    of its semilattice, and reversing the indices of the other elements. Basis coordinates follow.
    """
    m, n = semigroup.idempotent_count, semigroup.size
    image = list(sigma) + [m + n - 1 - x for x in range(m, n)]
    table = [[0] * n for _ in range(n)]
    inv = [0] * n
    for s in range(n):
        inv[image[s]] = image[semigroup.inv[s]]
        for t in range(n):
            table[image[s]][image[t]] = image[semigroup.table[s][t]]
    partition = DPartition.from_blocks([[sigma[e] for e in block] for block in semigroup.partition.blocks])
    old_owner, new_owner = semigroup.partition.block_of(), partition.block_of()
    group_names = tuple(semigroup.group_names[old_owner[sigma.index(block[0])]] for block in partition.blocks)
    elements = [None] * n
    for x, (_, row, col, g) in enumerate(semigroup.elements):
        elements[image[x]] = (new_owner[sigma[row]], sigma[row], sigma[col], g)
    return InverseSemigroup(semilattice=semigroup.semilattice, partition=partition, group_names=group_names,
                            elements=tuple(elements), table=tuple(tuple(row) for row in table), inv=tuple(inv))


class TestInvariants(unittest.TestCase):

    def setUp(self):
        self.tester = IsomorphismTester(CATALOG)

    def test_lonely_idempotents(self):
        [vee] = semigroups(build_basis(VEE, {(0,): 'C1', (1,): 'C1', (2,): 'C1'}))
        self.assertEqual(self.tester.lonely_idempotents(vee), [1, 2])
        [b2] = semigroups(brandt())
        self.assertEqual(self.tester.lonely_idempotents(b2), [])
        [trivial_top] = semigroups(chain('C1', 'C2'))
        self.assertEqual(self.tester.lonely_idempotents(trivial_top), [1])
        for semigroup in semigroups(chain('C2', 'C1')):
            self.assertEqual(self.tester.lonely_idempotents(semigroup), [])

    def test_e_coloring(self):
        [vee] = semigroups(build_basis(VEE, {(0,): 'C1', (1,): 'C1', (2,): 'C1'}))
        colors = self.tester.e_coloring(vee).colors
        self.assertEqual(colors, ((SHARED, 'C1', 1), (LONELY, 1), (LONELY, 2)))
        [b2] = semigroups(brandt('C1', 'C2'))[:1]
        self.assertEqual(self.tester.e_coloring(b2).colors, ((SHARED, 'C2', 1), (SHARED, 'C1', 2), (SHARED, 'C1', 2)))

    def test_invariants(self):
        [b2] = semigroups(brandt())
        key = self.tester.invariants(b2)
        self.assertEqual(key.lev, (4, 1))
        self.assertEqual(key.xmap, ((0, ((1, 'C1'),)), (1, ((2, 'C1'), (2, 'C1')))))

    def test_invariants_are_isomorphism_invariant(self):
        for basis in (brandt('C1', 'C2'), build_basis(VEE, {(0,): 'C2', (1,): 'C2', (2,): 'C1'})):
            for semigroup in semigroups(basis):
                self.assertEqual(self.tester.invariants(semigroup), self.tester.invariants(anti_isomorphic_copy(semigroup)))


class TestIsomorphismTester(unittest.TestCase):

    def setUp(self):
        self.tester = IsomorphismTester(CATALOG)

    def test_agrees_with_brute_force(self):
        bases = [chain('C2', 'C2'), brandt('C1', 'C2'), build_basis(VEE, {(0,): 'C2', (1,): 'C2', (2,): 'C2'}),
                 build_basis(VEE, {(0,): 'C3', (1,): 'C1', (2,): 'C3'})]
        for basis in bases:
            for first, second in combinations(semigroups(basis), 2):
                expected = brute_force_isomorphic(first, second)
                if self.tester.invariants(first) != self.tester.invariants(second):
                    self.assertFalse(expected)
                    continue
                self.assertEqual(self.tester.is_isoc(first, second), expected, basis.assignment.names)

    def test_anti_isomorphic_copy_is_isomorphic(self):
        for semigroup in semigroups(brandt('C1', 'C2')) + semigroups(build_basis(VEE, {(0,): 'C2', (1,): 'C2', (2,): 'C2'})):
            self.assertTrue(self.tester.is_isoc(semigroup, anti_isomorphic_copy(semigroup)))

    def test_mixed_orders_are_identified(self):
        store = IsgStore()
        for semigroup in semigroups(build_basis(VEE, {(0,): 'C2', (1,): 'C2', (2,): 'C2'})):
            key = self.tester.invariants(semigroup)
            tested = bool(store.bucket(key))
            if self.tester.is_new(semigroup, key, store):
                store.add(semigroup, key, tested=tested)
        self.assertEqual((store.generated, len(store)), (4, 3))
        self.assertGreaterEqual(store.iso_tests, 1)
        self.assertLessEqual(store.accepted_immediately, 3)

    def test_requires_a_shared_semilattice(self):
        [b2] = semigroups(brandt())
        [top] = semigroups(chain('C1', 'C2'))
        with self.assertRaises(ValueError):
            self.tester.is_isoc(b2, top)

    def test_requires_equal_keys(self):
        first, second = semigroups(chain('C2', 'C2'))
        if self.tester.invariants(first) != self.tester.invariants(second):
            with self.assertRaises(ValueError):
                self.tester.is_isoc(first, second)
        else:
            self.assertFalse(self.tester.is_isoc(first, second))

    def test_brute_force_limit(self):
        semigroup = semigroups(brandt('C2', 'C1'))[0]
        with self.assertRaises(ValueError):
            brute_force_isomorphic(semigroup, semigroup)


class TestRelabelledCopies(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.tester = IsomorphismTester(GroupCatalog(max_order=5))
        cls.semigroups = []
        enumerator = InverseSemigroupEnumerator()
        for n in range(1, 6):
            enumerator.enumerate(n, sink=cls.semigroups.extend)

    def test_relabelled_copies_keep_their_key_and_are_found_isomorphic(self):
        finder = ColoredIsomorphismFinder()
        pairs = 0
        for semigroup in self.semigroups:
            plain = ColoredPoset(semigroup.semilattice.poset, (0,) * semigroup.idempotent_count)
            for sigma in finder.colored_isomorphisms(plain, plain):
                copy = relabel(semigroup, sigma)
                self.assertTrue(validate_inverse_semigroup(copy.table))
                self.assertEqual(copy.d_restriction, DPartition.from_blocks(
                    [[sigma[e] for e in block] for block in semigroup.d_restriction.blocks]))
                self.assertEqual(self.tester.invariants(copy), self.tester.invariants(semigroup))
                self.assertTrue(self.tester.is_isoc(semigroup, copy), semigroup.table)
                pairs += 1
        self.assertGreater(pairs, len(self.semigroups))

    def test_swapping_lonely_idempotents(self):
        [vee] = [s for s in self.semigroups if s.size == 3 and len(self.tester.lonely_idempotents(s)) == 2]
        copy = relabel(vee, (0, 2, 1))
        self.assertEqual(self.tester.lonely_idempotents(copy), [1, 2])
        self.assertTrue(self.tester.is_isoc(vee, copy))
        self.assertTrue(self.tester.is_isoc(copy, vee))


if __name__ == '__main__':
    unittest.main()
