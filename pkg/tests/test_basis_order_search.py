import unittest
from esn.esn_builder import ESNHypothesisError
from groupoid.basis_order_search import BasisOrderSearch, brute_force_orders, hypothesis_violations
from groupoid.possibility_cache import PossibilityCache
from tests.builders import CHAIN_2, VEE, brandt, build_basis, chain


class TestNaturalBasis(unittest.TestCase):

    def test_brandt_basis(self):
        basis = brandt()
        self.assertEqual(basis.size, 5)
        self.assertEqual(basis.idempotent_count, 3)
        a12 = basis.locate(1, 2, 0)
        a21 = basis.locate(2, 1, 0)
        self.assertEqual((basis.ran(a12), basis.dom(a12)), (1, 2))
        self.assertEqual(basis.inv[a12], a21)
        self.assertEqual(basis.compose(a12, a21), 1)
        self.assertIsNone(basis.compose(a12, a12))

    def test_idempotents_come_first(self):
        basis = brandt('C2', 'C3')
        self.assertEqual(basis.size, 4 * 2 + 3)
        for e in range(3):
            self.assertTrue(basis.is_idempotent(e))
            self.assertEqual((basis.ran(e), basis.dom(e)), (e, e))

    def test_invalid_inputs(self):
        from groupoid.natural_basis import e_groupoid
        basis = brandt()
        with self.assertRaises(ValueError):
            e_groupoid(CHAIN_2, basis.partition, basis.assignment)


class TestBasisOrderSearch(unittest.TestCase):

    def setUp(self):
        self.search = BasisOrderSearch(cache=PossibilityCache(), validate_leaves=True)

    def count(self, basis) -> int:
        return sum(1 for _ in self.search.g_posets(basis))

    def test_known_counts(self):
        self.assertEqual(self.count(brandt()), 1)
        self.assertEqual(self.count(brandt('C1', 'C2')), 2)
        self.assertEqual(self.count(chain('C1', 'C2')), 1)
        self.assertEqual(self.count(chain('C2', 'C2')), 2)
        self.assertEqual(self.count(chain('C3', 'C2')), 1)
        self.assertEqual(self.count(chain('C2', 'C3')), 1)
        self.assertEqual(self.count(build_basis(VEE, {(0,): 'C2', (1,): 'C1', (2,): 'C1'})), 1)

    def test_matches_brute_force(self):
        for basis in (brandt(), brandt('C1', 'C2'), brandt('C2', 'C1'), chain('C2', 'C2'), chain('C3', 'C2'),
                      chain('C2', 'C1'), build_basis(VEE, {(0,): 'C2', (1,): 'C2', (2,): 'C1'})):
            found = {order.below for order in self.search.g_posets(basis)}
            self.assertEqual(found, brute_force_orders(basis), basis.assignment.names)

    def test_orders_satisfy_the_hypotheses(self):
        for order in self.search.g_posets(build_basis(VEE, {(0,): 'C2', (1,): 'C2', (2,): 'C2'})):
            self.assertEqual(hypothesis_violations(order.basis, order.below), [])

    def test_hypothesis_violations(self):
        basis = brandt()
        bare = [basis.semilattice.down[x] if basis.is_idempotent(x) else 1 << x for x in range(basis.size)]
        self.assertTrue(any('restriction' in problem for problem in hypothesis_violations(basis, bare)))

    def test_block_order(self):
        basis = brandt('C1', 'C2')
        self.assertEqual(basis.partition.blocks, ((1, 2), (0,)))
        self.assertEqual(self.search.block_order(basis), [1, 0])

    def test_poset_possibilities(self):
        basis = brandt('C1', 'C2')
        options = self.search.poset_possibilities(basis, 0, 1)
        self.assertEqual(len(options), 2)
        bottom_group = [0, basis.locate(0, 0, 1)]
        for option in options:
            self.assertEqual(option[1], 1 << 0)
            self.assertEqual(option[2], 1 << 0)
            a12 = basis.locate(1, 2, 0)
            self.assertIn(option[a12], [1 << x for x in bottom_group])

    def test_possibilities_are_cached(self):
        cache = PossibilityCache()
        search = BasisOrderSearch(cache=cache)
        search.poset_possibilities(brandt('C1', 'C2'), 0, 1)
        search.poset_possibilities(brandt('C1', 'C2'), 0, 1)
        self.assertEqual((len(cache), cache.misses, cache.hits), (1, 1, 1))
        cache.clear()
        self.assertEqual(len(cache), 0)

    def test_children_and_cardinality_test(self):
        basis = brandt('C1', 'C2')
        root = self.search.root(basis)
        children = list(self.search.children(basis, root))
        self.assertEqual(len(children), 2)
        for child in children:
            self.assertEqual(child.depth, 2)
            self.assertTrue(self.search.passes_cardinality_test(basis, child.below, 0, [1]))
            self.assertEqual(list(self.search.children(basis, child)), [])

    def test_cardinality_test_rejects_uneven_blocks(self):
        basis = brandt('C1', 'C2')
        child = next(iter(self.search.children(basis, self.search.root(basis))))
        below = list(child.below)
        a12 = basis.locate(1, 2, 0)
        below[a12] = 1 << a12
        self.assertFalse(self.search.passes_cardinality_test(basis, below, 0, [1]))

    def test_comparable_idempotents_in_one_block(self):
        basis = build_basis(CHAIN_2, {(0, 1): 'C1'})
        with self.assertRaises(ESNHypothesisError):
            list(self.search.g_posets(basis))

    def test_brute_force_limit(self):
        with self.assertRaises(ValueError):
            brute_force_orders(brandt(), max_free_pairs=0)


if __name__ == '__main__':
    unittest.main()
