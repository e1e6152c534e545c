import unittest
from esn.esn_builder import ESNBuilder, ESNHypothesisError
from esn.inverse_semigroup import parse_cayley_text
from esn.semigroup_validator import anti_isomorphic_copy, expanded_product, validate_inverse_semigroup
from groupoid.basis_order_search import BasisOrderSearch
from groupoid.natural_basis import BasisOrder
from isomorphism.isomorphism_tester import brute_force_isomorphic
from tests.builders import VEE, brandt, build_basis, chain


class TestESNBuilder(unittest.TestCase):

    def setUp(self):
        self.search = BasisOrderSearch(validate_leaves=True)
        self.builder = ESNBuilder()

    def semigroups(self, basis):
        return [(order, self.builder.esn(basis, order)) for order in self.search.g_posets(basis)]

    def test_brandt_semigroup(self):
        [(order, semigroup)] = self.semigroups(brandt())
        self.assertEqual((semigroup.size, semigroup.idempotent_count), (5, 3))
        self.assertTrue(validate_inverse_semigroup(semigroup.table))
        self.assertFalse(semigroup.is_commutative())
        self.assertFalse(semigroup.is_monoid())
        a12 = order.basis.locate(1, 2, 0)
        a21 = order.basis.locate(2, 1, 0)
        self.assertEqual(semigroup.multiply(a12, a21), 1)
        self.assertEqual(semigroup.multiply(a21, a12), 2)
        self.assertEqual(semigroup.multiply(a12, a12), 0)
        self.assertEqual((semigroup.dom(a12), semigroup.ran(a12)), (2, 1))

    def test_every_order_gives_an_inverse_semigroup(self):
        bases = [brandt('C1', 'C2'), brandt('C2', 'C1'), chain('C2', 'C2'), chain('C3', 'C1'),
                 build_basis(VEE, {(0,): 'C2', (1,): 'C2', (2,): 'C1'})]
        for basis in bases:
            for order, semigroup in self.semigroups(basis):
                self.assertTrue(validate_inverse_semigroup(semigroup.table), basis.assignment.names)
                self.assertEqual(semigroup.size, basis.size)

    def test_natural_order_is_the_basis_order(self):
        for order, semigroup in self.semigroups(brandt('C1', 'C2')) + self.semigroups(chain('C2', 'C2')):
            self.assertEqual(semigroup.natural_order.down, order.below)

    def test_d_restriction(self):
        for _, semigroup in self.semigroups(brandt('C1', 'C2')):
            self.assertEqual(semigroup.d_restriction.blocks, ((1, 2), (0,)))
            self.assertEqual(semigroup.group_name(0), 'C2')
            self.assertEqual(len(semigroup.maximal_subgroup(0)), 2)
            self.assertEqual(len(semigroup.maximal_subgroup(1)), 1)

    def test_multiply_agrees_with_the_table(self):
        for order, semigroup in self.semigroups(brandt('C1', 'C2')):
            for s in range(semigroup.size):
                for t in range(semigroup.size):
                    self.assertEqual(self.builder.multiply(order, s, t), semigroup.table[s][t])

    def test_expanded_product_agrees_with_the_table(self):
        for order, semigroup in self.semigroups(brandt('C1', 'C2')) + self.semigroups(chain('C2', 'C2')):
            for s in range(semigroup.size):
                for t in range(semigroup.size):
                    self.assertEqual(expanded_product(order, s, t), semigroup.table[s][t])

    def test_clifford_semigroups_are_commutative_monoids(self):
        for _, semigroup in self.semigroups(chain('C2', 'C2')):
            self.assertTrue(semigroup.is_commutative())
            self.assertTrue(semigroup.is_monoid())

    def test_anti_isomorphic_copy(self):
        for _, semigroup in self.semigroups(brandt('C1', 'C2')):
            copy = anti_isomorphic_copy(semigroup)
            self.assertTrue(validate_inverse_semigroup(copy.table))
            self.assertTrue(brute_force_isomorphic(semigroup, copy))

    def test_missing_restriction(self):
        basis = brandt()
        bare = tuple(basis.semilattice.down[x] if basis.is_idempotent(x) else 1 << x for x in range(basis.size))
        with self.assertRaises(ESNHypothesisError):
            self.builder.esn(basis, BasisOrder(basis=basis, below=bare))
        with self.assertRaises(ESNHypothesisError):
            self.builder.multiply(BasisOrder(basis=basis, below=bare), basis.locate(1, 2, 0), 0)

    def test_cayley_text(self):
        [(_, semigroup)] = self.semigroups(brandt())
        text = semigroup.to_cayley_text()
        self.assertTrue(text.startswith('n=5 e=3\n'))
        rows, idempotents = parse_cayley_text(text)
        self.assertEqual((tuple(tuple(row) for row in rows), idempotents), (semigroup.table, 3))
        for broken in ('', 'n=5\n0', 'n=2 e=1\n0 1\n1'):
            with self.assertRaises(ValueError):
                parse_cayley_text(broken)


class TestSemigroupValidator(unittest.TestCase):

    def test_rejects_non_inverse_tables(self):
        # Left-zero band: every element is idempotent and they do not commute
        self.assertFalse(validate_inverse_semigroup(((0, 0), (1, 1))))
        # Not associative
        self.assertFalse(validate_inverse_semigroup(((1, 0), (0, 0))))
        self.assertTrue(validate_inverse_semigroup(((0, 1), (1, 0))))


if __name__ == '__main__':
    unittest.main()
