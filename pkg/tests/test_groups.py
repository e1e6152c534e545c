import unittest
from sympy.combinatorics.named_groups import CyclicGroup
from groups.group import Group, are_isomorphic, isomorphisms
from groups.group_catalog import GroupCatalog, abelian_invariant_factors, dicyclic_group


class TestGroupCatalog(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.catalog = GroupCatalog()

    def test_groups_per_order(self):
        counts = tuple(len(self.catalog.by_order(order)) for order in range(1, 16))
        self.assertEqual(counts, (1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1))

    def test_groups_are_pairwise_non_isomorphic(self):
        for order in range(1, 16):
            groups = self.catalog.by_order(order)
            for i, first in enumerate(groups):
                self.assertTrue(first.is_associative())
                for second in groups[i + 1:]:
                    self.assertFalse(are_isomorphic(first, second))

    def test_names(self):
        self.assertEqual([g.name for g in self.catalog.by_order(4)], ['C2xC2', 'C4'])
        self.assertEqual([g.name for g in self.catalog.by_order(6)], ['C6', 'S3'])
        self.assertTrue(self.catalog.by_name('Q8').order == 8)
        self.assertFalse(self.catalog.by_name('S3').is_abelian())

    def test_unknown_name(self):
        with self.assertRaises(ValueError):
            self.catalog.by_name('C16')

    def test_automorphism_counts(self):
        expected = {'C1': 1, 'C2': 1, 'C3': 2, 'C2xC2': 6, 'C4': 2, 'S3': 6, 'Q8': 24}
        for name, count in expected.items():
            automorphisms = self.catalog.automorphisms(self.catalog.by_name(name))
            self.assertEqual(len(automorphisms), count, name)
            self.assertTrue(all(m.is_homomorphism() and m.is_bijection() for m in automorphisms))

    def test_automorphisms_form_a_group(self):
        for group in self.catalog.catalog():
            automorphisms = self.catalog.automorphisms(group)
            members = set(automorphisms)
            self.assertIn(tuple(range(group.order)), {m.images for m in automorphisms}, group.name)
            for first in automorphisms:
                self.assertIn(first.inverse(), members, group.name)
                for second in automorphisms:
                    self.assertIn(first.compose(second), members, group.name)

    def test_bijections(self):
        c3 = self.catalog.by_name('C3')
        self.assertEqual(len(self.catalog.bijections(c3, c3)), 6)
        with self.assertRaises(ValueError):
            self.catalog.bijections(c3, self.catalog.by_name('C2'))

    def test_invalid_max_order(self):
        with self.assertRaises(ValueError):
            GroupCatalog(max_order=16)
        with self.assertRaises(ValueError):
            GroupCatalog(max_order=0)


class TestGroup(unittest.TestCase):

    def test_abelian_invariant_factors(self):
        self.assertEqual(abelian_invariant_factors(8), [(8,), (4, 2), (2, 2, 2)])
        self.assertEqual(abelian_invariant_factors(12), [(12,), (6, 2)])
        self.assertEqual(abelian_invariant_factors(1), [(1,)])

    def test_dicyclic_group(self):
        q8 = dicyclic_group(2, name='Q8')
        self.assertEqual(q8.order, 8)
        self.assertTrue(q8.is_associative())
        self.assertEqual(sorted(q8.element_order(x) for x in range(8)), [1, 2, 4, 4, 4, 4, 4, 4])

    def test_from_func_and_from_sympy_agree(self):
        by_func = Group.from_func('C5', list(range(5)), lambda a, b: (a + b) % 5)
        by_sympy = Group.from_sympy('C5', CyclicGroup(5))
        self.assertTrue(are_isomorphic(by_func, by_sympy))
        self.assertEqual(len(list(isomorphisms(by_func, by_sympy))), 4)

    def test_invalid_table(self):
        with self.assertRaises(ValueError):
            Group(name='bad', mul=((0, 1), (1, 1)), inv=(0, 1))

    def test_group_map_inverse(self):
        c4 = Group.from_sympy('C4', CyclicGroup(4))
        for automorphism in isomorphisms(c4, c4):
            self.assertEqual(automorphism.compose(automorphism.inverse()).images, tuple(range(4)))


if __name__ == '__main__':
    unittest.main()
