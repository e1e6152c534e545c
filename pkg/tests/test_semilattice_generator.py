import os
import unittest
from config.enumeration_constants import EnumerationConstants
from orders.canonical_labeler import CanonicalLabeler
from orders.semilattice_generator import SemilatticeGenerator
from utils.bitset import bits

LATTICE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15, 7: 53, 8: 222, 9: 1078, 10: 5994, 11: 37622}
SLOW = os.environ.get(EnumerationConstants.SLOW_TESTS_ENV) == '1'


class TestSemilatticeGenerator(unittest.TestCase):

    def setUp(self):
        self.generator = SemilatticeGenerator()
        self.labeler = CanonicalLabeler()

    def test_lattice_counts(self):
        for size in range(1, 9):
            self.assertEqual(sum(1 for _ in self.generator.lattices(size)), LATTICE_COUNTS[size], size)

    def test_meet_semilattice_counts(self):
        for m in range(1, 8):
            self.assertEqual(sum(1 for _ in self.generator.meet_semilattices(m)), LATTICE_COUNTS[m + 1], m)

    def test_representatives_are_distinct(self):
        forms = [self.labeler.canonical_form(s.down, s.up).encoding for s in self.generator.meet_semilattices(6)]
        self.assertEqual(len(forms), len(set(forms)))

    def test_labels_follow_a_linear_extension(self):
        for semilattice in self.generator.meet_semilattices(6):
            self.assertEqual(semilattice.minimum(), 0)
            for x, row in enumerate(semilattice.down):
                self.assertTrue(all(y <= x for y in bits(row)))

    def test_lattices_have_a_top(self):
        for lattice in self.generator.lattices(6):
            self.assertTrue(lattice.has_maximum())
            self.assertEqual(lattice.down[-1], (1 << 6) - 1)

    def test_invalid_sizes(self):
        with self.assertRaises(ValueError):
            list(self.generator.lattices(0))
        with self.assertRaises(ValueError):
            list(self.generator.meet_semilattices(0))

    @unittest.skipUnless(SLOW, 'slow tier')
    def test_lattice_counts_slow(self):
        for size in range(9, 12):
            self.assertEqual(sum(1 for _ in self.generator.lattices(size)), LATTICE_COUNTS[size], size)


if __name__ == '__main__':
    unittest.main()
