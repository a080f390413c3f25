import unittest
from unittest.mock import patch

from bounds.tc_bounds import TABLE_COLUMNS, bounds_table, compute_bounds
from utils.exceptions import BoundMismatch, InvalidSignature
from utils.input_parsing import parse_grid


class TestTcBounds(unittest.TestCase):

    def test_three_lines(self):
        bounds = compute_bounds(3, 2)
        self.assertEqual(bounds.tc, 4)
        self.assertEqual(bounds.lower, 4)

    def test_torus(self):
        bounds = compute_bounds(2, 2)
        self.assertEqual(bounds.tc, 3)
        self.assertTrue(bounds.constructive_tight)

    def test_constructive_bound_not_tight(self):
        bounds = compute_bounds(5, 2)
        self.assertEqual(bounds.tc, 4)
        self.assertEqual(bounds.upper_constructive, 6)
        self.assertEqual(bounds.upper_dimension, 4)
        self.assertEqual(bounds.certificate_length, 3)
        self.assertFalse(bounds.constructive_tight)

    def test_skeleton_bounds(self):
        bounds = compute_bounds(5, 2)
        self.assertEqual(bounds.dim_skeleton, 1)
        self.assertEqual(bounds.tc_skeleton_upper, 3)
        self.assertEqual(compute_bounds(3, 3).tc_skeleton_upper, 3)

    def test_all_small_signatures(self):
        for n in range(1, 9):
            for r in range(1, n + 1):
                bounds = compute_bounds(n, r)
                self.assertEqual(bounds.lower, bounds.tc)
                self.assertEqual(bounds.tc, min(n + 1, 2 * r))
                self.assertLessEqual(bounds.tc, bounds.upper_constructive)
                self.assertLessEqual(bounds.tc, bounds.upper_dimension)

    def test_invalid_signature(self):
        with self.assertRaises(InvalidSignature):
            compute_bounds(2, 3)

    def test_mismatch_is_reported(self):
        compute_bounds.cache_clear()
        try:
            with patch("bounds.tc_bounds.lower_bound_certificate") as certificate:
                certificate.return_value.factors = 1
                with self.assertRaises(BoundMismatch):
                    compute_bounds(3, 2)
        finally:
            compute_bounds.cache_clear()


class TestBoundsTable(unittest.TestCase):

    def setUp(self):
        self.table = bounds_table(parse_grid("n=1..8,r=1..n"))

    def test_rows(self):
        self.assertEqual(len(self.table), 36)
        self.assertEqual(len(bounds_table(parse_grid("n=1..6,r=1..n"))), 21)
        self.assertTrue((self.table["lower"] == self.table["tc"]).all())

    def test_monotonicity(self):
        # tc non decresce in r a n fissato, né in n a r fissato
        for _, group in self.table.groupby("n"):
            self.assertTrue(group.sort_values("r")["tc"].is_monotonic_increasing)
        for _, group in self.table.groupby("r"):
            self.assertTrue(group.sort_values("n")["tc"].is_monotonic_increasing)

    def test_csv_header(self):
        text = self.table[TABLE_COLUMNS].to_csv(index=False)
        self.assertEqual(text.splitlines()[0], "n,r,lower,upper_constructive,upper_dimension,tc")

    def test_tight_column(self):
        row = self.table[(self.table["n"] == 5) & (self.table["r"] == 2)].iloc[0]
        self.assertFalse(row["constructive_tight"])


if __name__ == '__main__':
    unittest.main()
