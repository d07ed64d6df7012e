#!/usr/bin/python
from __future__ import with_statement, print_function
import unittest

from cyclepatterns import (InvalidInput, Pattern, PatternSet, Permutation, count_cycle_matches,
                           count_linear_matches, cycle_has_occurrence, cycle_match_count,
                           has_cycle_occurrence, has_linear_occurrence, order_type)


class PatternTestCase(unittest.TestCase):

    def test_pattern_attributes(self):
        tau = Pattern("1432")
        self.assertEqual(tau.j, 4)
        self.assertEqual(tau.des, 2)
        self.assertTrue(tau.starts_with_one)
        self.assertEqual(str(tau.reverse()), "2341")
        self.assertEqual(str(tau.complement()), "4123")
        self.assertEqual([str(p) for p in Pattern("132").cyclic_rotations()], ["132", "321", "213"])
        self.assertEqual(repr(Pattern("21")), "<Pattern 21>")

    def test_order_type(self):
        self.assertEqual(order_type((5, 1, 3)), Pattern("312").key)
        self.assertTrue(PatternSet.parse("312").matches((5, 1, 3)))
        self.assertFalse(PatternSet.parse("132").matches((5, 1, 3)))

    def test_pattern_set(self):
        patterns = PatternSet.parse("321,123")
        self.assertEqual(str(patterns), "123,321")
        self.assertEqual(patterns.j, 3)
        self.assertEqual(len(patterns), 2)
        self.assertIn("321", patterns)
        self.assertNotIn("132", patterns)
        self.assertEqual(str(PatternSet.parse("123,132").reverse()), "231,321")
        self.assertEqual(PatternSet.coerce(Pattern("12")), PatternSet.parse("12"))
        self.assertEqual(PatternSet.coerce("12"), PatternSet(["12"]))

    def test_pattern_set_rejects(self):
        for text in ("12,123", "12,12", "", "12,,21", "1a"):
            with self.assertRaises(InvalidInput):
                PatternSet.parse(text)
        with self.assertRaises(InvalidInput):
            PatternSet([])

    def test_cycle_matches_with_wraparound(self):
        patterns = PatternSet.parse("213")
        p = Permutation.parse("(1,10,9)(2,3)(4,7,5,8,6)")
        self.assertEqual(cycle_match_count((1, 10, 9), patterns), 1)
        self.assertEqual(cycle_match_count((2, 3), patterns), 0)
        self.assertEqual(cycle_match_count((4, 7, 5, 8, 6), patterns), 2)
        self.assertEqual(count_cycle_matches(p, patterns), 3)

    def test_two_cycle_matches_12(self):
        self.assertEqual(cycle_match_count((1, 2), PatternSet.parse("12")), 1)
        self.assertEqual(cycle_match_count((1,), PatternSet.parse("12")), 0)

    def test_cycle_occurrence(self):
        self.assertFalse(cycle_has_occurrence((1, 2, 3), PatternSet.parse("132")))
        self.assertTrue(cycle_has_occurrence((1, 2, 3), PatternSet.parse("123")))
        self.assertTrue(cycle_has_occurrence((1, 3, 2), PatternSet.parse("132")))
        self.assertFalse(cycle_has_occurrence((1, 2), PatternSet.parse("123")))
        self.assertTrue(has_cycle_occurrence(Permutation.parse("(1,4,2,3)"), "132"))

    def test_occurrences_of_123_in_ten_point_example(self):
        p = Permutation.parse("(1,10,9)(2,3)(4,8,5,7,6)")
        patterns = PatternSet.parse("123")
        self.assertTrue(has_cycle_occurrence(p, patterns))
        self.assertFalse(cycle_has_occurrence((1, 10, 9), patterns))
        self.assertFalse(cycle_has_occurrence((2, 3), patterns))
        self.assertTrue(cycle_has_occurrence((4, 8, 5, 7, 6), patterns))
        # 4 5 7, 4 5 6 and 5 6 8 are the occurrences in the last cycle
        self.assertFalse(cycle_has_occurrence((4, 8, 5, 7, 6), PatternSet.parse("1234")))

    def test_symmetries_of_cycle_matches_and_occurrences(self):
        taus = [Pattern(w) for w in ("123", "132", "213", "231", "312", "321")]
        for n in range(1, 7):
            for p in Permutation.all(n):
                cr = p.cycle_reverse()
                cc = p.cycle_complement()
                for tau in taus:
                    self.assertEqual(count_cycle_matches(p, tau), count_cycle_matches(cr, tau.reverse()))
                    self.assertEqual(count_cycle_matches(p, tau), count_cycle_matches(cc, tau.complement()))
                    self.assertEqual(has_cycle_occurrence(p, tau), has_cycle_occurrence(cr, tau.reverse()))
                    self.assertEqual(has_cycle_occurrence(p, tau), has_cycle_occurrence(cc, tau.complement()))

    def test_cycle_match_is_an_occurrence(self):
        for n in range(1, 7):
            for p in Permutation.all(n):
                for tau in ("123", "132", "231", "1324"):
                    if count_cycle_matches(p, tau):
                        self.assertTrue(has_cycle_occurrence(p, tau), (p, tau))

    def test_occurrence_ignores_rotation(self):
        patterns = [PatternSet.parse(w) for w in ("123", "132", "321", "1342")]
        for n in range(1, 7):
            for p in Permutation.all(n):
                cycle = p.word
                found = [cycle_has_occurrence(cycle, s) for s in patterns]
                matches = [cycle_match_count(cycle, s) for s in patterns]
                for r in range(1, n):
                    rotated = cycle[r:] + cycle[:r]
                    self.assertEqual([cycle_has_occurrence(rotated, s) for s in patterns], found)
                    self.assertEqual([cycle_match_count(rotated, s) for s in patterns], matches)

    def test_linear(self):
        self.assertEqual(count_linear_matches(Permutation((1, 3, 2, 4)), "132"), 1)
        self.assertTrue(has_linear_occurrence(Permutation((1, 4, 2, 3)), "132"))
        self.assertFalse(has_linear_occurrence(Permutation((1, 2, 3, 4, 5)), "21"))


def suite():
    return unittest.TestLoader().loadTestsFromTestCase(PatternTestCase)


if __name__ == "__main__":
    unittest.main()
