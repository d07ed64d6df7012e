#!/usr/bin/python
from __future__ import with_statement, print_function
import unittest

from sympy import bell

from cyclepatterns import (Config, InvalidInput, ResourceLimitExceeded, XYPoly, YPoly, count_alternating,
                           cycle_table, enumerate_cycles, enumerate_leading_one, enumerate_refined,
                           leading_one_table, refined_table)


class EnumerationTestCase(unittest.TestCase):
    """
    Brute-force counts against published tables and small hand counts.
    """

    @classmethod
    def setUpClass(cls):
        cls._config = Config(environ={})

    def _scalars(self, patterns, mode, max_n):
        return refined_table(patterns, mode, max_n, self._config).scalars()[1:]

    def test_empty_permutation(self):
        self.assertEqual(enumerate_refined(0, "132", "ncm", self._config), XYPoly.one())
        self.assertEqual(enumerate_cycles(0, "132", "ncm", self._config), YPoly())

    def test_pattern_12(self):
        self.assertEqual(enumerate_refined(2, "12", "ncm", self._config), XYPoly.monomial(2, 2))
        self.assertEqual(enumerate_refined(3, "12", "ncm", self._config), XYPoly.monomial(3, 3))
        self.assertEqual(enumerate_refined(3, "12", "nm", self._config), XYPoly.monomial(3, 3))

    def test_3142_table(self):
        self.assertEqual(self._scalars("3142", "ncm", 7), [1, 2, 6, 23, 111, 638, 4278])
        self.assertEqual(self._scalars("3142", "nm", 7), [1, 2, 6, 23, 110, 632, 4237])
        self.assertEqual(cycle_table("3142", "ncm", 8, self._config).scalars()[1:],
                         [1, 1, 2, 5, 20, 92, 532, 3565])

    def test_123_and_132_tables(self):
        self.assertEqual(self._scalars("123", "ncm", 7), [1, 2, 5, 17, 70, 349, 2017])
        self.assertEqual(cycle_table("123", "ncm", 7, self._config).scalars()[1:], [1, 1, 1, 3, 9, 39, 189])
        self.assertEqual(self._scalars("132", "ncm", 7), [1, 2, 5, 16, 63, 296, 1623])
        self.assertEqual(cycle_table("132", "ncm", 7, self._config).scalars()[1:], [1, 1, 1, 2, 7, 28, 131])

    def test_cycle_avoidance_of_s3(self):
        bells = [int(bell(n)) for n in range(1, 7)]
        for tau in ("123", "132", "213", "231", "312", "321"):
            self.assertEqual(self._scalars(tau, "ca", 6), bells, tau)
        self.assertEqual(enumerate_cycles(4, "123", "ca", self._config), YPoly.monomial(3))
        self.assertEqual(enumerate_cycles(5, "132", "ca", self._config), YPoly.monomial(1))

    def test_linear_avoidance(self):
        self.assertEqual(enumerate_refined(4, "132", "a", self._config).at_ones(), 14)
        self.assertEqual(enumerate_refined(5, "231", "a", self._config).at_ones(), 42)

    def test_pattern_sets(self):
        self.assertEqual(enumerate_refined(3, "123,132", "ncm", self._config).at_ones(), 4)
        self.assertEqual(enumerate_cycles(3, "123,321", "ncm", self._config), YPoly())

    def test_leading_one(self):
        table = leading_one_table("1243", 4, self._config)
        self.assertEqual(list(table), [YPoly(), YPoly([0, 1]), YPoly([0, 1]), YPoly([0, 1, 1]),
                                       YPoly([0, 1, 3, 1])])
        self.assertEqual(enumerate_leading_one(6, "132", self._config),
                         enumerate_cycles(6, "132", "ncm", self._config))

    def test_partitioned_runs_agree(self):
        self.assertEqual(enumerate_refined(6, "132", "ncm", self._config, jobs=2),
                         enumerate_refined(6, "132", "ncm", self._config, jobs=1))

    def test_limits_and_modes(self):
        small = Config(max_n=5, max_cycle=5, environ={})
        with self.assertRaises(ResourceLimitExceeded):
            enumerate_refined(6, "12", "ncm", small)
        with self.assertRaises(ResourceLimitExceeded):
            enumerate_cycles(6, "12", "ncm", small)
        with self.assertRaises(InvalidInput):
            enumerate_refined(3, "12", "xx", self._config)
        with self.assertRaises(InvalidInput):
            enumerate_cycles(3, "12", "nm", self._config)
        with self.assertRaises(InvalidInput):
            enumerate_refined(-1, "12", "ncm", self._config)
        with self.assertRaises(InvalidInput):
            enumerate_cycles(-1, "12", "ncm", self._config)
        with self.assertRaises(InvalidInput):
            refined_table("12", "ncm", -1, self._config)
        with self.assertRaises(InvalidInput):
            leading_one_table("12", -2, self._config)

    def test_exports(self):
        table = refined_table("12", "ncm", 2, self._config)
        self.assertEqual(table.to_csv(), "n,count\n0,1\n1,1\n2,1\n")
        self.assertEqual(table.to_json()["table"][2], {"n": 2, "count": "1", "poly": [[2, 2, "1"]]})
        self.assertEqual(table.max_n, 2)

    def test_count_alternating(self):
        self.assertEqual([count_alternating(n) for n in range(1, 7)], [1, 1, 2, 5, 16, 61])


def suite():
    return unittest.TestLoader().loadTestsFromTestCase(EnumerationTestCase)


if __name__ == "__main__":
    unittest.main()
