#!/usr/bin/python
from __future__ import with_statement, print_function
import unittest

from cyclepatterns import (Config, EgfSeq, InvalidInput, PreconditionError, UnknownIdentifier, XYPoly, YPoly,
                           a132_series, ca_s3_txy, egf_log, gj_series, mr_denominator, mr_series,
                           ncm_123_321_txy, ncm_132_txy, ncm_1dots2_txy, ncm_both_123_132_txy,
                           ncm_formula_for, refined_table, resolve_formula, reverse_complement_ncm,
                           u_recurrence_txy)
from cyclepatterns.formulas import DISPLAYED, THM12_ALIASES
from cyclepatterns.verify import PRINTED_1243_S, TABLE_123, TABLE_132

S3 = ("123", "132", "213", "231", "312", "321")


class FormulasTestCase(unittest.TestCase):
    """
    Closed forms against the brute-force oracle and published columns.
    """

    @classmethod
    def setUpClass(cls):
        cls._config = Config(environ={})

    def _oracle(self, patterns, max_n, mode="ncm"):
        return refined_table(patterns, mode, max_n, self._config).to_series()

    def test_gj_series(self):
        self.assertEqual(gj_series(3, 8).scalars(), [1, 1, 2, 5, 17, 70, 349, 2017, 13358])
        self.assertEqual(gj_series(2, 5).scalars(), [1] * 6)
        with self.assertRaises(InvalidInput):
            gj_series(1, 5)

    def test_mr_denominator(self):
        self.assertEqual(mr_denominator(3, 3).y_parts(),
                         [YPoly([1]), YPoly([0, -1]), YPoly([0, -1, 1]), YPoly([0, 0, 2, -1])])
        with self.assertRaises(InvalidInput):
            mr_denominator(3, 3, "other")

    def test_mr_series(self):
        self.assertEqual(list(mr_series(2, 5)), [XYPoly.monomial(n, n) for n in range(6)])
        self.assertEqual(mr_series(3, 10).scalars()[1:], list(TABLE_123["NCM"]))
        self.assertEqual(mr_series(3, 6), self._oracle("123", 6))
        self.assertEqual(mr_series(4, 6), self._oracle("1234", 6))
        self.assertFalse(mr_series(3, 4, DISPLAYED).is_nonnegative())

    def test_ca_s3(self):
        for tau in S3:
            self.assertEqual(ca_s3_txy(tau, 5), self._oracle(tau, 5, "ca"), tau)
            self.assertEqual(ca_s3_txy(tau, 0), EgfSeq.one(0), tau)
            self.assertEqual(ca_s3_txy(tau, 1), EgfSeq([1, XYPoly.monomial(1, 1)]), tau)
        self.assertEqual(resolve_formula("ca:123", 0).order, 0)
        with self.assertRaises(InvalidInput):
            ca_s3_txy("1234", 5)

    def test_series_are_nonnegative(self):
        self.assertTrue(ncm_132_txy(10).is_nonnegative())
        self.assertTrue(mr_series(3, 10).is_nonnegative())
        self.assertTrue(mr_series(4, 10).is_nonnegative())
        self.assertTrue(ncm_123_321_txy(10).is_nonnegative())
        self.assertTrue(ncm_both_123_132_txy(10).is_nonnegative())
        for tau in S3:
            self.assertTrue(ca_s3_txy(tau, 10).is_nonnegative(), tau)

    def test_ncm_132(self):
        series = ncm_132_txy(10)
        self.assertEqual(series.scalars()[1:], list(TABLE_132["NCM"]))
        self.assertEqual(egf_log(series.specialize(x=1)).scalars()[1:], list(TABLE_132["L"]))
        self.assertEqual(ncm_132_txy(6), self._oracle("132", 6))
        self.assertEqual(a132_series(8), egf_log(ncm_132_txy(8).specialize(x=1)))

    def test_1dots2(self):
        self.assertEqual(ncm_1dots2_txy("132", 8), ncm_132_txy(8))
        self.assertEqual(ncm_1dots2_txy("1432", 6), self._oracle("1432", 6))
        self.assertEqual(ncm_1dots2_txy("1432", 6, "corrected"), ncm_1dots2_txy("1432", 6))
        for alias in ("displayed", "proof"):
            self.assertNotEqual(ncm_1dots2_txy("132", 4, alias), ncm_132_txy(4), alias)
        self.assertEqual(ncm_1dots2_txy("132", 4, THM12_ALIASES["proof"]),
                         ncm_1dots2_txy("132", 4, "e1=+1,e2=+1,d=0"))
        with self.assertRaises(InvalidInput):
            ncm_1dots2_txy("123", 4)
        with self.assertRaises(UnknownIdentifier):
            ncm_1dots2_txy("132", 4, "sideways")

    def test_pattern_sets(self):
        self.assertEqual(ncm_123_321_txy(6), self._oracle("123,321", 6))
        both = ncm_both_123_132_txy(6)
        self.assertEqual(both, self._oracle("123,132", 6))
        self.assertEqual(both[2], XYPoly({(1, 1): 1, (2, 2): 1}))
        self.assertEqual(both[3].at_ones(), 4)

    def test_reverse_complement(self):
        rc = reverse_complement_ncm("132", ncm_132_txy(6))
        self.assertEqual(rc, self._oracle("231", 6))
        self.assertEqual(rc, self._oracle("312", 6))
        self.assertEqual(self._oracle("213", 6), self._oracle("132", 6))
        self.assertEqual(reverse_complement_ncm("123", mr_series(3, 6)), self._oracle("321", 6))
        self.assertEqual(rc.scalars(), ncm_132_txy(6).scalars())

    def test_u_recurrence(self):
        self.assertEqual(list(u_recurrence_txy("1243", 4, config=self._config)),
                         [XYPoly.from_expr(s) for s in PRINTED_1243_S])
        self.assertEqual(u_recurrence_txy("1243", 7, config=self._config), self._oracle("1243", 7))

    def test_ncm_formula_for(self):
        self.assertEqual(ncm_formula_for("231", 5), reverse_complement_ncm("132", ncm_132_txy(5), 5))
        self.assertEqual(ncm_formula_for("12", 4), mr_series(2, 4))
        with self.assertRaises(PreconditionError):
            ncm_formula_for("3142", 4)

    def test_resolve_formula(self):
        self.assertEqual(resolve_formula("gj:k=3", 5), gj_series(3, 5))
        self.assertEqual(resolve_formula("mr:j=3", 5), mr_series(3, 5))
        self.assertEqual(resolve_formula("ca:231", 5), ca_s3_txy("231", 5))
        self.assertEqual(resolve_formula("rc:132", 5), reverse_complement_ncm("132", ncm_132_txy(5)))
        self.assertEqual(resolve_formula("urec:1243", 5, self._config),
                         u_recurrence_txy("1243", 5, config=self._config))
        self.assertEqual(resolve_formula("a132", None, self._config).order, self._config.order)
        for ident in ("nonsense", "gj:k=", "mr:3", ""):
            with self.assertRaises(UnknownIdentifier):
                resolve_formula(ident, 4)
        with self.assertRaises(InvalidInput):
            resolve_formula("thm12:123", 4)
        with self.assertRaises(InvalidInput):
            resolve_formula("ncm132", -1)


def suite():
    return unittest.TestLoader().loadTestsFromTestCase(FormulasTestCase)


if __name__ == "__main__":
    unittest.main()
