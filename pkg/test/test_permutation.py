#!/usr/bin/python
from __future__ import with_statement, print_function
import unittest

from hypothesis import given, strategies as st
from sympy.combinatorics import Permutation as SympyPermutation

from cyclepatterns import (CycleForm, InvalidInput, Permutation, Stats, cycle_descents, descents,
                           left_to_right_minima, reduce_word)
from cyclepatterns.permutation import DESCENDING


def permutations(max_n=7):
    return st.integers(1, max_n).flatmap(lambda n: st.permutations(range(1, n + 1)))


class PermutationTestCase(unittest.TestCase):
    """
    Statistics, cycle decomposition and the fundamental bijection.
    """

    @classmethod
    def setUpClass(cls):
        cls._example = Permutation.parse("(7,10,9,11)(4,8,6)(1,5,3,2)")

    def test_parse_forms(self):
        self.assertEqual(Permutation.parse("231").word, (2, 3, 1))
        self.assertEqual(Permutation.parse("2 3 1"), Permutation((2, 3, 1)))
        self.assertEqual(Permutation.parse("2,3,1"), Permutation((2, 3, 1)))
        self.assertEqual(Permutation.parse("(1,3)(2)").word, (3, 2, 1))
        self.assertEqual(Permutation.parse("").n, 0)

    def test_parse_rejects_malformed(self):
        for text in ("(1,2", "12a", "1 1", "(1,2)(2,3)", "()"):
            with self.assertRaises(InvalidInput):
                Permutation.parse(text)
        with self.assertRaises(InvalidInput):
            Permutation((1, 3))

    def test_cycle_form(self):
        p = Permutation((2, 3, 1, 5, 4))
        self.assertEqual(p.cycles, ((1, 2, 3), (4, 5)))
        self.assertEqual(str(p.cycle_form()), "(1,2,3)(4,5)")
        self.assertEqual(p.cycle_form(DESCENDING).word(), (4, 5, 1, 2, 3))
        self.assertEqual(p.cycle_form().to_permutation(), p)

    def test_cycle_form_validation(self):
        with self.assertRaises(InvalidInput):
            CycleForm([(2, 1)])
        with self.assertRaises(InvalidInput):
            CycleForm([(2,), (1,)])
        self.assertEqual(CycleForm.canonical([(3, 1), (2,)]).cycles, ((1, 3), (2,)))

    def test_statistics_of_example(self):
        p = self._example
        bar = p.fundamental_bijection()
        self.assertEqual(bar.word, (7, 10, 9, 11, 4, 8, 6, 1, 5, 3, 2))
        self.assertEqual(cycle_descents((7, 10, 9, 11)), 2)
        self.assertEqual(cycle_descents((4, 8, 6)), 2)
        self.assertEqual(cycle_descents((1, 5, 3, 2)), 3)
        self.assertEqual(p.cdes(), 7)
        self.assertEqual(bar.des(), 6)
        self.assertEqual(p.cyc(), 3)
        self.assertEqual(bar.lrmin(), 3)
        self.assertEqual(Permutation.from_fundamental(bar.word), p)

    def test_identity_stats(self):
        self.assertEqual(Permutation.identity(3).stats(), Stats(des=0, cdes=3, cyc=3, lrmin=1))
        self.assertEqual(cycle_descents(()), 0)

    def test_word_helpers(self):
        self.assertEqual(descents((3, 1, 2)), 1)
        self.assertEqual(left_to_right_minima((3, 1, 2)), 2)
        self.assertEqual(reduce_word((10, 4, 7)), Permutation((3, 1, 2)))
        with self.assertRaises(InvalidInput):
            reduce_word((1, 1))

    def test_symmetries(self):
        p = Permutation((2, 3, 1))
        self.assertEqual(p.reverse().word, (1, 3, 2))
        self.assertEqual(p.complement().word, (2, 1, 3))
        self.assertEqual(p.cycle_reverse().word, (3, 1, 2))
        self.assertEqual(p.cycle_complement().cycles, ((1, 3, 2),))

    def test_transforms_of_small_example(self):
        p = Permutation.parse("2 3 1 5 4")
        self.assertEqual(p.reverse(), Permutation.parse("4 5 1 3 2"))
        self.assertEqual(p.complement(), Permutation.parse("4 3 5 1 2"))
        self.assertEqual(p.cycle_reverse(), Permutation.parse("(1,3,2)(4,5)"))
        self.assertEqual(p.cycle_reverse(), Permutation.parse("3 1 2 5 4"))
        self.assertEqual(p.cycle_complement(), Permutation.parse("(5,4,3)(2,1)"))
        self.assertEqual(p.cycle_complement(), Permutation.parse("2 1 5 3 4"))

    def test_cycle_transforms_of_ten_point_example(self):
        p = Permutation.parse("(1,10,9)(2,3)(4,7,5,8,6)")
        self.assertEqual(p.cycle_reverse(), Permutation.parse("(1,9,10)(2,3)(4,6,8,5,7)"))
        self.assertEqual(p.cycle_complement(), Permutation.parse("(10,1,2)(9,8)(7,4,6,3,5)"))
        self.assertEqual(p.cycle_complement().cycles, ((1, 2, 10), (3, 5, 7, 4, 6), (8, 9)))

    def test_transforms_are_involutions(self):
        for n in range(1, 8):
            for p in Permutation.all(n):
                self.assertEqual(p.reverse().reverse(), p)
                self.assertEqual(p.complement().complement(), p)
                self.assertEqual(p.cycle_reverse().cycle_reverse(), p)
                self.assertEqual(p.cycle_complement().cycle_complement(), p)

    def test_cdes_of_transformed_cycles(self):
        for n in range(2, 8):
            for p in Permutation.all(n):
                for c in p.cycles:
                    m = len(c)
                    if m < 2:
                        continue
                    reversed_cycle = (c[0],) + c[:0:-1]
                    flipped = tuple(n + 1 - v for v in c)
                    k = flipped.index(min(flipped))
                    flipped = flipped[k:] + flipped[:k]
                    self.assertEqual(cycle_descents(c) + cycle_descents(reversed_cycle), m, c)
                    self.assertEqual(cycle_descents(c) + cycle_descents(flipped), m, c)

    def test_decompositions_recompose(self):
        for n in range(0, 9):
            for p in Permutation.all(n):
                self.assertEqual(p.cycle_form().to_permutation(), p)
                self.assertEqual(Permutation.from_cycles(p.cycles, n), p)
                self.assertEqual(Permutation.from_fundamental(p.fundamental_bijection()), p)

    def test_all(self):
        self.assertEqual(len(list(Permutation.all(4))), 24)
        self.assertEqual(list(Permutation.all(0)), [Permutation(())])

    def test_json(self):
        p = Permutation((4, 1, 3, 2))
        self.assertEqual(p.to_json(), [4, 1, 3, 2])
        self.assertEqual(Permutation.from_json(p.to_json()), p)
        self.assertEqual(str(p), "4132")
        self.assertEqual(repr(p), "<Permutation 4 1 3 2>")

    @given(permutations())
    def test_bijection_statistics(self, word):
        p = Permutation(word)
        bar = p.fundamental_bijection()
        self.assertEqual(p.cyc(), bar.lrmin())
        self.assertEqual(p.cdes(), 1 + bar.des())
        self.assertEqual(Permutation.from_fundamental(bar), p)

    @given(permutations())
    def test_cycle_count_matches_sympy(self, word):
        p = Permutation(word)
        self.assertEqual(p.cyc(), SympyPermutation([v - 1 for v in word]).cycles)


def suite():
    return unittest.TestLoader().loadTestsFromTestCase(PermutationTestCase)


if __name__ == "__main__":
    unittest.main()
