# -*- coding: utf-8 -*-
"""
Integer recurrences: the zero/one word counts R(n, i, j), tangent
numbers, the 132 cycle recursion and the U-recurrences whose reciprocal
x-th power is a no-cycle-match generating function.
"""
from __future__ import with_statement, print_function, absolute_import

import logging
from math import comb

from sympy import catalan

from cyclepatterns.base import CombinatorialBase
from cyclepatterns.enumeration import leading_one_table
from cyclepatterns.exceptions import InvalidInput, PreconditionError
from cyclepatterns.pattern import Pattern
from cyclepatterns.polynomial import YPoly
from cyclepatterns.series import EgfSeq, egf_exp, egf_power_x, egf_reciprocal

_logger = logging.getLogger(__name__)

STATEMENT = "statement"
PROOF = "proof"
EXAMPLE = "example"
UREC_VARIANTS = (STATEMENT, PROOF, EXAMPLE)

# seeds U_0 .. U_(s-1) needed before the 1324 / 1423 recurrences take over
SEED_LENGTHS = {"1324": 2, "1423": 2}


class RZeroOneDP(object):
    """
    R(n, i, j): words with i zeros and n - i ones and no run of j zeros.

    A word is either all zeros or starts with r < j zeros followed by a
    one, so R(n, i, j) = [n = i < j] + sum_r R(n - r - 1, i - r, j).
    """

    def __init__(self, j):
        if j < 1:
            raise InvalidInput("R(n, i, j) needs j >= 1, got %d" % j)
        self.j = j
        self._memo = {}

    def __call__(self, n, i):
        if n < 0 or i < 0 or i > n:
            return 0
        if n == 0:
            return 1
        key = (n, i)
        if key not in self._memo:
            total = 1 if (n == i and i < self.j) else 0
            if n > i:
                for r in range(min(self.j - 1, i) + 1):
                    total += self(n - r - 1, i - r)
            self._memo[key] = total
        return self._memo[key]


def r_count(n, i, j):
    """
    :rtype: int
    """
    return RZeroOneDP(j)(n, i)


def r_counts_by_words(n, j):
    """
    [R(n, 0, j), ..., R(n, n, j)] by listing the bit strings; the
    reference for :class:`RZeroOneDP`.
    """
    counts = [0] * (n + 1)
    run = "0" * j
    for bits in range(1 << n):
        word = format(bits, "0%db" % n) if n else ""
        if run not in word:
            counts[word.count("0")] += 1
    return counts


def zigzag_numbers(count):
    """
    E_0 .. E_(count-1), counts of alternating permutations, from the
    boustrophedon triangle.
    """
    out = [1]
    row = [1]
    for n in range(1, count):
        nxt = [0]
        for k in range(1, n + 1):
            nxt.append(nxt[k - 1] + row[n - k])
        row = nxt
        out.append(row[n])
    return out[:count]


def tangent_numbers(count):
    """
    Tangent numbers E_1, E_3, ..., E_(2 count - 1): 1, 2, 16, 272, 7936, ...
    """
    zigzag = zigzag_numbers(2 * count)
    return [zigzag[2 * k + 1] for k in range(count)]


def a_recursion_132(order):
    """
    A_n(y) for 132: A_1 = A_2 = A_3 = y and, for n >= 4,
    A_n = A_(n-1) + sum_(k=4..n) binom(n-2, k-2) A_(k-1) A_(n-k+1).

    :return: list of YPoly indexed 0..order (entry 0 is zero)
    """
    y = YPoly.monomial(1)
    out = [YPoly()]
    for n in range(1, order + 1):
        if n <= 3:
            out.append(y)
            continue
        term = out[n - 1]
        for k in range(4, n + 1):
            term = term + out[k - 1] * out[n - k + 1] * comb(n - 2, k - 2)
        out.append(term)
    return out


class UPolySeq(CombinatorialBase):
    """
    U_0(y), ..., U_N(y): the coefficients of U(t, y) = 1/NCM(t, 1, y).
    """

    def __init__(self, pattern, polys, j=None, p=None):
        super(UPolySeq, self).__init__()
        self.pattern = pattern if isinstance(pattern, Pattern) else Pattern(pattern)
        polys = tuple(polys)
        if polys and polys[0] != YPoly.constant(1):
            raise PreconditionError("U_0 must be 1, got %s" % polys[0])
        if len(polys) > 1 and polys[1] != YPoly.monomial(1, -1):
            raise PreconditionError("U_1 must be -y, got %s" % polys[1])
        self.polys = polys
        self.j = j
        self.p = p
        self.id = (self.pattern.word, polys)

    @property
    def des(self):
        return self.pattern.des

    @property
    def order(self):
        return len(self.polys) - 1

    def __getitem__(self, n):
        return self.polys[n]

    def __len__(self):
        return len(self.polys)

    def scalars(self):
        return [u(1) for u in self.polys]

    def to_series(self):
        return EgfSeq.from_ypolys(self.polys)

    def ncm_series(self):
        """NCM(t, x, y) = (1/U(t, y))^x"""
        return egf_power_x(egf_reciprocal(self.to_series()))

    def __repr__(self):
        return "<UPolySeq %s order=%d>" % (self.pattern, self.order)


def u_seeds(pattern, count, config=None, jobs=None):
    """
    U_0 .. U_(count-1) as e^(-A), A being the oracle's table of
    permutations that start with 1 and have no match of ``pattern``.

    :rtype: list of YPoly
    """
    pattern = pattern if isinstance(pattern, Pattern) else Pattern(pattern)
    if count < 1:
        return []
    table = leading_one_table(pattern, count - 1, config, jobs)
    return egf_exp(-table.to_series()).y_parts()


def urec_shape(pattern):
    """
    (j, p) for tau = 1 2 ... (j-1) gamma j with gamma a permutation of
    j+1 .. j+p, j >= 3 and p >= 1.
    """
    pattern = pattern if isinstance(pattern, Pattern) else Pattern(pattern)
    w = pattern.word
    j = w[-1]
    p = len(w) - j
    if j < 3 or p < 1 or tuple(w[:j - 1]) != tuple(range(1, j)) \
            or sorted(w[j - 1:-1]) != list(range(j + 1, j + p + 1)):
        raise InvalidInput("%s is not of the form 1 2 ... (j-1) gamma j" % pattern)
    return j, p


def u_sequence(pattern, order, variant=STATEMENT, config=None, jobs=None):
    """
    U_0 .. U_order for tau = 1 2 ... (j-1) gamma j: seeds U_0 .. U_(j+p-1)
    from the oracle, then

        U_(n+j) = (1-y) U_(n+j-1) - c(n) U_(n-p+1),  n >= p

    with c(n) = y^des(tau) binom(n, p) (``statement``),
    -y^des(tau) binom(n, p) (``proof``) or y^des(tau) (``example``).

    :rtype: UPolySeq
    """
    pattern = pattern if isinstance(pattern, Pattern) else Pattern(pattern)
    if variant not in UREC_VARIANTS:
        raise InvalidInput("unknown recurrence variant %r" % (variant,))
    j, p = urec_shape(pattern)
    marker = YPoly.monomial(pattern.des)
    one_minus_y = YPoly([1, -1])
    polys = u_seeds(pattern, min(order + 1, j + p), config, jobs)
    _logger.debug("%s: seeds %s", pattern, ", ".join(str(u) for u in polys))
    for m in range(j + p, order + 1):
        n = m - j
        if variant == STATEMENT:
            coeff = marker * comb(n, p)
        elif variant == PROOF:
            coeff = marker * -comb(n, p)
        else:
            coeff = marker
        polys.append(one_minus_y * polys[m - 1] - coeff * polys[n - p + 1])
    return UPolySeq(pattern, polys, j, p)


def u_recurrence_txy(pattern, order, variant=STATEMENT, config=None, jobs=None):
    """
    NCM(t, x, y) for tau = 1 2 ... (j-1) gamma j through the U-recurrence.

    :rtype: EgfSeq
    """
    return u_sequence(pattern, order, variant, config, jobs).ncm_series()


def u_1324_1423_sequence(which, order, seed_length=None, config=None, jobs=None):
    """
    U_n = (1-y) U_(n-1) + sum_(k=2..floor(n/2)) (-y)^(k-1) c(n, k) U_(n-2k+1)

    with c(n, k) the Catalan number C_(k-1) for 1324 and binom(n-k-1, k-1)
    for 1423, applied from n = seed_length on.

    :rtype: UPolySeq
    """
    which = str(which)
    if which not in SEED_LENGTHS:
        raise InvalidInput("the recurrence covers 1324 and 1423, not %s" % which)
    if seed_length is None:
        seed_length = SEED_LENGTHS[which]
    pattern = Pattern(which)
    one_minus_y = YPoly([1, -1])
    polys = u_seeds(pattern, min(order + 1, max(seed_length, 1)), config, jobs)
    for n in range(len(polys), order + 1):
        term = one_minus_y * polys[n - 1]
        for k in range(2, n // 2 + 1):
            if which == "1324":
                c = int(catalan(k - 1))
            else:
                c = comb(n - k - 1, k - 1)
            term = term + YPoly.monomial(k - 1, (-1) ** (k - 1)) * polys[n - 2 * k + 1] * c
        polys.append(term)
    return UPolySeq(pattern, polys)


def u_1324_1423(which, order, seed_length=None, config=None, jobs=None):
    """
    :return: the U sequence and NCM(t, x, y) for 1324 or 1423
    :rtype: tuple of (UPolySeq, EgfSeq)
    """
    useq = u_1324_1423_sequence(which, order, seed_length, config, jobs)
    return useq, useq.ncm_series()
