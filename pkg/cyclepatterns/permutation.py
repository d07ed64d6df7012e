# -*- coding: utf-8 -*-
from __future__ import with_statement, print_function, absolute_import

import itertools
import re
from dataclasses import dataclass

from cyclepatterns.base import CombinatorialBase
from cyclepatterns.exceptions import InvalidInput

ASCENDING = "ascending"
DESCENDING = "descending"

_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_SEPARATOR_RE = re.compile(r"[\s,]+")


def descents(word):
    """Number of positions i with word[i] > word[i + 1]"""
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def left_to_right_minima(word):
    """Number of entries smaller than every entry to their left"""
    count = 0
    low = None
    for value in word:
        if low is None or value < low:
            low = value
            count += 1
    return count


def cycle_descents(cycle):
    """
    cdes of one cycle written min-first: 1 + des of its word.

    A fixed point has cdes 1 by convention.
    """
    if not cycle:
        return 0
    return 1 + descents(cycle)


def reduce_word(word):
    """
    Replace the i-th smallest entry of ``word`` by i.

    :word: sequence of distinct integers
    :return: the order-isomorphic permutation
    :rtype: Permutation
    """
    word = tuple(word)
    if len(set(word)) != len(word):
        raise InvalidInput("cannot reduce %r: entries are not distinct" % (word,))
    rank = dict((value, i + 1) for i, value in enumerate(sorted(word)))
    return Permutation(rank[value] for value in word)


@dataclass(frozen=True)
class Stats(object):
    """The four scalar statistics of a permutation"""
    des: int
    cdes: int
    cyc: int
    lrmin: int


class CycleForm(CombinatorialBase):
    """
    Cycle decomposition with every cycle rotated to start at its minimum.

    ``order`` only decides how the cycles follow each other: by increasing
    minima (canonical) or by decreasing minima (the order read by the
    fundamental bijection).
    """

    def __init__(self, cycles, order=ASCENDING):
        super(CycleForm, self).__init__()
        if order not in (ASCENDING, DESCENDING):
            raise InvalidInput("unknown cycle order %r" % (order,))
        cycles = tuple(tuple(int(v) for v in cycle) for cycle in cycles)
        for cycle in cycles:
            if not cycle:
                raise InvalidInput("empty cycle")
            if cycle[0] != min(cycle):
                raise InvalidInput("cycle %r does not start with its minimum" % (cycle,))
        minima = [cycle[0] for cycle in cycles]
        expected = sorted(minima, reverse=(order == DESCENDING))
        if minima != expected:
            raise InvalidInput("cycles are not in %s order of their minima" % order)
        entries = sorted(v for cycle in cycles for v in cycle)
        if entries != list(range(1, len(entries) + 1)):
            raise InvalidInput("cycle entries are not exactly 1..%d" % len(entries))
        self.id = (cycles, order)

    @classmethod
    def canonical(cls, cycles, order=ASCENDING):
        """Rotate each cycle min-first and sort the cycles by ``order``"""
        rotated = []
        for cycle in cycles:
            cycle = tuple(cycle)
            k = cycle.index(min(cycle))
            rotated.append(cycle[k:] + cycle[:k])
        rotated.sort(key=lambda c: c[0], reverse=(order == DESCENDING))
        return cls(rotated, order)

    @property
    def cycles(self):
        return self.id[0]

    @property
    def order(self):
        return self.id[1]

    @property
    def n(self):
        return sum(len(cycle) for cycle in self.cycles)

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def reorder(self, order):
        return CycleForm.canonical(self.cycles, order)

    def to_permutation(self):
        """Functional re-composition: a_t maps to a_(t+1 mod m)"""
        image = [0] * (self.n + 1)
        for cycle in self.cycles:
            for t, value in enumerate(cycle):
                image[value] = cycle[(t + 1) % len(cycle)]
        return Permutation(image[1:])

    def word(self):
        """The cycles concatenated with parentheses and commas erased"""
        return tuple(v for cycle in self.cycles for v in cycle)

    def __str__(self):
        return "".join("(%s)" % ",".join(str(v) for v in cycle) for cycle in self.cycles)

    def __repr__(self):
        return "<CycleForm %s>" % self


class Permutation(CombinatorialBase):
    """
    A permutation of 1..n in one-line notation.
    """

    def __init__(self, word):
        super(Permutation, self).__init__()
        try:
            word = tuple(int(v) for v in word)
        except (TypeError, ValueError):
            raise InvalidInput("%r is not a sequence of integers" % (word,))
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InvalidInput("%r is not a rearrangement of 1..%d" % (word, len(word)))
        self.id = word

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def all(cls, n):
        """Every permutation of length n, in lexicographic order"""
        for word in itertools.permutations(range(1, n + 1)):
            yield cls(word)

    @classmethod
    def parse(cls, text):
        """
        Parse one-line or cycle notation.

        Accepted forms are "1 3 2" (whitespace or commas), "132" (one digit
        per entry, n <= 9) and "(1,3)(2)". In cycle notation entries up to
        the largest one mentioned that appear in no cycle are fixed points.

        :text: the permutation as a string
        :rtype: Permutation
        """
        text = text.strip()
        if text.startswith("("):
            if _CYCLE_RE.sub("", text).strip():
                raise InvalidInput("malformed cycle notation %r" % text)
            cycles = []
            for body in _CYCLE_RE.findall(text):
                body = body.strip()
                if not body:
                    raise InvalidInput("empty cycle in %r" % text)
                cycles.append([_parse_int(v, text) for v in _SEPARATOR_RE.split(body)])
            return cls.from_cycles(cycles)
        if not text:
            return cls(())
        if _SEPARATOR_RE.search(text):
            return cls(_parse_int(v, text) for v in _SEPARATOR_RE.split(text))
        if not text.isdigit():
            raise InvalidInput("malformed permutation %r" % text)
        if len(text) > 9:
            raise InvalidInput("compact notation %r is ambiguous above n = 9; separate the entries" % text)
        return cls(int(c) for c in text)

    @classmethod
    def from_cycles(cls, cycles, n=None):
        """
        Build a permutation from cycles in any rotation and order.

        :cycles: iterable of cycles, each a sequence of entries
        :n: length; defaults to the largest entry
        """
        cycles = [tuple(c) for c in cycles]
        seen = [v for c in cycles for v in c]
        if len(set(seen)) != len(seen):
            raise InvalidInput("cycles %r repeat an entry" % (cycles,))
        if n is None:
            n = max(seen) if seen else 0
        if any(v < 1 or v > n for v in seen):
            raise InvalidInput("cycle entries must lie in 1..%d" % n)
        image = list(range(n + 1))
        for cycle in cycles:
            for t, value in enumerate(cycle):
                image[value] = cycle[(t + 1) % len(cycle)]
        return cls(image[1:])

    @classmethod
    def from_fundamental(cls, word):
        """
        Inverse of :meth:`fundamental_bijection`: cut ``word`` before each
        left-to-right minimum and read the pieces as cycles.
        """
        word = tuple(Permutation(word).word)
        cycles = []
        low = None
        for value in word:
            if low is None or value < low:
                low = value
                cycles.append([value])
            else:
                cycles[-1].append(value)
        return cls.from_cycles(cycles, len(word))

    @property
    def word(self):
        return self.id

    @property
    def n(self):
        return len(self.id)

    def __len__(self):
        return len(self.id)

    def __iter__(self):
        return iter(self.id)

    def __getitem__(self, index):
        return self.id[index]

    def __call__(self, i):
        """Image of i, 1-based"""
        return self.id[i - 1]

    def cycle_form(self, order=ASCENDING):
        """
        Canonical cycle decomposition.

        :order: ``ascending`` or ``descending`` minima
        :rtype: CycleForm
        """
        seen = [False] * (self.n + 1)
        cycles = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            value = self.id[start - 1]
            while value != start:
                cycle.append(value)
                seen[value] = True
                value = self.id[value - 1]
            cycles.append(tuple(cycle))
        if order == DESCENDING:
            cycles.reverse()
        return CycleForm(cycles, order)

    @property
    def cycles(self):
        return self.cycle_form().cycles

    def fundamental_bijection(self):
        """
        The permutation obtained by writing the cycles in decreasing order
        of their minima and erasing the parentheses.

        :rtype: Permutation
        """
        return Permutation(self.cycle_form(DESCENDING).word())

    def des(self):
        return descents(self.id)

    def cdes(self):
        return sum(cycle_descents(cycle) for cycle in self.cycles)

    def cyc(self):
        return len(self.cycles)

    def lrmin(self):
        return left_to_right_minima(self.id)

    def stats(self):
        """
        :rtype: Stats
        """
        cycles = self.cycles
        return Stats(des=self.des(),
                     cdes=sum(cycle_descents(c) for c in cycles),
                     cyc=len(cycles),
                     lrmin=self.lrmin())

    def reverse(self):
        return Permutation(self.id[::-1])

    def complement(self):
        return Permutation(self.n + 1 - v for v in self.id)

    def cycle_reverse(self):
        """Traverse every cycle backwards, keeping the minimum first"""
        return Permutation.from_cycles(((c[0],) + c[:0:-1] for c in self.cycles), self.n)

    def cycle_complement(self):
        """Relabel i as n + 1 - i inside the cycle structure"""
        n = self.n
        return Permutation.from_cycles((tuple(n + 1 - v for v in c) for c in self.cycles), n)

    def to_json(self):
        return list(self.id)

    @classmethod
    def from_json(cls, json_obj):
        return cls(json_obj)

    def __str__(self):
        if self.n <= 9:
            return "".join(str(v) for v in self.id)
        return " ".join(str(v) for v in self.id)

    def __repr__(self):
        return "<Permutation %s>" % " ".join(str(v) for v in self.id)


def _parse_int(token, text):
    try:
        return int(token)
    except ValueError:
        raise InvalidInput("malformed permutation %r" % text)


def cycle_decompose(p, order=ASCENDING):
    return p.cycle_form(order)


def fundamental_bijection(p):
    return p.fundamental_bijection()


def stats(p):
    return p.stats()


def reverse(p):
    return p.reverse()


def complement(p):
    return p.complement()


def cycle_reverse(p):
    return p.cycle_reverse()


def cycle_complement(p):
    return p.cycle_complement()
