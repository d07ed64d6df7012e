# -*- coding: utf-8 -*-
from __future__ import with_statement, print_function, absolute_import

from itertools import combinations

from cyclepatterns.base import CombinatorialBase
from cyclepatterns.exceptions import InvalidInput
from cyclepatterns.permutation import Permutation, descents


def order_type(values):
    """
    Positions of ``values`` listed by increasing value. Two words of
    distinct entries share an order type iff they reduce to the same
    permutation.
    """
    return tuple(sorted(range(len(values)), key=values.__getitem__))


class Pattern(CombinatorialBase):
    """
    Class representing a pattern tau in S_j, j >= 1.
    """

    def __init__(self, perm):
        super(Pattern, self).__init__()
        if isinstance(perm, str):
            perm = Permutation.parse(perm)
        elif not isinstance(perm, Permutation):
            perm = Permutation(perm)
        if perm.n < 1:
            raise InvalidInput("a pattern needs at least one entry")
        self.perm = perm
        self.id = perm.word
        self.key = order_type(perm.word)

    @classmethod
    def parse(cls, text):
        return cls(Permutation.parse(text))

    @property
    def word(self):
        return self.id

    @property
    def j(self):
        return len(self.id)

    @property
    def des(self):
        return descents(self.id)

    @property
    def starts_with_one(self):
        return self.id[0] == 1

    def reverse(self):
        return Pattern(self.perm.reverse())

    def complement(self):
        return Pattern(self.perm.complement())

    def cyclic_rotations(self):
        """Every rotation tau_i ... tau_j tau_1 ... tau_(i-1), starting with tau itself"""
        w = self.id
        return [Pattern(w[i:] + w[:i]) for i in range(len(w))]

    def __len__(self):
        return len(self.id)

    def __str__(self):
        return str(self.perm)

    def __repr__(self):
        return "<Pattern %s>" % self


class PatternSet(CombinatorialBase):
    """
    A nonempty set of patterns of one common length j.

    A window matches the set when it reduces to any member; a window
    counts once however many members it matches.
    """

    def __init__(self, patterns):
        super(PatternSet, self).__init__()
        members = [p if isinstance(p, Pattern) else Pattern(p) for p in patterns]
        if not members:
            raise InvalidInput("a pattern set needs at least one pattern")
        lengths = set(p.j for p in members)
        if len(lengths) > 1:
            raise InvalidInput("mixed-length pattern set %s; all patterns must have the same length"
                               % ",".join(str(p) for p in members))
        words = [p.word for p in members]
        if len(set(words)) != len(words):
            raise InvalidInput("pattern set %s repeats a pattern" % ",".join(str(p) for p in members))
        members.sort(key=lambda p: p.word)
        self.patterns = tuple(members)
        self.id = tuple(p.word for p in members)
        self.keys = frozenset(p.key for p in members)

    @classmethod
    def parse(cls, text):
        """
        :text: comma-separated patterns, e.g. "123,321"
        """
        tokens = [t.strip() for t in text.split(",")]
        if not text.strip() or any(not t for t in tokens):
            raise InvalidInput("malformed pattern set %r" % text)
        return cls(Pattern.parse(t) for t in tokens)

    @classmethod
    def coerce(cls, obj):
        """Accept a PatternSet, a Pattern, a string or an iterable of patterns"""
        if isinstance(obj, PatternSet):
            return obj
        if isinstance(obj, Pattern):
            return cls([obj])
        if isinstance(obj, str):
            return cls.parse(obj)
        return cls(obj)

    @property
    def j(self):
        return self.patterns[0].j

    def matches(self, values):
        """True if the window ``values`` reduces to a member of the set"""
        return order_type(values) in self.keys

    def reverse(self):
        return PatternSet(p.reverse() for p in self.patterns)

    def complement(self):
        return PatternSet(p.complement() for p in self.patterns)

    def __len__(self):
        return len(self.patterns)

    def __iter__(self):
        return iter(self.patterns)

    def __contains__(self, pattern):
        if not isinstance(pattern, Pattern):
            pattern = Pattern(pattern)
        return pattern.word in self.id

    def __str__(self):
        return ",".join(str(p) for p in self.patterns)

    def __repr__(self):
        return "<PatternSet %s>" % self


def cycle_match_count(cycle, patterns):
    """
    Windows of one cycle, read with wraparound, that reduce into the set.

    A cycle shorter than the patterns has no windows.
    """
    j = patterns.j
    m = len(cycle)
    if m < j:
        return 0
    doubled = tuple(cycle) + tuple(cycle[:j - 1])
    return sum(1 for r in range(m) if patterns.matches(doubled[r:r + j]))


def cycle_has_occurrence(cycle, patterns):
    """
    True if some anchor c_r and offsets 1 <= i_1 < ... < i_(j-1) <= m - 1
    pick entries of the cycle that reduce into the set.
    """
    j = patterns.j
    m = len(cycle)
    if m < j:
        return False
    cycle = tuple(cycle)
    for r in range(m):
        rotated = cycle[r:] + cycle[:r]
        anchor = (rotated[0],)
        for rest in combinations(rotated[1:], j - 1):
            if patterns.matches(anchor + rest):
                return True
    return False


def count_linear_matches(p, patterns):
    """
    Number of consecutive windows of ``p`` that reduce into the set.

    :p: Permutation
    :patterns: PatternSet, Pattern or pattern string
    :rtype: int
    """
    patterns = PatternSet.coerce(patterns)
    j = patterns.j
    w = p.word
    return sum(1 for i in range(len(w) - j + 1) if patterns.matches(w[i:i + j]))


def has_linear_occurrence(p, patterns):
    """True if some (not necessarily consecutive) subsequence reduces into the set"""
    patterns = PatternSet.coerce(patterns)
    return any(patterns.matches(sub) for sub in combinations(p.word, patterns.j))


def count_cycle_matches(p, patterns):
    """
    Cycle matches summed over the cycles of ``p``.

    :rtype: int
    """
    patterns = PatternSet.coerce(patterns)
    return sum(cycle_match_count(cycle, patterns) for cycle in p.cycles)


def has_cycle_occurrence(p, patterns):
    patterns = PatternSet.coerce(patterns)
    return any(cycle_has_occurrence(cycle, patterns) for cycle in p.cycles)
