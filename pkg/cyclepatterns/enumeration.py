# -*- coding: utf-8 -*-
"""
Brute-force oracle.

Every permutation of S_n is visited through its image under the
fundamental bijection: a one-line word w is cut before each
left-to-right minimum and the pieces are the cycles of the permutation.
The cycles are then read with wraparound, so cyc = lrmin(w) and
cdes = 1 + des(w). Linear modes walk w as the permutation itself.

The walk fixes a prefix per partition; partitions are independent and
are merged by polynomial addition in a fixed order.
"""
from __future__ import with_statement, print_function, absolute_import

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from cyclepatterns.base import CombinatorialBase
from cyclepatterns.exceptions import InvalidInput, ResourceLimitExceeded
from cyclepatterns.pattern import PatternSet, cycle_has_occurrence, order_type
from cyclepatterns.polynomial import XYPoly, YPoly
from cyclepatterns.series import EgfSeq
from cyclepatterns.util import Config

_logger = logging.getLogger(__name__)

CYCLE_AVOID = "ca"
NO_CYCLE_MATCH = "ncm"
NO_MATCH = "nm"
AVOID = "a"
MODES = (CYCLE_AVOID, NO_CYCLE_MATCH, NO_MATCH, AVOID)
CYCLE_MODES = (CYCLE_AVOID, NO_CYCLE_MATCH)
LEADING_ONE = "lead1"


class _Walk(object):
    """Depth-first walk over one-line words with prefix pruning"""

    def __init__(self, n, patterns, mode):
        self.n = n
        self.patterns = patterns
        self.j = patterns.j
        self.cyclic = mode in CYCLE_MODES
        self.avoid = mode in (CYCLE_AVOID, AVOID)
        self.word = []
        self.used = [False] * (n + 1)
        self.counts = {}
        self._verdicts = {}

    def run(self, prefix):
        if self.n == 0:
            return {(0, 0): 1}
        # state: (start of the current piece, des, lrmin, current minimum)
        state = (0, 0, 0, self.n + 1)
        for v in prefix:
            state = self._push(v, state)
            if state is None:
                return self.counts
        self._descend(state)
        return self.counts

    def _push(self, v, state):
        state = self._extend(v, state)
        if state is None:
            return None
        self.word.append(v)
        self.used[v] = True
        if self._blocked(state[0]):
            return None
        return state

    def _extend(self, v, state):
        seg, des, lrmin, low = state
        word = self.word
        if word and word[-1] > v:
            des += 1
        if v < low:
            if self.cyclic and word and not self._closes(word[seg:]):
                return None
            return len(word), des, lrmin + 1, v
        return seg, des, lrmin, low

    def _blocked(self, seg):
        """True if the entry just appended ends a forbidden match or occurrence"""
        word = self.word
        j = self.j
        lo = seg if self.cyclic else 0
        end = len(word)
        if end - lo < j:
            return False
        if not self.avoid:
            return self.patterns.matches(word[end - j:])
        last = (word[-1],)
        for picks in combinations(word[lo:end - 1], j - 1):
            if self.patterns.matches(picks + last):
                return True
        return False

    def _closes(self, cycle):
        """True if a finished cycle has no wrapped match (or no cycle occurrence)"""
        m = len(cycle)
        j = self.j
        if m < j:
            return True
        if not self.avoid:
            for r in range(m - j + 1, m):
                if self.patterns.matches(cycle[r:] + cycle[:r + j - m]):
                    return False
            return True
        key = order_type(cycle)
        verdict = self._verdicts.get(key)
        if verdict is None:
            verdict = not cycle_has_occurrence(cycle, self.patterns)
            self._verdicts[key] = verdict
        return verdict

    def _descend(self, state):
        word, used = self.word, self.used
        if len(word) == self.n:
            seg, des, lrmin, _low = state
            if self.cyclic and not self._closes(word[seg:]):
                return
            key = (lrmin, des + 1)
            self.counts[key] = self.counts.get(key, 0) + 1
            return
        for v in range(1, self.n + 1):
            if used[v]:
                continue
            nxt = self._extend(v, state)
            if nxt is None:
                continue
            word.append(v)
            used[v] = True
            if not self._blocked(nxt[0]):
                self._descend(nxt)
            word.pop()
            used[v] = False


def _walk_partition(task):
    n, patterns, mode, prefix = task
    return _Walk(n, patterns, mode).run(prefix)


def _tally(n, patterns, mode, prefixes, jobs):
    tasks = [(n, patterns, mode, prefix) for prefix in prefixes]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_walk_partition, tasks))
    else:
        results = [_walk_partition(task) for task in tasks]
    total = {}
    for counts in results:
        for key, value in sorted(counts.items()):
            total[key] = total.get(key, 0) + value
    return XYPoly(total)


def _check_mode(mode, allowed):
    if mode not in allowed:
        raise InvalidInput("unknown mode %r (expected one of: %s)" % (mode, ", ".join(allowed)))


def _check_size(what, n):
    if n < 0:
        raise InvalidInput("%s must be nonnegative, got %d" % (what, n))


def _resolve(config, jobs):
    config = config or Config()
    return config, (jobs if jobs is not None else config.jobs)


def _leading_prefixes(n):
    if n == 1:
        return [(1,)]
    return [(1, v) for v in range(2, n + 1)]


def enumerate_refined(n, patterns, mode, config=None, jobs=None):
    """
    Refined count over S_n.

    Cycle modes (``ca``, ``ncm``) sum x^cyc y^cdes over permutations with
    no cycle occurrence / no cycle match; linear modes (``a``, ``nm``) sum
    x^lrmin y^(1+des) over permutations with no occurrence / no match.

    :n: permutation length
    :patterns: PatternSet, Pattern or pattern string
    :mode: one of ``ca``, ``ncm``, ``nm``, ``a``
    :rtype: XYPoly
    """
    _check_mode(mode, MODES)
    patterns = PatternSet.coerce(patterns)
    _check_size("permutation length", n)
    config, jobs = _resolve(config, jobs)
    if n > config.max_n:
        raise ResourceLimitExceeded("permutation length", n, config.max_n)
    if n == 0:
        return XYPoly.one()
    _logger.debug("enumerating %s over S_%d for %s", mode, n, patterns)
    return _tally(n, patterns, mode, [(v,) for v in range(1, n + 1)], jobs)


def enumerate_cycles(m, patterns, mode, config=None, jobs=None):
    """
    Sum of y^cdes(C) over the m-cycles C that cycle-avoid (``ca``) or have
    no cycle match (``ncm``). The cycles are the words 1 w, w running over
    the permutations of 2..m.

    :rtype: YPoly
    """
    _check_mode(mode, CYCLE_MODES)
    patterns = PatternSet.coerce(patterns)
    _check_size("cycle length", m)
    config, jobs = _resolve(config, jobs)
    if m > config.max_cycle:
        raise ResourceLimitExceeded("cycle length", m, config.max_cycle)
    if m == 0:
        return YPoly()
    return _tally(m, patterns, mode, _leading_prefixes(m), jobs).x_coefficient(1)


def enumerate_leading_one(n, patterns, config=None, jobs=None):
    """
    Sum of y^(1+des) over the permutations of S_n that start with 1 and
    have no linear match.

    :rtype: YPoly
    """
    patterns = PatternSet.coerce(patterns)
    _check_size("permutation length", n)
    config, jobs = _resolve(config, jobs)
    if n > config.max_cycle:
        raise ResourceLimitExceeded("permutation length", n, config.max_cycle)
    if n == 0:
        return YPoly()
    return _tally(n, patterns, NO_MATCH, _leading_prefixes(n), jobs).x_coefficient(1)


class RefinedTable(CombinatorialBase):
    """
    Refined counts for n = 0..max_n; entry n is an XYPoly.
    """

    def __init__(self, patterns, mode, polys):
        super(RefinedTable, self).__init__()
        self.patterns = PatternSet.coerce(patterns)
        self.mode = mode
        self.polys = tuple(polys)
        self.id = (self.patterns.id, mode, self.polys)

    @property
    def max_n(self):
        return len(self.polys) - 1

    def __getitem__(self, n):
        return self.polys[n]

    def __len__(self):
        return len(self.polys)

    def scalars(self):
        return [p.at_ones() for p in self.polys]

    def to_series(self):
        return EgfSeq(self.polys)

    def to_json(self):
        return {"patterns": str(self.patterns), "mode": self.mode,
                "table": [{"n": n, "count": str(p.at_ones()), "poly": p.to_json()}
                          for n, p in enumerate(self.polys)]}

    def to_csv(self):
        return "n,count\n" + "".join("%d,%d\n" % (n, c) for n, c in enumerate(self.scalars()))

    def __repr__(self):
        return "<RefinedTable %s %s n<=%d>" % (self.mode, self.patterns, self.max_n)


class CycleTable(CombinatorialBase):
    """
    Cycle-level counts for m = 0..max_m; entry m is a YPoly (zero at m = 0).
    """

    def __init__(self, patterns, mode, polys):
        super(CycleTable, self).__init__()
        self.patterns = PatternSet.coerce(patterns)
        self.mode = mode
        self.polys = tuple(polys)
        self.id = (self.patterns.id, mode, self.polys)

    @property
    def max_m(self):
        return len(self.polys) - 1

    def __getitem__(self, m):
        return self.polys[m]

    def __len__(self):
        return len(self.polys)

    def scalars(self):
        return [p(1) for p in self.polys]

    def to_series(self):
        return EgfSeq.from_ypolys(self.polys)

    def to_json(self):
        return {"patterns": str(self.patterns), "mode": self.mode,
                "table": [{"m": m, "count": str(p(1)), "poly": p.to_json()}
                          for m, p in enumerate(self.polys)]}

    def to_csv(self):
        return "m,count\n" + "".join("%d,%d\n" % (m, c) for m, c in enumerate(self.scalars()))

    def __repr__(self):
        return "<CycleTable %s %s m<=%d>" % (self.mode, self.patterns, self.max_m)


def refined_table(patterns, mode, max_n, config=None, jobs=None):
    """
    :rtype: RefinedTable
    """
    patterns = PatternSet.coerce(patterns)
    _check_size("max_n", max_n)
    polys = [enumerate_refined(n, patterns, mode, config, jobs) for n in range(max_n + 1)]
    _logger.info("%s table for %s up to n=%d: %s", mode, patterns, max_n,
                 " ".join(str(p.at_ones()) for p in polys[1:]))
    return RefinedTable(patterns, mode, polys)


def cycle_table(patterns, mode, max_m, config=None, jobs=None):
    """
    :rtype: CycleTable
    """
    patterns = PatternSet.coerce(patterns)
    _check_size("max_m", max_m)
    polys = [enumerate_cycles(m, patterns, mode, config, jobs) for m in range(max_m + 1)]
    _logger.info("%s cycle table for %s up to m=%d: %s", mode, patterns, max_m,
                 " ".join(str(p(1)) for p in polys[1:]))
    return CycleTable(patterns, mode, polys)


def leading_one_table(patterns, max_n, config=None, jobs=None):
    """
    The table of :func:`enumerate_leading_one` for n = 0..max_n. For a
    pattern starting with 1 it equals the ``ncm`` cycle table.

    :rtype: CycleTable
    """
    patterns = PatternSet.coerce(patterns)
    _check_size("max_n", max_n)
    polys = [enumerate_leading_one(n, patterns, config, jobs) for n in range(max_n + 1)]
    return CycleTable(patterns, LEADING_ONE, polys)


def count_alternating(n):
    """
    Number of permutations s_1 < s_2 > s_3 < ... of length n, by search.
    """
    if n <= 1:
        return 1
    used = [False] * (n + 1)

    def walk(length, last):
        if length == n:
            return 1
        rising = length % 2 == 1
        total = 0
        for v in range(1, n + 1):
            if used[v]:
                continue
            if length and ((rising and v < last) or (not rising and v > last)):
                continue
            used[v] = True
            total += walk(length + 1, v)
            used[v] = False
        return total

    return walk(0, 0)
