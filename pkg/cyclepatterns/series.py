# -*- coding: utf-8 -*-
"""
Truncated exponential generating sequences.

An :class:`EgfSeq` of order N stores terms[n] = n! [t^n] F(t, x, y) for
n = 0..N. Every series handled here has integral n!-scaled coefficients,
so all arithmetic stays in the integers; rational intermediates are only
allowed on the way in (:meth:`EgfSeq.from_ordinary`) and must clear.
"""
from __future__ import with_statement, print_function, absolute_import

from fractions import Fraction
from math import comb, factorial

from cyclepatterns.base import CombinatorialBase
from cyclepatterns.exceptions import PreconditionError
from cyclepatterns.polynomial import XYPoly, YPoly


class EgfSeq(CombinatorialBase):
    """
    Class representing a truncated exponential generating sequence.
    """

    def __init__(self, terms):
        super(EgfSeq, self).__init__()
        polys = []
        for n, term in enumerate(terms):
            polys.append(XYPoly.coerce(term).integral(n))
        if not polys:
            raise PreconditionError("a series needs at least the constant term")
        self.id = tuple(polys)

    @classmethod
    def zero(cls, order):
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order):
        return cls([1] + [0] * order)

    @classmethod
    def exp_t(cls, order):
        """e^t: every term is 1"""
        return cls([1] * (order + 1))

    @classmethod
    def from_ordinary(cls, coeffs):
        """
        Build from ordinary coefficients [t^n]F, scaling by n!.

        :coeffs: sequence of ints, Fractions, YPoly or XYPoly (Fraction
                 coefficients allowed)
        :raises IntegralityError: if some n![t^n]F is not integral
        """
        return cls(XYPoly.coerce(c) * factorial(n) for n, c in enumerate(coeffs))

    @classmethod
    def from_ypolys(cls, polys):
        return cls(XYPoly.from_ypoly(p) if isinstance(p, YPoly) else p for p in polys)

    @property
    def terms(self):
        return self.id

    @property
    def order(self):
        return len(self.id) - 1

    def __len__(self):
        return len(self.id)

    def __iter__(self):
        return iter(self.id)

    def __getitem__(self, n):
        return self.id[n]

    def truncate(self, order):
        if order > self.order:
            raise PreconditionError("cannot extend a series of order %d to order %d" % (self.order, order))
        return EgfSeq(self.id[:order + 1])

    def __add__(self, other):
        _require_same_order(self, other)
        return EgfSeq(a + b for a, b in zip(self.id, other.id))

    def __sub__(self, other):
        _require_same_order(self, other)
        return EgfSeq(a - b for a, b in zip(self.id, other.id))

    def __neg__(self):
        return EgfSeq(-a for a in self.id)

    def __mul__(self, other):
        if isinstance(other, EgfSeq):
            return egf_mul(self, other)
        return self.scale(other)

    def scale(self, factor):
        """Multiply every term by a polynomial or integer that does not involve t"""
        return EgfSeq(a * factor for a in self.id)

    def specialize(self, x=None, y=None):
        return EgfSeq(a.specialize(x, y) for a in self.id)

    def scalars(self):
        """Terms evaluated at x = y = 1"""
        return [a.at_ones() for a in self.id]

    def y_parts(self):
        return [a.y_part() for a in self.id]

    def is_nonnegative(self):
        return all(a.is_nonnegative() for a in self.id)

    def to_json(self):
        return [{"n": n, "poly": a.to_json()} for n, a in enumerate(self.id)]

    @classmethod
    def from_json(cls, json_obj):
        ordered = sorted(json_obj, key=lambda entry: entry["n"])
        if [entry["n"] for entry in ordered] != list(range(len(ordered))):
            raise PreconditionError("series json must list every n from 0")
        return cls(XYPoly.from_json(entry["poly"]) for entry in ordered)

    def __repr__(self):
        return "<EgfSeq order=%d>" % self.order


def _require_same_order(a, b):
    if a.order != b.order:
        raise PreconditionError("truncation orders differ: %d and %d" % (a.order, b.order))


def egf_mul(a, b):
    """
    Product in exponential convention: c[n] = sum_k binom(n, k) a[k] b[n-k].

    :rtype: EgfSeq
    """
    _require_same_order(a, b)
    out = []
    for n in range(a.order + 1):
        term = XYPoly()
        for k in range(n + 1):
            if a[k].is_zero() or b[n - k].is_zero():
                continue
            term = term + a[k] * b[n - k] * comb(n, k)
        out.append(term)
    return EgfSeq(out)


def egf_exp(a, x_marker=False):
    """
    exp(A), or exp(x A) when ``x_marker`` is set, for A with zero constant
    term. With the marker the coefficient of x^k collects the products of
    k factors from A, which is the exponential formula refined by the
    number of cycles.

    Uses B[0] = 1 and B[n] = sum_(k=1..n) binom(n-1, k-1) A[k] B[n-k].
    """
    if not a[0].is_zero():
        raise PreconditionError("exp needs a zero constant term, got %s" % a[0])
    factors = [term.mul_x() if x_marker else term for term in a]
    out = [XYPoly.one()]
    for n in range(1, a.order + 1):
        term = XYPoly()
        for k in range(1, n + 1):
            if factors[k].is_zero():
                continue
            term = term + factors[k] * out[n - k] * comb(n - 1, k - 1)
        out.append(term)
    return EgfSeq(out)


def egf_log(a):
    """
    Inverse of :func:`egf_exp` without marker: L[n] = A[n] - sum_(k=1..n-1)
    binom(n-1, k-1) L[k] A[n-k].
    """
    if not a[0].is_constant(1):
        raise PreconditionError("log needs constant term 1, got %s" % a[0])
    out = [XYPoly()]
    for n in range(1, a.order + 1):
        term = a[n]
        for k in range(1, n):
            if out[k].is_zero() or a[n - k].is_zero():
                continue
            term = term - out[k] * a[n - k] * comb(n - 1, k - 1)
        out.append(term)
    return EgfSeq(out)


def egf_reciprocal(a):
    """
    1/A for A whose constant term is 1 or -1.

    B[0] = 1/A[0] and A[0] B[n] = -sum_(k=1..n) binom(n, k) A[k] B[n-k].
    """
    if a[0].is_constant(1):
        unit = 1
    elif a[0].is_constant(-1):
        unit = -1
    else:
        raise PreconditionError("reciprocal needs constant term +1 or -1, got %s" % a[0])
    out = [XYPoly.constant(unit)]
    for n in range(1, a.order + 1):
        term = XYPoly()
        for k in range(1, n + 1):
            if a[k].is_zero():
                continue
            term = term + a[k] * out[n - k] * comb(n, k)
        out.append(term * -unit)
    return EgfSeq(out)


def egf_power_x(a):
    """
    A^x := exp(x log A) for A with constant term 1.
    """
    return egf_exp(egf_log(a), x_marker=True)


def egf_substitute_ty(a):
    """t -> t y: terms[n] is multiplied by y^n"""
    return EgfSeq(term.mul_y(n) for n, term in enumerate(a))


def ypoly_mirror(p, n):
    """y^n p(1/y); requires deg p <= n"""
    return p.mirror(n)


def egf_integrate(a):
    """
    Integral from 0 to t, keeping the order: B[0] = 0, B[n] = A[n-1].
    """
    return EgfSeq([XYPoly()] + list(a.terms[:-1]))


def reflect_cycle_series(cycles):
    """
    Cycle-level reverse/complement transform: L[1] stays y and
    L[m] -> y^m L[m](1/y) for m >= 2.

    :cycles: y-only EgfSeq with zero constant term
    """
    polys = cycles.y_parts()
    if not polys[0].is_zero():
        raise PreconditionError("a cycle series has no constant term")
    out = [YPoly()]
    for m in range(1, len(polys)):
        if m == 1:
            out.append(YPoly.monomial(1))
        else:
            out.append(ypoly_mirror(polys[m], m))
    return EgfSeq.from_ypolys(out)


def rational_coeff_extract(numer, denom, order):
    """
    Ordinary power series coefficients of numer/denom up to t^order.

    :numer: coefficients in t, each a YPoly or int
    :denom: coefficients in t; the constant term must be a nonzero
            integer dividing every quotient coefficient
    :return: list of YPoly, entry n being [t^n] numer/denom
    """
    numer = [_as_ypoly(c) for c in numer]
    denom = [_as_ypoly(c) for c in denom]
    if not denom or denom[0].is_zero():
        raise PreconditionError("denominator has zero constant term")
    if denom[0].degree > 0:
        raise PreconditionError("denominator constant term %s is not a constant" % denom[0])
    lead = denom[0][0]
    out = []
    for n in range(order + 1):
        acc = numer[n] if n < len(numer) else YPoly()
        for k in range(1, min(n, len(denom) - 1) + 1):
            acc = acc - denom[k] * out[n - k]
        out.append(acc.exact_div(lead))
    return out


def _as_ypoly(c):
    if isinstance(c, YPoly):
        return c
    if isinstance(c, Fraction):
        raise PreconditionError("rational coefficients are not accepted here")
    return YPoly.constant(c)
