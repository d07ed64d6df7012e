# -*- coding: utf-8 -*-
from __future__ import with_statement, print_function, absolute_import

import numbers
from fractions import Fraction

import sympy
from sympy.parsing.sympy_parser import (convert_xor, implicit_multiplication_application, parse_expr,
                                        standard_transformations)

from cyclepatterns.base import CombinatorialBase
from cyclepatterns.exceptions import IntegralityError, PreconditionError

X, Y = sympy.symbols("x y")

_TRANSFORMS = standard_transformations + (convert_xor, implicit_multiplication_application)


def _poly_terms(text):
    """(x-degree, y-degree) -> coefficient for a printed polynomial such as "x y+3 x^2 y^2"."""
    try:
        expr = parse_expr(text, local_dict={"x": X, "y": Y}, transformations=_TRANSFORMS)
        poly = sympy.Poly(expr, X, Y)
    except (SyntaxError, TypeError, sympy.PolynomialError) as e:
        raise PreconditionError("cannot read polynomial %r: %s" % (text, e))
    terms = {}
    for (xd, yd), c in poly.terms():
        if not c.is_Integer:
            raise IntegralityError("polynomial %r has the coefficient %s" % (text, c))
        terms[(int(xd), int(yd))] = int(c)
    return terms


def _clear(value, what):
    """Turn an integral Fraction back into an int; anything else is an error"""
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise IntegralityError("%s has the non-integral coefficient %s" % (what, value))
        return value.numerator
    return value


class YPoly(CombinatorialBase):
    """
    Polynomial in y with integer coefficients, stored densely by degree
    with no trailing zeros.
    """

    def __init__(self, coeffs=()):
        super(YPoly, self).__init__()
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.id = tuple(coeffs)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self):
        return self.id

    @property
    def degree(self):
        """Degree, -1 for the zero polynomial"""
        return len(self.id) - 1

    def is_zero(self):
        return not self.id

    def __getitem__(self, k):
        if 0 <= k < len(self.id):
            return self.id[k]
        return 0

    def __call__(self, y):
        value = 0
        for c in reversed(self.id):
            value = value * y + c
        return value

    def __add__(self, other):
        if isinstance(other, numbers.Integral):
            other = YPoly.constant(other)
        if not isinstance(other, YPoly):
            return NotImplemented
        size = max(len(self.id), len(other.id))
        return YPoly(self[k] + other[k] for k in range(size))

    __radd__ = __add__

    def __neg__(self):
        return YPoly(-c for c in self.id)

    def __sub__(self, other):
        if isinstance(other, numbers.Integral):
            other = YPoly.constant(other)
        if not isinstance(other, YPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Integral):
            return YPoly(c * other for c in self.id)
        if not isinstance(other, YPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return YPoly()
        out = [0] * (len(self.id) + len(other.id) - 1)
        for a, ca in enumerate(self.id):
            if ca:
                for b, cb in enumerate(other.id):
                    out[a + b] += ca * cb
        return YPoly(out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by y^k"""
        if self.is_zero():
            return self
        return YPoly([0] * k + list(self.id))

    def exact_div(self, c):
        """Divide every coefficient by the integer c, which must divide them all"""
        if c == 0:
            raise PreconditionError("division of a polynomial by zero")
        if any(v % c for v in self.id):
            raise IntegralityError("%s is not divisible by %d" % (self, c))
        return YPoly(v // c for v in self.id)

    def mirror(self, n):
        """
        y^n p(1/y), an exact polynomial when deg p <= n.
        """
        if self.degree > n:
            raise PreconditionError("cannot mirror %s at degree %d" % (self, n))
        return YPoly(self[n - k] for k in range(n + 1))

    def is_nonnegative(self):
        return all(c >= 0 for c in self.id)

    def as_expr(self):
        return sum((c * Y ** k for k, c in enumerate(self.id)), sympy.Integer(0))

    def to_json(self):
        return [str(c) for c in self.id]

    @classmethod
    def from_json(cls, json_obj):
        return cls(int(c) for c in json_obj)

    @classmethod
    def from_expr(cls, text):
        """Read a printed polynomial in y, e.g. "-y+4 y^2-3 y^3+y^4"."""
        terms = _poly_terms(text)
        if any(xd for xd, _ in terms):
            raise PreconditionError("%r involves x" % text)
        degree = max((yd for _, yd in terms), default=-1)
        return cls(terms.get((0, d), 0) for d in range(degree + 1))

    def __str__(self):
        return str(self.as_expr())

    def __repr__(self):
        return "<YPoly %s>" % self


class XYPoly(CombinatorialBase):
    """
    Polynomial in the refinement markers x and y, stored sparsely as
    (x-degree, y-degree) -> coefficient.

    Coefficients are integers; Fraction coefficients are tolerated only
    while a series is being assembled and must clear in :meth:`integral`.
    """

    def __init__(self, terms=None):
        super(XYPoly, self).__init__()
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            merged = {}
            for key, c in terms:
                merged[key] = merged.get(key, 0) + c
            terms = merged
        self._terms = dict(((int(xd), int(yd)), c) for (xd, yd), c in terms.items() if c != 0)
        self.id = tuple(sorted(self._terms.items()))

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def one(cls):
        return cls.constant(1)

    @classmethod
    def monomial(cls, xdeg, ydeg, coeff=1):
        return cls({(xdeg, ydeg): coeff})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, XYPoly):
            return value
        if isinstance(value, YPoly):
            return cls.from_ypoly(value)
        if isinstance(value, (numbers.Integral, Fraction)):
            return cls.constant(value)
        raise TypeError("cannot use %r as a polynomial in x and y" % (value,))

    @classmethod
    def from_ypoly(cls, p, x_degree=0):
        return cls(((x_degree, k), c) for k, c in enumerate(p.coeffs))

    def monomials(self):
        return [key for key, _ in self.id]

    def items(self):
        return list(self.id)

    def __getitem__(self, key):
        return self._terms.get(tuple(key), 0)

    def is_zero(self):
        return not self.id

    def is_constant(self, c=None):
        keys = self.monomials()
        if any(key != (0, 0) for key in keys):
            return False
        return c is None or self[(0, 0)] == c

    @property
    def x_degree(self):
        return max((xd for (xd, _), _c in self.id), default=-1)

    @property
    def y_degree(self):
        return max((yd for (_, yd), _c in self.id), default=-1)

    def __add__(self, other):
        try:
            other = XYPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return XYPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return XYPoly(dict((key, -c) for key, c in self._terms.items()))

    def __sub__(self, other):
        try:
            other = XYPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (numbers.Integral, Fraction)):
            return XYPoly(dict((key, c * other) for key, c in self._terms.items()))
        try:
            other = XYPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = {}
        for (xa, ya), ca in self._terms.items():
            for (xb, yb), cb in other._terms.items():
                key = (xa + xb, ya + yb)
                out[key] = out.get(key, 0) + ca * cb
        return XYPoly(out)

    __rmul__ = __mul__

    def mul_x(self, k=1):
        return XYPoly(dict(((xd + k, yd), c) for (xd, yd), c in self._terms.items()))

    def mul_y(self, k=1):
        return XYPoly(dict(((xd, yd + k), c) for (xd, yd), c in self._terms.items()))

    def div_y(self, k=1):
        """Exact division by y^k"""
        if any(yd < k for (_, yd) in self._terms):
            raise PreconditionError("%s is not divisible by y^%d" % (self, k))
        return XYPoly(dict(((xd, yd - k), c) for (xd, yd), c in self._terms.items()))

    def specialize(self, x=None, y=None):
        """Substitute integer values for x and/or y; unset markers stay symbolic"""
        out = {}
        for (xd, yd), c in self._terms.items():
            if x is not None:
                c, xd = c * x ** xd, 0
            if y is not None:
                c, yd = c * y ** yd, 0
            out[(xd, yd)] = out.get((xd, yd), 0) + c
        return XYPoly(out)

    def at_ones(self):
        """Value at x = y = 1"""
        return sum(c for _, c in self.id)

    def x_coefficient(self, k):
        """Coefficient of x^k as a polynomial in y"""
        degree = max((yd for (xd, yd) in self._terms if xd == k), default=-1)
        return YPoly(self._terms.get((k, d), 0) for d in range(degree + 1))

    def y_part(self):
        """The polynomial as a YPoly; it must not involve x"""
        if self.x_degree > 0:
            raise PreconditionError("%s involves x" % self)
        return self.x_coefficient(0)

    def integral(self, n=None):
        """Copy with every Fraction cleared to an int; raises IntegralityError otherwise"""
        try:
            return XYPoly(dict((key, _clear(c, "polynomial")) for key, c in self._terms.items()))
        except IntegralityError as e:
            raise IntegralityError(str(e), n)

    def is_nonnegative(self):
        return all(c >= 0 for _, c in self.id)

    def as_expr(self):
        return sum((c * X ** xd * Y ** yd for (xd, yd), c in self.id), sympy.Integer(0))

    def to_json(self):
        return [[xd, yd, str(c)] for (xd, yd), c in self.id]

    @classmethod
    def from_json(cls, json_obj):
        return cls(dict(((int(xd), int(yd)), int(c)) for xd, yd, c in json_obj))

    @classmethod
    def from_expr(cls, text):
        return cls(_poly_terms(text))

    def __str__(self):
        return str(self.as_expr())

    def __repr__(self):
        return "<XYPoly %s>" % self
