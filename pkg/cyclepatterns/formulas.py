# -*- coding: utf-8 -*-
"""
Closed-form generating functions for no-cycle-match and cycle-avoidance
counts, each evaluated to a truncation order as an :class:`EgfSeq` in
t with x marking cycles and y marking cycle descents.

Formulas are addressable by string id through :func:`resolve_formula`.
"""
from __future__ import with_statement, print_function, absolute_import

import logging
import re
from itertools import product

from cyclepatterns.exceptions import InvalidInput, PreconditionError, UnknownIdentifier
from cyclepatterns.pattern import Pattern
from cyclepatterns.polynomial import XYPoly, YPoly
from cyclepatterns.recurrences import (RZeroOneDP, STATEMENT, a_recursion_132, tangent_numbers,
                                       u_1324_1423, u_recurrence_txy, urec_shape)
from cyclepatterns.series import (EgfSeq, egf_exp, egf_integrate, egf_log, egf_power_x,
                                  egf_reciprocal, egf_substitute_ty, reflect_cycle_series)
from cyclepatterns.util import Config

_logger = logging.getLogger(__name__)

ALTERNATING = "alternating"
DISPLAYED = "displayed"
MR_VARIANTS = (ALTERNATING, DISPLAYED)

# (e1, e2, d): U = 1 - y^d * int_0^t exp(e1 (1-y) s + e2 y^des s^(j-1)/(j-1)!) ds
THM12_SIGNS = (1, -1, 1)
THM12_VARIANTS = dict(("e1=%+d,e2=%+d,d=%d" % signs, signs)
                      for signs in product((1, -1), (1, -1), (0, 1)))
THM12_ALIASES = {
    "corrected": (1, -1, 1),
    "displayed": (-1, -1, 0),
    "proof": (1, 1, 0),
}

_S3_RISING = ("123", "231", "312")
_S3_FALLING = ("132", "213", "321")


def _pattern(tau):
    return tau if isinstance(tau, Pattern) else Pattern(tau)


def _cycle_series(polys):
    """exp(x L) for the cycle polynomials L_1, L_2, ... given from m = 1"""
    return egf_exp(EgfSeq.from_ypolys([YPoly()] + list(polys)), x_marker=True)


def ca_s3_txy(tau, order):
    """
    CA_tau(t, x, y) for tau in S_3.

    For 123, 231 and 312 the cycle series is yt + (e^(yt) - 1 - yt)/y; for
    132, 213 and 321 it is y (e^t - 1).

    :rtype: EgfSeq
    """
    tau = _pattern(tau)
    if tau.j != 3:
        raise InvalidInput("cycle avoidance closed forms cover S_3 only, got %s" % tau)
    exp_t = EgfSeq.exp_t(order)
    if str(tau) in _S3_RISING:
        shifted = egf_substitute_ty(exp_t)
        tail = EgfSeq([XYPoly()] * min(2, order + 1) + list(shifted.terms[2:]))
        cycles = EgfSeq(term.div_y() for term in tail)
        cycles = cycles + egf_integrate(EgfSeq.one(order)).scale(XYPoly.monomial(0, 1))
    else:
        cycles = (exp_t - EgfSeq.one(order)).scale(XYPoly.monomial(0, 1))
    return egf_exp(cycles, x_marker=True)


def gj_series(k, order):
    """
    NM of 1 2 ... k at x = y = 1: the reciprocal of
    sum_i t^(ki)/(ki)! - t^(ki+1)/(ki+1)!.

    :rtype: EgfSeq
    """
    if k < 2:
        raise InvalidInput("the increasing pattern needs length >= 2, got %d" % k)
    terms = []
    for n in range(order + 1):
        if n % k == 0:
            terms.append(1)
        elif n % k == 1:
            terms.append(-1)
        else:
            terms.append(0)
    return egf_reciprocal(EgfSeq(terms))


def mr_denominator(j, order, variant=ALTERNATING):
    """
    Denominator D(t, y) whose reciprocal is the y-refined NM series of
    1 2 ... j: D_0 = 1 and, for n >= 1,

        D_n = s_n * sum_i (-1)^i R(n-1, i, j-1) y^(n-i)

    with s_n = (-1)^n (``alternating``) or 1 (``displayed``).

    :rtype: EgfSeq
    """
    if j < 2:
        raise InvalidInput("the increasing pattern needs length >= 2, got %d" % j)
    if variant not in MR_VARIANTS:
        raise InvalidInput("unknown denominator variant %r" % (variant,))
    r = RZeroOneDP(j - 1)
    terms = [YPoly.constant(1)]
    for n in range(1, order + 1):
        inner = YPoly()
        for i in range(n):
            inner = inner + YPoly.monomial(n - i, (-1) ** i * r(n - 1, i))
        if variant == ALTERNATING and n % 2:
            inner = -inner
        terms.append(inner)
    return EgfSeq.from_ypolys(terms)


def mr_series(j, order, variant=ALTERNATING):
    """
    NCM of 1 2 ... j as (1/D(t, y))^x with D from :func:`mr_denominator`.

    :rtype: EgfSeq
    """
    return egf_power_x(egf_reciprocal(mr_denominator(j, order, variant)))


def _one_minus_integral(exponent, lead):
    """1 - lead * int_0^t exp(exponent(s)) ds"""
    order = exponent.order
    integral = egf_integrate(egf_exp(exponent))
    return EgfSeq.one(order) - integral.scale(lead)


def ncm_132_txy(order):
    """
    NCM_132 = (1 - y int_0^t e^((1-y)s - y s^2/2) ds)^(-x)

    :rtype: EgfSeq
    """
    exponent = [YPoly(), YPoly([1, -1])]
    if order >= 2:
        exponent.append(YPoly.monomial(1, -1))
    exponent += [YPoly()] * (order + 1 - len(exponent))
    u = _one_minus_integral(EgfSeq.from_ypolys(exponent[:order + 1]), YPoly.monomial(1))
    return egf_power_x(egf_reciprocal(u))


def thm12_shape(tau):
    """
    :raises InvalidInput: unless tau starts with 1, ends with 2 and j >= 3
    """
    tau = _pattern(tau)
    if tau.j < 3 or tau.word[0] != 1 or tau.word[-1] != 2:
        raise InvalidInput("%s does not start with 1 and end with 2" % tau)
    return tau


def thm12_signs(variant):
    """Signs (e1, e2, d) for a variant label, alias or tuple"""
    if isinstance(variant, tuple):
        if variant not in THM12_VARIANTS.values():
            raise InvalidInput("bad sign variant %r" % (variant,))
        return variant
    if variant in THM12_ALIASES:
        return THM12_ALIASES[variant]
    if variant in THM12_VARIANTS:
        return THM12_VARIANTS[variant]
    raise UnknownIdentifier("sign variant", variant, sorted(THM12_ALIASES) + sorted(THM12_VARIANTS))


def thm12_u_series(tau, order, signs=THM12_SIGNS):
    """
    U(t, y) = 1 - y^d int_0^t exp(e1 (1-y) s + e2 y^des(tau) s^(j-1)/(j-1)!) ds

    :rtype: EgfSeq
    """
    tau = thm12_shape(tau)
    e1, e2, d = thm12_signs(signs)
    exponent = [YPoly()] * (order + 1)
    if order >= 1:
        exponent[1] = YPoly([e1, -e1])
    if order >= tau.j - 1:
        exponent[tau.j - 1] = exponent[tau.j - 1] + YPoly.monomial(tau.des, e2)
    return _one_minus_integral(EgfSeq.from_ypolys(exponent), YPoly.monomial(d))


def ncm_1dots2_txy(tau, order, signs=THM12_SIGNS):
    """
    NCM_tau = U(t, y)^(-x) for tau = 1 ... 2 (see :func:`thm12_u_series`).

    :signs: (e1, e2, d), a label of THM12_VARIANTS or an alias
    :rtype: EgfSeq
    """
    return egf_power_x(egf_reciprocal(thm12_u_series(tau, order, signs)))


def ncm_123_321_txy(order):
    """
    NCM for the set {123, 321}: L_1 = y, L_2k = y^k E_(2k-1) and no odd
    cycles of length >= 3, so NCM = e^(xyt) sec(t sqrt(y))^x.

    :rtype: EgfSeq
    """
    tangents = tangent_numbers(order // 2 + 1)
    polys = []
    for m in range(1, order + 1):
        if m == 1:
            polys.append(YPoly.monomial(1))
        elif m % 2:
            polys.append(YPoly())
        else:
            polys.append(YPoly.monomial(m // 2, tangents[m // 2 - 1]))
    return _cycle_series(polys)


def ncm_both_123_132_txy(order):
    """
    e^(x(yt + yt^2/2)): only 1- and 2-cycles avoid both 123 and 132.

    :rtype: EgfSeq
    """
    y = YPoly.monomial(1)
    return _cycle_series([y if m <= 2 else YPoly() for m in range(1, order + 1)])


def reverse_complement_ncm(tau, ncm_tau, order=None):
    """
    NCM of tau^r (= NCM of tau^c) from NCM of tau: the cycle series
    log NCM_tau(t, 1, y) keeps L_1 = y and sends L_m to y^m L_m(1/y).

    :rtype: EgfSeq
    """
    tau = _pattern(tau)
    if tau.j < 2:
        raise InvalidInput("reverse/complement transform needs j >= 2, got %s" % tau)
    if order is not None:
        ncm_tau = ncm_tau.truncate(order)
    cycles = egf_log(ncm_tau.specialize(x=1))
    return egf_exp(reflect_cycle_series(cycles), x_marker=True)


def a132_series(order):
    """Cycle series sum A_n(y) t^n/n! for 132 from the A-recursion"""
    return EgfSeq.from_ypolys(a_recursion_132(order))


def _is_increasing(tau):
    return tau.word == tuple(range(1, tau.j + 1))


def _direct_ncm(tau, order, config, jobs):
    if tau.j >= 2 and _is_increasing(tau):
        return mr_series(tau.j, order)
    if str(tau) == "132":
        return ncm_132_txy(order)
    if str(tau) in ("1324", "1423"):
        return u_1324_1423(str(tau), order, config=config, jobs=jobs)[1]
    if tau.j >= 3 and tau.word[0] == 1 and tau.word[-1] == 2:
        return ncm_1dots2_txy(tau, order)
    try:
        urec_shape(tau)
    except InvalidInput:
        return None
    return u_recurrence_txy(tau, order, STATEMENT, config, jobs)


def ncm_formula_for(tau, order, config=None, jobs=None):
    """
    NCM_tau(t, x, y) from whichever closed form covers tau, falling back
    to the reverse/complement transform of tau^r or tau^c.

    :raises PreconditionError: if no closed form covers tau
    :rtype: EgfSeq
    """
    tau = _pattern(tau)
    series = _direct_ncm(tau, order, config, jobs)
    if series is not None:
        return series
    for image in (tau.reverse(), tau.complement()):
        series = _direct_ncm(image, order, config, jobs)
        if series is not None:
            _logger.debug("%s: using the transform of %s", tau, image)
            return reverse_complement_ncm(image, series, order)
    raise PreconditionError("no closed form covers %s" % tau)


FORMULA_IDS = (
    ("ca:<tau>", "cycle avoidance for tau in S_3"),
    ("gj:k=<k>", "no match of 1 2 ... k at x = y = 1"),
    ("mr:j=<j>", "no cycle match of 1 2 ... j"),
    ("ncm132", "no cycle match of 132"),
    ("thm12:<tau>", "no cycle match of tau = 1 ... 2"),
    ("urec:<tau>", "no cycle match of tau = 1 2 ... (j-1) gamma j by its U-recurrence"),
    ("u1324", "no cycle match of 1324 by its U-recurrence"),
    ("u1423", "no cycle match of 1423 by its U-recurrence"),
    ("ncm123_321", "no cycle match of {123, 321}"),
    ("ncm123_132", "no cycle match of {123, 132}"),
    ("rc:<tau>", "no cycle match of tau^r from a closed form for tau"),
    ("a132", "cycle series of 132 from the A-recursion"),
)

_PARAMETRIC = re.compile(r"^(ca|thm12|urec|rc):(\S+)$|^(gj):k=(\d+)$|^(mr):j=(\d+)$")


def resolve_formula(ident, order, config=None, jobs=None):
    """
    Evaluate a formula by id.

    :ident: one of the ids in FORMULA_IDS, e.g. ``ncm132``, ``gj:k=3``,
            ``urec:1243``
    :order: truncation order; defaults to the configured order
    :raises UnknownIdentifier: for an id that names no formula
    :rtype: EgfSeq
    """
    if order is None:
        order = (config or Config()).order
    if order < 0:
        raise InvalidInput("order must not be negative, got %d" % order)
    simple = {
        "ncm132": lambda: ncm_132_txy(order),
        "u1324": lambda: u_1324_1423("1324", order, config=config, jobs=jobs)[1],
        "u1423": lambda: u_1324_1423("1423", order, config=config, jobs=jobs)[1],
        "ncm123_321": lambda: ncm_123_321_txy(order),
        "ncm123_132": lambda: ncm_both_123_132_txy(order),
        "a132": lambda: a132_series(order),
    }
    if ident in simple:
        return simple[ident]()
    match = _PARAMETRIC.match(ident or "")
    if match is None:
        raise UnknownIdentifier("formula", ident, [name for name, _ in FORMULA_IDS])
    kind = match.group(1) or match.group(3) or match.group(5)
    arg = match.group(2) or match.group(4) or match.group(6)
    _logger.debug("evaluating %s to order %d", ident, order)
    if kind == "gj":
        return gj_series(int(arg), order)
    if kind == "mr":
        return mr_series(int(arg), order)
    tau = Pattern.parse(arg)
    if kind == "ca":
        return ca_s3_txy(tau, order)
    if kind == "thm12":
        return ncm_1dots2_txy(tau, order)
    if kind == "urec":
        return u_recurrence_txy(tau, order, STATEMENT, config, jobs)
    return reverse_complement_ncm(tau, ncm_formula_for(tau, order, config, jobs), order)
