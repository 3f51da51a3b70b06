"""Plethystic exponential and logarithm on truncated ``y``-series.

``pexp(f) = exp(sum_{n>=1} adams(f, n) / n)`` and ``plog`` is its inverse.
With ``signed=True`` the Adams operations carry the Koszul sign of odd
``t``-degree, which turns ``pexp(mu_X * y)`` into the generating series of
mixed Hodge polynomials of the symmetric products of ``X``.

The default routes work with ``k * (coefficient of y^k)`` so that every
intermediate is integral for integral input; there is a single exact
division per coefficient at the end.
"""

from __future__ import annotations

from math import comb

from .errors import UnsupportedError
from .poly import MultiPoly, ZERO
from .series import YSeries


def mobius(n):
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _exp_from_weighted_log(dlog, order):
    # dlog[j] = j * L_j; solves k g_k = sum_{j=1}^{k} (j L_j) g_{k-j}
    g = [MultiPoly.constant(1)] + [ZERO] * order
    for k in range(1, order + 1):
        acc = ZERO
        for j in range(1, k + 1):
            if dlog[j] and g[k - j]:
                acc = acc + dlog[j] * g[k - j]
        g[k] = acc / k
    return YSeries(order, g)


def pexp(f, signed=False):
    """Plethystic exponential of a series with vanishing ``y^0`` coefficient."""
    if f[0]:
        raise UnsupportedError("pexp needs a series without constant term")
    n = f.order
    # j * L_j = sum_{d | j} (j/d) adams_d(f_{j/d})
    dlog = [ZERO] * (n + 1)
    for j in range(1, n + 1):
        acc = ZERO
        for d in _divisors(j):
            c = f[j // d]
            if c:
                acc = acc + c.adams(d, signed) * (j // d)
        dlog[j] = acc
    return _exp_from_weighted_log(dlog, n)


def _weighted_log(g):
    # H_k = k h_k with h = log g:  H_k = k g_k - sum_{j=1}^{k-1} H_j g_{k-j}
    n = g.order
    h = [ZERO] * (n + 1)
    for k in range(1, n + 1):
        acc = g[k] * k
        for j in range(1, k):
            if h[j] and g[k - j]:
                acc = acc - h[j] * g[k - j]
        h[k] = acc
    return h


def log_series(g):
    """Ordinary logarithm of a series with constant term 1."""
    _check_unit(g)
    h = _weighted_log(g)
    return YSeries(g.order, [ZERO] + [h[k] / k for k in range(1, g.order + 1)])


def exp_series(f):
    """Ordinary exponential of a series without constant term."""
    if f[0]:
        raise UnsupportedError("exp needs a series without constant term")
    return _exp_from_weighted_log([ZERO] + [f[k] * k for k in range(1, f.order + 1)], f.order)


def _check_unit(g):
    if g[0] != MultiPoly.constant(1):
        raise UnsupportedError("series must have constant term 1")


def plog(g, signed=False):
    """Plethystic logarithm by Moebius inversion of the Adams sum.

    ``f_m = (1/m) sum_{d | m} mobius(d) adams_d(H_{m/d})`` where ``H_k`` is
    ``k`` times the ``y^k`` coefficient of ``log g``.
    """
    _check_unit(g)
    n = g.order
    h = _weighted_log(g)
    f = [ZERO] * (n + 1)
    for m in range(1, n + 1):
        acc = ZERO
        for d in _divisors(m):
            mu = mobius(d)
            if mu and h[m // d]:
                acc = acc + h[m // d].adams(d, signed) * mu
        f[m] = acc / m
    return YSeries(n, f)


def plog_recursive(g, signed=False):
    """Plethystic logarithm by coefficient-wise inversion of :func:`pexp`.

    Slow; kept as a cross-check of :func:`plog`.
    """
    _check_unit(g)
    n = g.order
    f = YSeries(n)
    for k in range(1, n + 1):
        missing = g[k] - pexp(f, signed)[k]
        f = YSeries(n, list(f.coeffs[:k]) + [missing])
    return f


def pexp_product(f, signed=False):
    """Plethystic exponential through the product form.

    Each term ``c m y^k`` (``m`` a monomial) contributes ``(1 - m y^k)^(-c)``,
    or ``(1 + m y^k)^c`` when ``signed`` and ``m`` has odd ``t``-degree.
    Coefficients must be integers.  Independent of the Adams-sum route.
    """
    if f[0]:
        raise UnsupportedError("pexp needs a series without constant term")
    n = f.order
    f.require_integral("pexp_product input")
    result = YSeries.one(n)
    for k in range(1, n + 1):
        for (a, b, c), coeff in f[k].items():
            mono = MultiPoly.monomial(a, b, c)
            result = result * _binomial_factor(mono, k, coeff, signed and a % 2 == 1, n)
    return result


def _binomial_factor(mono, k, c, odd, order):
    # odd:  (1 + m y^k)^c ; even: (1 - m y^k)^(-c), expanded to y^order
    terms = {}
    for j in range(order // k + 1):
        if odd:
            coeff = comb(c, j) if c >= 0 else (-1) ** j * comb(-c + j - 1, j)
        else:
            coeff = comb(c + j - 1, j) if c >= 0 else (-1) ** j * comb(-c, j)
        if coeff:
            terms[j * k] = mono**j * coeff
    return YSeries.from_terms(order, terms)
