"""Hilbert schemes of points on the base spaces ``T*A`` and ``G_m^r``.

E-polynomials come from the plethystic form of Cheah's formula,
``HE_X = PExp(E_X * W(y))``, where ``W`` is the plethystic logarithm of the
punctual Hilbert series of ``C^m``.  For ``m = 2`` all of ``W`` is known
(``W = sum (uv)^(n-1) y^n``); in higher dimension only its first three
coefficients are used, which limits those computations to ``n <= 3``.

Poincare polynomials are obtained two ways: from E by the pure conversion
(valid for the Higgs base, whose cohomology is pure), and from a mixed Hodge
polynomial computed by the signed plethystic exponential with the punctual
weights Tate-twisted (``uv -> t^2 uv``).  The second route is the only one
for ``G_m^r``, since its Hilbert schemes are not round for ``n >= 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ConversionError, RouteDisagreementError, UnsupportedError
from .plethystic import pexp
from .poly import MultiPoly, ONE, T, ZERO, at_unit_uv, euler_value, exact_div, pure_conversion, round_conversion
from .series import YSeries
from .weyl import partitions

X_MONO = (0, 1, 1)
TATE_MONO = (2, 1, 1)


# -- punctual data -------------------------------------------------------------

def _weight_2(m, mono):
    return MultiPoly.from_univariate([0] + [1] * (m - 1), mono)


def _weight_3(m, mono):
    coeffs = [0] * (2 * m - 1)
    for i in range(1, m):
        for j in range(i, m):
            coeffs[i + j] += 1
    return MultiPoly.from_univariate(coeffs, mono)


def punctual_weights(m, order, tate=False):
    """``W(y) = PLog`` of the punctual Hilbert series of ``C^m``, truncated at ``order``.

    ``W = y + w2 y^2 + w3 y^3 (+ ...)`` with ``w2 = x + ... + x^(m-1)`` and
    ``w3 = sum_{1<=i<=j<=m-1} x^(i+j)``; for ``m = 2`` the series continues
    as ``x^(n-1) y^n``.  ``x`` is ``uv``, or ``t^2 uv`` when ``tate``.
    """
    if m < 2:
        raise UnsupportedError("punctual weights need dimension m >= 2")
    if m > 2 and order > 3:
        raise UnsupportedError(f"punctual data for C^{m} is only available up to y^3 (asked for {order})")
    mono = TATE_MONO if tate else X_MONO
    if m == 2:
        terms = {n: MultiPoly.from_univariate([0] * (n - 1) + [1], mono) for n in range(1, order + 1)}
    else:
        terms = {1: ONE, 2: _weight_2(m, mono), 3: _weight_3(m, mono)}
    return YSeries.from_terms(order, terms)


# -- E-series ------------------------------------------------------------------

def _require_uv(poly, what):
    if poly.uses("t"):
        raise UnsupportedError(f"{what} must be a polynomial in u, v only")


def hilb_e_series(e_x, m, order):
    """``sum_n E(Hilb^n X) y^n`` for a smooth ``X`` of dimension ``m`` with E-polynomial ``e_x``."""
    _require_uv(e_x, "E_X")
    return pexp(punctual_weights(m, order) * e_x).require_integral("Hilbert E-series")


def he_surface(e_s, order):
    """Hilbert E-series of a smooth surface: ``PExp(E_S y / (1 - uv y))``."""
    return hilb_e_series(e_s, 2, order)


def hilb_mu_series(mu_x, m, order):
    """Mixed Hodge polynomials of ``Hilb^n X`` from ``mu_X`` via the signed, Tate-twisted plethystic exponential."""
    return pexp(punctual_weights(m, order, tate=True) * mu_x, signed=True).require_integral("Hilbert MHP series")


def _closed_23(f1, w2, w3, signed):
    f1s = f1.adams(2, signed)
    f1ss = f1.adams(3, signed)
    f2 = f1 * w2
    f3 = f1 * w3
    h2 = f2 + (f1 * f1 + f1s) / 2
    h3 = f3 + f1 * f2 + (f1 * f1 * f1) / 6 + (f1 * f1s) / 2 + f1ss / 3
    return h2, h3


def hilb_e_23(e_x, m):
    """Closed forms for ``E(Hilb^2 X)`` and ``E(Hilb^3 X)``, ``X`` smooth of dimension ``m``."""
    _require_uv(e_x, "E_X")
    if m < 2:
        raise UnsupportedError("dimension m must be >= 2")
    h2, h3 = _closed_23(e_x, _weight_2(m, X_MONO), _weight_3(m, X_MONO), False)
    return h2.require_integral("E(Hilb^2)"), h3.require_integral("E(Hilb^3)")


def hilb_mu_23(mu_x, m):
    """Mixed Hodge analogue of :func:`hilb_e_23`: Tate-twisted weights and signed Adams operations."""
    if m < 2:
        raise UnsupportedError("dimension m must be >= 2")
    h2, h3 = _closed_23(mu_x, _weight_2(m, TATE_MONO), _weight_3(m, TATE_MONO), True)
    return h2.require_integral("MHP(Hilb^2)"), h3.require_integral("MHP(Hilb^3)")


# -- the elliptic case ---------------------------------------------------------

def partition_poincare(n):
    """Poincare polynomial of ``Hilb^n(T*C)``, ``C`` an elliptic curve, as a sum over partitions.

    Each partition with ``l`` distinct part sizes contributes
    ``((t+1)/(t-1))^l * prod_{j: lam_j > 0} (t^(2 lam_j) - 1) * t^(2n - 2|lam|)``.
    """
    if n < 1:
        raise UnsupportedError("n must be >= 1")
    total = ZERO
    for lam in partitions(n):
        num = (T + 1) ** lam.num_distinct * MultiPoly.monomial(2 * n - 2 * lam.num_parts)
        for _, mult in lam.items():
            num = num * (MultiPoly.monomial(2 * mult) - 1)
        total = total + exact_div(num, (T - 1) ** lam.num_distinct)
    return total.require_integral("partition Poincare polynomial")


def hilb_poincare_series(order):
    """``prod_{n>=1} (1 + y^n t^(2n-1))^2 / ((1 - y^n t^(2n-2)) (1 - y^n t^(2n)))`` up to ``y^order``."""
    if order < 1:
        raise UnsupportedError("order must be >= 1")
    result = YSeries.one(order)
    for n in range(1, order + 1):
        num = YSeries.from_terms(order, {0: ONE, n: MultiPoly.monomial(2 * n - 1)})
        geo_a = YSeries.from_terms(order, {n * k: MultiPoly.monomial((2 * n - 2) * k)
                                           for k in range(order // n + 1)})
        geo_b = YSeries.from_terms(order, {n * k: MultiPoly.monomial(2 * n * k)
                                           for k in range(order // n + 1)})
        result = result * num * num * geo_a * geo_b
    return result


# -- E <-> P -------------------------------------------------------------------

def poincare_from_e(e, dim, mode="pure"):
    """Poincare polynomial of a smooth variety of complex dimension ``dim`` from its E-polynomial.

    ``pure``: ``t^(2 dim) E(-1/t, -1/t)``; ``round``: ``(-t)^dim E(x := -1/t)``.
    A negative coefficient means the mode does not fit the variety.
    """
    if mode == "pure":
        p = pure_conversion(e, dim)
    elif mode == "round":
        p = round_conversion(e, dim)
    else:
        raise ValueError(f"unknown conversion mode {mode!r}")
    bad = [c for _, c in p.items() if c < 0]
    if bad:
        raise ConversionError(f"{mode} conversion produced negative Betti numbers; wrong mode for this space")
    return p


def e_from_mhp(mu, dim):
    """E-polynomial of a smooth ``dim``-dimensional variety from its mixed Hodge polynomial.

    Poincare duality gives ``h_c^{k,p,q} = h^{2dim-k, dim-p, dim-q}``, so
    ``E(u, v) = (uv)^dim mu(-1, 1/u, 1/v)``.
    """
    out = {}
    for (k, p, q), c in mu.items():
        if p > dim or q > dim:
            raise ConversionError(f"Hodge type ({p},{q}) exceeds dimension {dim}")
        key = (0, dim - p, dim - q)
        out[key] = out.get(key, 0) + (-c if k % 2 else c)
    return MultiPoly(out)


# -- resolution pipelines ------------------------------------------------------

def base_e(d, space, torus_exponent=None):
    """E-polynomial of the rank-one base: ``T*A`` (higgs) or ``G_m^r`` (character)."""
    x = MultiPoly.monomial(0, 1, 1)
    if space == "higgs":
        u1 = MultiPoly.monomial(0, 1) - 1
        v1 = MultiPoly.monomial(0, 0, 1) - 1
        return x**d * u1**d * v1**d
    return (x - 1) ** (torus_exponent or 2 * d)


def base_mhp(d, space, torus_exponent=None):
    """Mixed Hodge polynomial of the rank-one base."""
    if space == "higgs":
        return (MultiPoly.monomial(1, 1) + 1) ** d * (MultiPoly.monomial(1, 0, 1) + 1) ** d
    return (MultiPoly.monomial(1, 1, 1) + 1) ** (torus_exponent or 2 * d)


@dataclass(frozen=True)
class ResolutionSpec:
    """``Hilb^n`` of the base ``T*A`` (higgs) or ``G_m^r`` (character, ``r = 2d`` by default)."""

    n: int
    d: int
    space: str
    torus_exponent: Optional[int] = None

    def __post_init__(self):
        if self.space not in ("higgs", "character"):
            raise UnsupportedError(f"space must be higgs or character, not {self.space!r}")
        if self.n < 1 or self.d < 1:
            raise UnsupportedError("n and abelian dimension d must be >= 1")
        if self.torus_exponent is not None:
            if self.space != "character":
                raise UnsupportedError("--torus-exponent only applies to the character space")
            if self.torus_exponent < 2:
                raise UnsupportedError("torus exponent must be >= 2 for Hilbert schemes to be resolutions")
        if self.base_dim > 2 and self.n > 3:
            raise UnsupportedError(f"n = {self.n} > 3 needs punctual Hilbert data of C^{self.base_dim}, "
                                   "only available for n <= 3")

    @property
    def base_dim(self):
        return self.torus_exponent or 2 * self.d

    @property
    def dim(self):
        return self.n * self.base_dim

    @property
    def crepant(self):
        # symplectic resolution exactly for surfaces (d = 1)
        return self.base_dim == 2


@dataclass(frozen=True)
class ResolutionResult:
    spec: ResolutionSpec
    E: MultiPoly
    mhp: MultiPoly
    P: MultiPoly
    euler: int
    crepant: bool
    routes_agree: bool

    def to_json(self):
        return {"n": self.spec.n, "abelian_dim": self.spec.d, "space": self.spec.space,
                "torus_exponent": self.spec.torus_exponent,
                "E": self.E.to_json(), "P": self.P.to_json(), "euler": self.euler,
                "crepant": self.crepant, "routes_agree": self.routes_agree}


def _nth(fn23, series_fn, base, m, n):
    if n == 1:
        return base
    if n in (2, 3):
        return fn23(base, m)[n - 2]
    return series_fn(base, m, n)[n]


def resolution_outputs(spec):
    """E, mixed Hodge and Poincare polynomials and Euler characteristic of ``Hilb^n`` of the base.

    Routes cross-checked (a mismatch raises :class:`RouteDisagreementError`):
    the E-polynomial from Cheah's formula must equal the one dual to the
    mixed Hodge polynomial, and for the Higgs base the pure E -> P
    conversion must equal the mixed Hodge route at ``u = v = 1``.
    """
    m, n = spec.base_dim, spec.n
    e_x = base_e(spec.d, spec.space, spec.torus_exponent)
    mu_x = base_mhp(spec.d, spec.space, spec.torus_exponent)
    e = _nth(hilb_e_23, hilb_e_series, e_x, m, n)
    mu = _nth(hilb_mu_23, hilb_mu_series, mu_x, m, n)
    p = at_unit_uv(mu)
    dual = e_from_mhp(mu, spec.dim)
    if dual != e:
        raise RouteDisagreementError(f"Hilb^{n} ({spec.space}, m={m}): E from Cheah's formula "
                                     "differs from the dual of the mixed Hodge polynomial")
    if spec.space == "higgs":
        p_pure = poincare_from_e(e, spec.dim, "pure")
        if p_pure != p:
            raise RouteDisagreementError(f"Hilb^{n} (higgs, d={spec.d}): pure E->P conversion "
                                         "disagrees with the mixed Hodge route")
    return ResolutionResult(spec, e, mu, p, euler_value(p), spec.crepant, True)
