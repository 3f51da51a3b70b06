"""Exact sparse polynomials in the three variables t, u, v.

A :class:`MultiPoly` maps exponent triples ``(e_t, e_u, e_v)`` to exact
coefficients.  Coefficients are ``int`` whenever possible and
``fractions.Fraction`` otherwise, so averaging steps (division by a group
order, by ``n`` in a plethystic sum...) stay exact until the final answer is
checked for integrality.

Besides ring arithmetic the module provides exact division, Adams operations
(``t, u, v -> t^n, u^n, v^n``, optionally with the Koszul sign of odd
``t``-degree) and the specialisations used to turn mixed Hodge data into
Poincare polynomials and Euler characteristics.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from . import kernels
from .errors import ConversionError, IntegralityError, NonExactDivisionError

VARS = ("t", "u", "v")


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class MultiPoly:
    """Immutable sparse polynomial in ``t, u, v`` with rational coefficients.

    Terms are kept zero-free and in lexicographic order of the exponent
    triple, so ``==`` is structural equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        clean = {}
        for k, c in terms.items():
            k = tuple(int(e) for e in k)
            if len(k) != 3 or min(k) < 0:
                raise ValueError(f"bad exponent triple {k!r}")
            if not isinstance(c, Rational):
                raise TypeError(f"coefficient {c!r} is not an exact rational")
            c = _norm(Fraction(c)) if not isinstance(c, int) else int(c)
            if c:
                clean[k] = clean.get(k, 0) + c
        self._terms = {k: clean[k] for k in sorted(clean) if clean[k]}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # trusted path: terms already zero-free, sorted, normalised
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # constructors
    @classmethod
    def constant(cls, c):
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, et=0, eu=0, ev=0, c=1):
        return cls({(et, eu, ev): c})

    @classmethod
    def var(cls, name):
        return cls.monomial(*(int(name == v) for v in VARS))

    @classmethod
    def from_univariate(cls, coeffs, mono=(1, 0, 0)):
        """``sum_k coeffs[k] * m^k`` for the monomial ``m = t^a u^b v^c``."""
        a, b, c = mono
        return cls({(a * k, b * k, c * k): x for k, x in enumerate(coeffs) if x})

    # basic protocol
    @property
    def terms(self):
        """Read-only view of the ``{(e_t, e_u, e_v): coeff}`` mapping, sorted."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, Rational):
            return self._terms == MultiPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self):
        from .render import to_text

        try:
            return f"MultiPoly({to_text(self)})"
        except IntegralityError:
            return f"MultiPoly({self._terms!r})"

    # arithmetic
    @staticmethod
    def _coerce(other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, Rational):
            return MultiPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return MultiPoly._raw(kernels.add_terms(self._terms, other._terms))

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return MultiPoly._raw(kernels.add_terms(self._terms, other._terms, -1))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return MultiPoly._raw(kernels.mul_terms(self._terms, other._terms))

    __rmul__ = __mul__

    def scale(self, c):
        if not c:
            return MultiPoly()
        return MultiPoly._raw({k: _norm(x * c) for k, x in self._terms.items()})

    def __truediv__(self, c):
        """Division by a non-zero rational scalar (use :func:`exact_div` for polynomials)."""
        if isinstance(c, MultiPoly):
            return exact_div(self, c)
        if not isinstance(c, Rational) or c == 0:
            raise ZeroDivisionError("division by zero or non-rational scalar")
        return self.scale(Fraction(1) / Fraction(c))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # queries
    def degree(self, var="t"):
        """Degree in one variable (``-1`` for the zero polynomial)."""
        i = VARS.index(var)
        return max((k[i] for k in self._terms), default=-1)

    def coefficient(self, et=0, eu=0, ev=0):
        return self._terms.get((et, eu, ev), 0)

    def constant_term(self):
        return self.coefficient(0, 0, 0)

    def leading_term(self):
        """Lex-largest ``(exponent, coefficient)`` pair."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        k = next(reversed(self._terms))
        return k, self._terms[k]

    def is_integral(self):
        return all(isinstance(c, int) for c in self._terms.values())

    def require_integral(self, what="result"):
        """Return ``self`` after checking every coefficient is an integer."""
        for k, c in self._terms.items():
            if not isinstance(c, int):
                raise IntegralityError(f"{what}: non-integer coefficient {c} at {k}")
        return self

    def uses(self, var):
        return self.degree(var) > 0

    def is_balanced(self):
        """True when every term has ``e_t == e_u == e_v`` (a polynomial in ``tuv``)."""
        return all(a == b == c for a, b, c in self._terms)

    def swap_uv(self):
        return MultiPoly({(a, c, b): x for (a, b, c), x in self._terms.items()})

    def evaluate(self, t=1, u=1, v=1):
        """Exact value at rational (or integer) ``t, u, v``."""
        total = 0
        for (a, b, c), x in self._terms.items():
            total += x * Fraction(t) ** a * Fraction(u) ** b * Fraction(v) ** c
        return _norm(Fraction(total))

    def univariate(self, var="t"):
        """Dense coefficient list in ``var``; the polynomial must not involve the others."""
        i = VARS.index(var)
        out = [0] * (self.degree(var) + 1)
        for k, c in self._terms.items():
            if any(e for j, e in enumerate(k) if j != i):
                raise ValueError(f"polynomial is not univariate in {var}")
            out[k[i]] = c
        return out

    # substitutions
    def adams(self, n, signed=False):
        """Substitute ``t, u, v -> t^n, u^n, v^n``.

        With ``signed`` each term also picks up ``(-1)^(e_t (n-1))``, the
        Koszul sign that makes odd ``t``-degree behave as exterior.
        """
        if n < 1:
            raise ValueError("Adams index must be positive")
        flip = signed and n % 2 == 0
        return MultiPoly._raw({(a * n, b * n, c * n): (-x if flip and a % 2 else x)
                               for (a, b, c), x in self._terms.items()})

    def substitute_monomials(self, t=(1, 0, 0), u=(0, 1, 0), v=(0, 0, 1)):
        """Replace each variable by a monomial, given as an exponent triple."""
        out = {}
        for (a, b, c), x in self._terms.items():
            k = tuple(a * t[i] + b * u[i] + c * v[i] for i in range(3))
            out[k] = out.get(k, 0) + x
        return MultiPoly(out)

    # serialisation
    def to_json(self):
        terms = []
        for k, c in self._terms.items():
            if not isinstance(c, int):
                raise IntegralityError(f"refusing to serialise rational coefficient {c} at {k}")
            terms.append({"e": list(k), "c": str(c)})
        return {"vars": list(VARS), "terms": terms}

    @classmethod
    def from_json(cls, obj):
        if list(obj.get("vars", VARS)) != list(VARS):
            raise ValueError(f"unsupported variable list {obj.get('vars')!r}")
        terms = {}
        for term in obj["terms"]:
            k = tuple(term["e"])
            terms[k] = terms.get(k, 0) + int(term["c"])
        return cls(terms)


ONE = MultiPoly.constant(1)
ZERO = MultiPoly()
T = MultiPoly.var("t")
U = MultiPoly.var("u")
V = MultiPoly.var("v")
X = U * V


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def exact_div(num, den):
    """Return ``q`` with ``q * den == num``; raise if the division leaves a remainder.

    Plain lexicographic long division.  Lex order is a well-order on
    exponent triples, so the loop terminates; when ``den`` divides ``num``
    every intermediate leading term is divisible by ``LT(den)``.
    """
    if not den:
        raise ZeroDivisionError("exact_div by the zero polynomial")
    dk, dc = den.leading_term()
    dc = Fraction(dc)
    rem = dict(num.items())
    quot = {}
    while rem:
        rk = max(rem)
        if not _divides(dk, rk):
            raise NonExactDivisionError(f"leading term {rk} not divisible by {dk}")
        qk = tuple(x - y for x, y in zip(rk, dk))
        qc = _norm(rem[rk] / dc)
        quot[qk] = qc
        for k, c in den.items():
            kk = (k[0] + qk[0], k[1] + qk[1], k[2] + qk[2])
            nv = _norm(Fraction(rem.get(kk, 0)) - qc * c)
            if nv:
                rem[kk] = nv
            else:
                rem.pop(kk, None)
    return MultiPoly(quot)


# -- specialisations ---------------------------------------------------------

def at_unit_uv(f):
    """``f(t, 1, 1)``: the Poincare specialisation of a mixed Hodge polynomial."""
    out = {}
    for (a, _, _), c in f.items():
        out[(a, 0, 0)] = out.get((a, 0, 0), 0) + c
    return MultiPoly(out)


def euler_value(f):
    """``f(-1, 1, 1)`` as an exact number."""
    return f.evaluate(-1, 1, 1)


def pure_conversion(f, dim):
    """``t^(2 dim) f(-1/t, -1/t)`` for an E-polynomial ``f(u, v)`` of a pure smooth variety.

    Every term ``c u^p v^q`` becomes ``c (-1)^(p+q) t^(2 dim - p - q)``; a
    negative exponent means the input is not the E-polynomial of a pure
    variety of that dimension.
    """
    if f.uses("t"):
        raise ConversionError("pure conversion expects a polynomial in u, v only")
    out = {}
    for (_, p, q), c in f.items():
        e = 2 * dim - p - q
        if e < 0:
            raise ConversionError(f"negative t-exponent {e} from u^{p} v^{q} with dim={dim}")
        out[(e, 0, 0)] = out.get((e, 0, 0), 0) + (-c if (p + q) % 2 else c)
    return MultiPoly(out)


def round_conversion(f, dim):
    """``(-t)^dim f(x := -1/t)`` for an E-polynomial depending on ``x = uv`` only."""
    if f.uses("t"):
        raise ConversionError("round conversion expects a polynomial in u, v only")
    out = {}
    for (_, p, q), c in f.items():
        if p != q:
            raise ConversionError(f"term u^{p} v^{q} is not a power of x = uv")
        e = dim - p
        if e < 0:
            raise ConversionError(f"negative t-exponent {e} from x^{p} with dim={dim}")
        out[(e, 0, 0)] = out.get((e, 0, 0), 0) + (-c if (dim + p) % 2 else c)
    return MultiPoly(out)


SPECIALIZATIONS = ("uv=1", "euler", "pure", "round")


def specialize(f, rule, dim=None):
    """Dispatch to one of the specialisation rules in :data:`SPECIALIZATIONS`."""
    if rule == "uv=1":
        return at_unit_uv(f)
    if rule == "euler":
        return MultiPoly.constant(euler_value(f))
    if rule in ("pure", "round"):
        if dim is None:
            raise ValueError(f"{rule} conversion needs the complex dimension")
        return (pure_conversion if rule == "pure" else round_conversion)(f, dim)
    raise ValueError(f"unknown specialisation rule {rule!r}")
