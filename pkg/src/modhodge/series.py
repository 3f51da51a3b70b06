"""Power series in ``y`` with :class:`~modhodge.poly.MultiPoly` coefficients, truncated at a fixed order."""

from __future__ import annotations

from numbers import Rational

from .errors import SeriesOrderError
from .poly import VARS, MultiPoly, ZERO


class YSeries:
    """``sum_{k=0}^{N} c_k y^k`` with ``N = order``; anything above ``y^N`` is discarded.

    Two series only combine when their orders agree.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=()):
        if order < 1:
            raise SeriesOrderError("truncation order must be positive")
        coeffs = [c if isinstance(c, MultiPoly) else MultiPoly.constant(c) for c in coeffs]
        coeffs = coeffs[: order + 1]
        coeffs += [ZERO] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_terms(cls, order, terms):
        """Build from ``{y_degree: MultiPoly}``; degrees above ``order`` are dropped."""
        coeffs = [ZERO] * (order + 1)
        for k, c in terms.items():
            if k <= order:
                coeffs[k] = coeffs[k] + c
        return cls(order, coeffs)

    @classmethod
    def one(cls, order):
        return cls(order, [MultiPoly.constant(1)])

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return self.order + 1

    def __eq__(self, other):
        if not isinstance(other, YSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        body = ", ".join(f"y^{k}: {c!r}" for k, c in enumerate(self.coeffs) if c)
        return f"YSeries(order={self.order}, {{{body}}})"

    def _check(self, other):
        if not isinstance(other, YSeries):
            raise TypeError(f"cannot combine YSeries with {type(other).__name__}")
        if other.order != self.order:
            raise SeriesOrderError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return YSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return YSeries(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return YSeries(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (Rational, MultiPoly)):
            return YSeries(self.order, [a * other for a in self.coeffs])
        self._check(other)
        n = self.order
        out = [ZERO] * (n + 1)
        nz = [(i, a) for i, a in enumerate(self.coeffs) if a]
        for j, b in enumerate(other.coeffs):
            if not b:
                continue
            for i, a in nz:
                if i + j > n:
                    break
                out[i + j] = out[i + j] + a * b
        return YSeries(n, out)

    def __rmul__(self, other):
        if isinstance(other, (Rational, MultiPoly)):
            return self * other
        return NotImplemented

    def __truediv__(self, c):
        return YSeries(self.order, [a / c for a in self.coeffs])

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = YSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def adams(self, n, signed=False):
        """Apply the Adams operation to every coefficient and send ``y -> y^n``."""
        out = [ZERO] * (self.order + 1)
        for k, c in enumerate(self.coeffs):
            if k * n > self.order:
                break
            out[k * n] = c.adams(n, signed)
        return YSeries(self.order, out)

    def map(self, fn):
        return YSeries(self.order, [fn(c) for c in self.coeffs])

    def truncate(self, order):
        """Re-truncate at a different order (padding with zeros when raising it)."""
        return YSeries(order, self.coeffs)

    def is_integral(self):
        return all(c.is_integral() for c in self.coeffs)

    def require_integral(self, what="series"):
        for k, c in enumerate(self.coeffs):
            c.require_integral(f"{what}, coefficient of y^{k}")
        return self

    def to_json(self):
        """Polynomial JSON whose terms carry their ``y`` degree, sorted by ``(y, e)``."""
        terms = []
        for k, c in enumerate(self.coeffs):
            for term in c.to_json()["terms"]:
                term["y"] = k
                terms.append(term)
        return {"vars": list(VARS), "order": self.order, "terms": terms}

    @classmethod
    def from_json(cls, obj, order=None):
        """Parse series JSON; ``order`` overrides the stored one.

        Accepts flat terms with a ``y`` field, or a list (or ``{"coeffs": [...]}``)
        of polynomial objects each tagged with ``y``.
        """
        stored = None
        if isinstance(obj, dict):
            stored = obj.get("order")
            if "coeffs" in obj:
                obj = obj["coeffs"]
        if isinstance(obj, dict):
            vars_ = obj.get("vars", list(VARS))
            chunks = [({"vars": vars_, "terms": [t]}, t.get("y", 0)) for t in obj["terms"]]
        else:
            chunks = [(c, c["y"]) for c in obj]
        terms = {}
        for poly, k in chunks:
            k = int(k)
            if k < 0:
                raise ValueError(f"negative y degree {k}")
            terms[k] = terms.get(k, ZERO) + MultiPoly.from_json(poly)
        if order is None:
            order = stored if stored is not None else max(terms, default=1) or 1
        return cls.from_terms(order, terms)
