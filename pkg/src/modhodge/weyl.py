"""Weyl groups of the classical families and Molien-type averages over them.

Conjugacy classes are indexed by cycle types: partitions of ``n`` for the
symmetric groups (types A), pairs of partitions for the hyperoctahedral
groups (types B/C), and the pairs with an even number of negative cycles for
type D.  Each class carries its size and ``det(I + x w)`` on the reflection
representation, which is all a class-function average needs.

:func:`enumerate_elements` lists actual signed-permutation matrices and is
only used as an independent check of the tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from .errors import IntegralityError, UnsupportedError
from .poly import MultiPoly, ZERO

FAMILIES = ("gl", "sl", "so-odd", "sp", "so-even")
MAX_CLASS_PARAM = 30
MAX_ENUMERATION = 10**7


# -- partitions ----------------------------------------------------------------

@dataclass(frozen=True)
class Partition:
    """Integer partition as a multiplicity vector: ``mult[j-1]`` parts of size ``j``."""

    mult: tuple

    @classmethod
    def from_parts(cls, parts):
        n = sum(parts)
        mult = [0] * n
        for p in parts:
            mult[p - 1] += 1
        return cls(tuple(mult))

    @property
    def n(self):
        return sum(j * m for j, m in enumerate(self.mult, 1))

    @property
    def num_parts(self):
        return sum(self.mult)

    @property
    def num_distinct(self):
        return sum(1 for m in self.mult if m)

    def parts(self):
        """Parts in weakly decreasing order."""
        return [j for j in range(len(self.mult), 0, -1) for _ in range(self.mult[j - 1])]

    def items(self):
        """``(part size, multiplicity)`` for the sizes that occur."""
        return [(j, m) for j, m in enumerate(self.mult, 1) if m]

    def centralizer(self):
        """Order of the centraliser of this cycle type in ``S_n``."""
        z = 1
        for j, m in self.items():
            z *= j**m * factorial(m)
        return z

    def __str__(self):
        return "[" + ",".join(map(str, self.parts())) + "]"


def _descending(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions(n):
    """All partitions of ``n``, ordered so that ``[1^n]`` comes first and ``[n]`` last."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(Partition.from_parts(p) for p in sorted(_descending(n, n)))


# -- univariate helpers (coefficient lists, lowest degree first) --------------

def upoly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def divide_by_one_plus_x(a):
    """Exact quotient of a coefficient list by ``1 + x``."""
    q = []
    rem = list(a)
    for k in range(len(a) - 1):
        q.append(rem[k])
        rem[k + 1] -= rem[k]
    if rem[-1] != 0:
        raise IntegralityError("charpoly not divisible by 1 + x")
    return q


# -- group data ----------------------------------------------------------------

@dataclass(frozen=True)
class GroupSpec:
    """A classical group: ``gl``/``sl`` give GL(n)/SL(n), ``so-odd`` SO(2n+1),
    ``sp`` Sp(2n), ``so-even`` SO(2n)."""

    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if not isinstance(self.n, int) or self.n < 1:
            raise UnsupportedError("rank parameter n must be a positive integer")
        if self.family == "so-even" and self.n < 2:
            raise UnsupportedError("so-even needs n >= 2 (SO(2) is a torus)")

    @property
    def rank(self):
        return self.n - 1 if self.family == "sl" else self.n

    @property
    def weyl_order(self):
        if self.family in ("gl", "sl"):
            return factorial(self.n)
        if self.family == "so-even":
            return 2 ** (self.n - 1) * factorial(self.n)
        return 2**self.n * factorial(self.n)

    @property
    def label(self):
        n = self.n
        return {"gl": f"GL({n})", "sl": f"SL({n})", "so-odd": f"SO({2 * n + 1})",
                "sp": f"Sp({2 * n})", "so-even": f"SO({2 * n})"}[self.family]

    @property
    def hyperoctahedral(self):
        return self.family in ("so-odd", "sp", "so-even")


@dataclass(frozen=True, slots=True)
class ClassDatum:
    size: int
    charpoly: tuple  # coefficients of det(I + x w), lowest degree first
    cycle_type: tuple = ()

    def charpoly_poly(self, mono=(0, 1, 1)):
        return MultiPoly.from_univariate(self.charpoly, mono)


@dataclass(frozen=True)
class WeylTable:
    spec: GroupSpec
    classes: tuple

    @property
    def order(self):
        return self.spec.weyl_order

    def validate(self):
        """Check the table invariants; raise :class:`IntegralityError` on failure."""
        r = self.spec.rank
        if sum(c.size for c in self.classes) != self.order:
            raise IntegralityError(f"{self.spec.label}: class sizes do not sum to |W| = {self.order}")
        for c in self.classes:
            if len(c.charpoly) != r + 1 or c.charpoly[0] != 1 or c.charpoly[-1] == 0:
                raise IntegralityError(f"{self.spec.label}: malformed charpoly {c.charpoly}")
        identity = [1]
        for _ in range(r):
            identity = upoly_mul(identity, [1, 1])
        if not any(c.size == 1 and list(c.charpoly) == identity for c in self.classes):
            raise IntegralityError(f"{self.spec.label}: identity class missing")
        return self

    def to_json(self):
        return {
            "family": self.spec.family,
            "n": self.spec.n,
            "order": str(self.order),
            "classes": [{"size": str(c.size), "charpoly": c.charpoly_poly().to_json()}
                        for c in self.classes],
        }


@lru_cache(maxsize=None)
def _cycle_product(parts, negative):
    """``prod_l (1 -+ (-x)^l)`` over ``parts`` (descending), built from the product without the last part."""
    if not parts:
        return (1,)
    prev = _cycle_product(parts[:-1], negative)
    last = parts[-1]
    s = (-1) ** last if negative else -((-1) ** last)
    out = list(prev) + [0] * last
    for e, c in enumerate(prev):
        out[e + last] += s * c
    return tuple(out)


@lru_cache(maxsize=None)
def _cycle_products(k):
    """Per partition of ``k``: ``(partitions, prod 1 - (-x)^l, prod 1 + (-x)^l)``, the products as int64 rows."""
    lams = partitions(k)
    pos = np.array([_cycle_product(tuple(lam.parts()), False) for lam in lams], dtype=np.int64)
    neg = np.array([_cycle_product(tuple(lam.parts()), True) for lam in lams], dtype=np.int64)
    return lams, pos, neg


def _convolve_rows(a, b):
    """All pairwise products of the rows of ``a`` and ``b``, shape ``(len(a), len(b), deg + 1)``."""
    da, db = a.shape[1], b.shape[1]
    out = np.zeros((a.shape[0], b.shape[0], da + db - 1), dtype=np.int64)
    for i in range(da):
        col = a[:, i]
        if col.any():
            out[:, :, i:i + db] += col[:, None, None] * b[None, :, :]
    return out


def _type_a_classes(n, divide):
    total = factorial(n)
    lams, pos, _ = _cycle_products(n)
    for lam, row in zip(lams, pos.tolist()):
        cp = divide_by_one_plus_x(row) if divide else row
        yield ClassDatum(total // lam.centralizer(), tuple(cp), (lam,))


def _hyperoctahedral_classes(n, even_only):
    total = 2**n * factorial(n)
    for k in range(n, -1, -1):
        lams, pos, _ = _cycle_products(k)
        mus, _, neg = _cycle_products(n - k)
        keep = [j for j, mu in enumerate(mus) if not (even_only and mu.num_parts % 2)]
        if not keep:
            continue
        mus = [mus[j] for j in keep]
        block = _convolve_rows(pos, neg[keep]).tolist()
        mu_z = [2**mu.num_parts * mu.centralizer() for mu in mus]
        for lam, rows in zip(lams, block):
            lam_z = 2**lam.num_parts * lam.centralizer()
            for mu, z, cp in zip(mus, mu_z, rows):
                yield ClassDatum(total // (lam_z * z), tuple(cp), (lam, mu))


def iter_classes(spec):
    """Stream the conjugacy classes of ``spec`` without building a table."""
    if spec.n > MAX_CLASS_PARAM:
        raise UnsupportedError(f"rank parameter {spec.n} exceeds the supported maximum {MAX_CLASS_PARAM}")
    if spec.family in ("gl", "sl"):
        return _type_a_classes(spec.n, spec.family == "sl")
    return _hyperoctahedral_classes(spec.n, spec.family == "so-even")


@lru_cache(maxsize=16)
def class_table(spec):
    """Conjugacy classes of the Weyl group of ``spec`` with sizes and ``det(I + x w)``.

    Type D classes are the hyperoctahedral classes with an even number of
    negative cycles.  Classes that split in type D are not separated: the
    characteristic polynomial is constant on the larger class, and only
    class-function sums are ever taken.
    """
    return WeylTable(spec, tuple(iter_classes(spec))).validate()


# -- brute-force oracle --------------------------------------------------------

def enumerate_elements(spec):
    """Every Weyl group element as an explicit integer matrix.

    For ``sl`` these are the ``n x n`` permutation matrices; the factor
    ``1 + x`` of the invariant line is removed downstream.
    """
    if spec.weyl_order > MAX_ENUMERATION:
        raise UnsupportedError(f"|W| = {spec.weyl_order} is too large to enumerate")
    n = spec.n
    perms = list(itertools.permutations(range(n)))
    if not spec.hyperoctahedral:
        return [_signed_perm_matrix(p, (1,) * n) for p in perms]
    out = []
    for signs in itertools.product((1, -1), repeat=n):
        if spec.family == "so-even" and signs.count(-1) % 2:
            continue
        out.extend(_signed_perm_matrix(p, signs) for p in perms)
    return out


def _signed_perm_matrix(perm, signs):
    m = [[0] * len(perm) for _ in perm]
    for i, (p, s) in enumerate(zip(perm, signs)):
        m[p][i] = s
    return tuple(tuple(row) for row in m)


def _bareiss_det(m):
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def matrix_charpoly(m):
    """Coefficients of ``det(I + x M)`` by exact evaluation at ``x = 0..r`` and interpolation."""
    r = len(m)
    xs = list(range(r + 1))
    ys = [_bareiss_det([[int(i == j) + x * m[i][j] for j in range(r)] for i in range(r)]) for x in xs]
    coeffs = [Fraction(0)] * (r + 1)
    for i, xi in enumerate(xs):
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j != i:
                basis = upoly_mul(basis, [-xj, 1])
                denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += ys[i] * Fraction(b) / denom
    if any(c.denominator != 1 for c in coeffs):
        raise IntegralityError("interpolated charpoly is not integral")
    return tuple(int(c) for c in coeffs)


# -- Molien averages -----------------------------------------------------------

MONOMIALS = {"t": (1, 0, 0), "u": (0, 1, 0), "v": (0, 0, 1), "x": (0, 1, 1), "uv": (0, 1, 1),
             "tu": (1, 1, 0), "tv": (1, 0, 1), "tuv": (1, 1, 1)}


def parse_monomial(m):
    if isinstance(m, str):
        try:
            return MONOMIALS[m]
        except KeyError:
            raise ValueError(f"unknown monomial {m!r}") from None
    return tuple(m)


def _class_sum(pairs, factors, order, what):
    factors = [(parse_monomial(m), e) for m, e in factors]
    grouped = {}
    for size, cp in pairs:
        grouped[cp] = grouped.get(cp, 0) + size
    total = ZERO
    for cp, size in grouped.items():
        term = MultiPoly.constant(size)
        for mono, e in factors:
            term = term * MultiPoly.from_univariate(cp, mono) ** e
        total = total + term
    return (total / order).require_integral(what)


def molien_average(table, factors):
    """``(1/|W|) sum_w prod_i det(I + m_i w)^(e_i)`` from a class table.

    ``factors`` is a list of ``(monomial, exponent)``; a monomial is an
    exponent triple or one of the names in :data:`MONOMIALS`.
    """
    return _class_sum(((c.size, c.charpoly) for c in table.classes), factors,
                      table.order, f"Molien average over W({table.spec.label})")


def molien_by_enumeration(spec, factors):
    """The same average summed element by element over :func:`enumerate_elements`."""
    pairs = []
    for m in enumerate_elements(spec):
        cp = matrix_charpoly(m)
        if spec.family == "sl":
            cp = tuple(divide_by_one_plus_x(cp))
        pairs.append((1, cp))
    return _class_sum(pairs, factors, len(pairs), f"enumerated average over W({spec.label})")
