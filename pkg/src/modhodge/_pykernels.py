"""Pure-Python sparse multiplication kernel (fallback for ``_ckernels``).

Terms are dicts mapping ``(e_t, e_u, e_v)`` to a coefficient (``int`` or
``Fraction``).  Returned dicts are zero-free and in lexicographic key order.
"""

from fractions import Fraction

BACKEND = "python"


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def mul_terms(a, b):
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    bitems = list(b.items())
    for (ta, ua, va), ca in a.items():
        for (tb, ub, vb), cb in bitems:
            k = (ta + tb, ua + ub, va + vb)
            out[k] = get(k, 0) + ca * cb
    return {k: _norm(out[k]) for k in sorted(out) if out[k]}


def add_terms(a, b, scale=1):
    """Return ``a + scale * b``."""
    out = dict(a)
    get = out.get
    for k, c in b.items():
        out[k] = get(k, 0) + scale * c
    return {k: _norm(out[k]) for k in sorted(out) if out[k]}
