"""Text and LaTeX rendering of polynomials and series.

Both styles share one layout, so they agree once LaTeX braces are removed:

* a polynomial in ``tuv`` alone is written in powers of ``(tuv)``;
* otherwise terms are listed by ``t``-degree, and a pair ``u^p v^q``,
  ``u^q v^p`` with equal coefficients in the same ``t``-degree is collected
  as ``c t^k(u^p v^q + u^q v^p)``.
"""

from __future__ import annotations

from fractions import Fraction


def _pow(base, e, latex):
    if e == 0:
        return ""
    if e == 1:
        return base
    return f"{base}^{{{e}}}" if latex else f"{base}^{e}"


def _coeff_str(c, latex):
    if isinstance(c, Fraction):
        return rf"\frac{{{c.numerator}}}{{{c.denominator}}}" if latex else f"({c})"
    return str(c)


def _uv(p, q, latex):
    return _pow("u", p, latex) + _pow("v", q, latex)


def _display_key(k):
    t, u, v = k
    return (t, u + v, -u, v)


def _pieces(poly, latex):
    """Yield ``(coefficient, body)`` with the body rendered without its sign."""
    terms = poly.terms
    if poly.is_balanced():
        for (k, _, _), c in terms.items():
            yield c, (_pow("(tuv)", k, latex) if k else "")
        return
    done = set()
    for key in sorted(terms, key=_display_key):
        if key in done:
            continue
        t, p, q = key
        c = terms[key]
        mate = (t, q, p)
        if p != q and terms.get(mate) == c and mate not in done:
            done.update((key, mate))
            hi, lo = (key, mate) if p > q else (mate, key)
            inner = f"{_uv(hi[1], hi[2], latex)} + {_uv(lo[1], lo[2], latex)}"
            yield c, f"{_pow('t', t, latex)}({inner})"
            continue
        done.add(key)
        yield c, _pow("t", t, latex) + _uv(p, q, latex)


def _render(poly, latex):
    out = []
    for c, body in _pieces(poly, latex):
        neg = c < 0
        a = -c if neg else c
        if not body:
            s = _coeff_str(a, latex)
        elif a == 1:
            s = body
        else:
            s = _coeff_str(a, latex) + body
        if not out:
            out.append(("-" if neg else "") + s)
        else:
            out.append((" - " if neg else " + ") + s)
    return "".join(out) or "0"


def to_text(poly):
    return _render(poly, False)


def to_latex(poly):
    return _render(poly, True)


def series_text(series, latex=False):
    fmt = to_latex if latex else to_text
    lines = []
    for k, c in enumerate(series.coeffs):
        lines.append(f"y^{{{k}}}: {fmt(c)}" if latex else f"y^{k}: {fmt(c)}")
    return "\n".join(lines)
