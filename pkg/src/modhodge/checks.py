"""Acceptance checks: every formula against an independent route.

Each check returns a short detail string or raises :class:`CheckFailed`.
``run_checks`` times them and enforces the per-check time limit; the
``selfcheck`` CLI command and the acceptance test module both use it.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import factorial
from typing import Callable

from .errors import ModHodgeError
from .hilbert import (
    ResolutionSpec, base_e, base_mhp, he_surface, hilb_e_23, hilb_mu_23, hilb_mu_series,
    hilb_poincare_series, partition_poincare, poincare_from_e, resolution_outputs,
)
from .moduli import ModuliSpec, mhp_character, mhp_higgs, symmetric_product_mhp
from .plethystic import pexp, pexp_product, plog
from .poly import MultiPoly, T, U, V, X, at_unit_uv, euler_value
from .series import YSeries
from .weyl import (
    MAX_CLASS_PARAM, GroupSpec, class_table, iter_classes, molien_average, molien_by_enumeration,
)

SEED = 20240611
TIME_LIMIT = 60.0


class CheckFailed(AssertionError):
    pass


def expect(cond, msg):
    if not cond:
        raise CheckFailed(msg)


def tpoly(coeffs):
    return MultiPoly.from_univariate(coeffs)


def all_specs(max_n):
    for family in ("gl", "sl", "so-odd", "sp", "so-even"):
        for n in range(2 if family == "so-even" else 1, max_n + 1):
            yield GroupSpec(family, n)


# -- the criteria --------------------------------------------------------------

def check_elliptic_partition_formula(table_fn=None):
    series = hilb_poincare_series(12)
    for n in range(1, 13):
        expect(partition_poincare(n) == series[n], f"n={n}: partition sum != product expansion")
    expect(partition_poincare(1) == (1 + T) ** 2, "n=1 is not (1+t)^2")
    expect(partition_poincare(2) == tpoly([1, 2, 3, 4, 2]), "n=2 anchor")
    expect(partition_poincare(3) == tpoly([1, 2, 3, 6, 9, 8, 3]), "n=3 anchor")
    return "n <= 12 match; n = 1, 2, 3 anchors hold"


def check_character_base_poincare(table_fn=None):
    mu = base_mhp(1, "character")
    closed = hilb_mu_23(mu, 2)
    series = hilb_mu_series(mu, 2, 5)
    for n in range(1, 6):
        target = partition_poincare(n)
        expect(at_unit_uv(series[n]) == target, f"series route, n={n}")
        if n in (2, 3):
            expect(at_unit_uv(closed[n - 2]) == target, f"closed form, n={n}")
    return "P(Hilb^n G_m^2) = P(Hilb^n T*C) for n <= 5"


def check_specialization_identity(table_fn=None):
    count = 0
    for g in all_specs(4):
        for d in (1, 2, 3):
            h = at_unit_uv(mhp_higgs(ModuliSpec(g, d, "higgs")))
            c = at_unit_uv(mhp_character(ModuliSpec(g, d, "character")))
            expect(h == c, f"{g.label}, d={d}: Higgs and character Poincare polynomials differ")
            count += 1
    return f"{count} (group, d) pairs"


MOLIEN_FACTORS = ([("tuv", 2)], [("tu", 1), ("tv", 1)])
MOLIEN_LIMITS = {"gl": 6, "sl": 6, "sp": 4, "so-odd": 4, "so-even": 4}


def check_molien_oracle(table_fn=None):
    table_fn = table_fn or class_table
    count = 0
    for family, top in MOLIEN_LIMITS.items():
        for n in range(2 if family == "so-even" else 1, top + 1):
            g = GroupSpec(family, n)
            table = table_fn(g)
            for factors in MOLIEN_FACTORS:
                try:
                    via_table = molien_average(table, factors)
                except ModHodgeError as exc:
                    raise CheckFailed(f"{g.label}: class-table average failed ({exc})") from exc
                expect(via_table == molien_by_enumeration(g, factors),
                       f"{g.label} {factors}: class table != element enumeration")
                count += 1
    return f"{count} averages agree with enumeration"


def check_class_tables(table_fn=None):
    # streams classes by default: the n = 30 hyperoctahedral tables have ~6e5 classes
    for g in all_specs(MAX_CLASS_PARAM):
        classes = table_fn(g).classes if table_fn else iter_classes(g)
        n = g.n
        expected = {"gl": factorial(n), "sl": factorial(n), "so-even": 2 ** (n - 1) * factorial(n)}
        order = expected.get(g.family, 2**n * factorial(n))
        ident = tuple(((1 + T) ** g.rank).univariate())
        total, seen_identity = 0, False
        for c in classes:
            total += c.size
            seen_identity = seen_identity or (c.size == 1 and c.charpoly == ident)
        expect(total == order, f"{g.label}: class sizes sum to {total}, expected {order}")
        expect(seen_identity, f"{g.label}: identity class with charpoly (1+x)^{g.rank} missing")
    return f"all families, n <= {MAX_CLASS_PARAM}"


def check_symmetric_product(table_fn=None):
    for d in (1, 2):
        mu_x = base_mhp(d, "higgs")
        for n in range(1, 5):
            expect(mhp_higgs(ModuliSpec(GroupSpec("gl", n), d)) == symmetric_product_mhp(mu_x, n),
                   f"GL({n}), d={d}: Weyl average != Sym^n")
    return "GL(n), n <= 4, d <= 2"


def random_series(rng, order=12):
    terms = {}
    for k in rng.sample(range(1, order + 1), rng.randint(1, 3)):
        poly = MultiPoly()
        for _ in range(rng.randint(1, 2)):
            c = rng.choice([-2, -1, 1, 2, 3])
            poly = poly + MultiPoly.monomial(rng.randint(0, 2), rng.randint(0, 1), rng.randint(0, 1), c)
        terms[k] = poly
    return YSeries.from_terms(order, terms)


def check_plethystic_roundtrip(table_fn=None):
    rng = random.Random(SEED)
    for i in range(100):
        f = random_series(rng)
        for signed in (False, True):
            expect(plog(pexp(f, signed), signed) == f, f"round trip {i}, signed={signed}")
    singles = 0
    for c in (1, 2, -1, -3):
        for mono in ((0, 0, 0), (1, 0, 0), (0, 1, 1), (1, 1, 0), (2, 1, 1), (3, 1, 2)):
            for k in (1, 2, 3):
                f = YSeries.from_terms(12, {k: MultiPoly.monomial(*mono, c)})
                for signed in (False, True):
                    expect(pexp(f, signed) == pexp_product(f, signed),
                           f"exp form != product form for {c} {mono} y^{k}, signed={signed}")
                    singles += 1
    return f"200 round trips, {singles} single-monomial product checks"


def check_surface_consistency(table_fn=None):
    rng = random.Random(SEED + 1)
    samples = [X * (U - 1) * (V - 1), (X - 1) ** 2]
    for _ in range(5):
        e = MultiPoly({(0, rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-4, 4) for _ in range(4)})
        samples.append(e)
    for e in samples:
        series = he_surface(e, 3)
        h2, h3 = hilb_e_23(e, 2)
        expect(series[2] == h2 and series[3] == h3, f"closed form != surface series for E = {e!r}")
    return f"{len(samples)} surface E-polynomials"


def check_higgs_dual_route(table_fn=None):
    for n in (2, 3):
        for d in (1, 2, 3):
            out = resolution_outputs(ResolutionSpec(n, d, "higgs"))
            via_e = poincare_from_e(out.E, n * 2 * d, "pure")
            expect(via_e == at_unit_uv(out.mhp), f"n={n}, d={d}: pure conversion != mixed Hodge route")
            expect(out.routes_agree, f"n={n}, d={d}: routes flagged as disagreeing")
    return "n in {2, 3}, d <= 3"


def check_euler_and_degree(table_fn=None):
    for n in range(1, 7):
        for d in (1, 2, 3):
            mu = mhp_character(ModuliSpec(GroupSpec("gl", n), d, "character"))
            expect(euler_value(mu) == 0, f"chi(M^R(GL({n}))), d={d} is not 0")
    resolutions = 0
    for space in ("higgs", "character"):
        for d in (1, 2, 3):
            for n in range(1, (7 if d == 1 else 4)):
                out = resolution_outputs(ResolutionSpec(n, d, space))
                expect(out.euler == 0, f"chi(Hilb^{n}), {space}, d={d} is not 0")
                resolutions += 1
    for g in all_specs(4):
        for d in (1, 2, 3):
            mu = mhp_character(ModuliSpec(g, d, "character"))
            expect(mu.degree("t") == 2 * d * g.rank, f"{g.label}, d={d}: degree != 2dr")
    return f"chi = 0 on GL(n<=6) and {resolutions} resolutions; degrees = 2dr"


def check_anchors(table_fn=None):
    s = MultiPoly.monomial(1, 1, 1)
    gl2 = GroupSpec("gl", 2)
    expect(mhp_character(ModuliSpec(gl2, 1, "character")) == 1 + 2 * s + 2 * s**2 + 2 * s**3 + s**4,
           "mhp_character(GL(2), 1)")
    tu, tv = T * U, T * V
    higgs = 1 + tu + tv + 2 * T**2 * X + T**3 * (U * X + V * X) + T**4 * X**2
    expect(mhp_higgs(ModuliSpec(gl2, 1, "higgs")) == higgs, "mhp_higgs(GL(2), 1)")
    expect(hilb_e_23((X - 1) ** 2, 2)[0] == X**4 - X**3 - X + 1, "E(Hilb^2) of (uv-1)^2")
    return "3 hand-derived anchors"


@dataclass(frozen=True)
class Check:
    id: int
    title: str
    fn: Callable
    limit: float = TIME_LIMIT


CHECKS = (
    Check(1, "elliptic crepant resolution: partition formula = product expansion", check_elliptic_partition_formula, 5.0),
    Check(2, "Hilb^n(G_m^2) and Hilb^n(T*C) share Poincare polynomials", check_character_base_poincare),
    Check(3, "Higgs and character MHPs agree at u = v = 1", check_specialization_identity),
    Check(4, "Molien averages: class tables = element enumeration", check_molien_oracle),
    Check(5, "class-table sizes and identity class", check_class_tables),
    Check(6, "GL(n) Higgs MHP = Sym^n model", check_symmetric_product),
    Check(7, "plethystic round trips and product form", check_plethystic_roundtrip),
    Check(8, "Hilb^2/Hilb^3 closed forms = surface series", check_surface_consistency),
    Check(9, "Higgs resolutions: pure E->P = mixed Hodge route", check_higgs_dual_route),
    Check(10, "Euler characteristics vanish; dim M^R = 2dr", check_euler_and_degree),
    Check(11, "hand-derived anchors", check_anchors),
)


@dataclass(frozen=True)
class CheckResult:
    check: Check
    passed: bool
    seconds: float
    detail: str


def run_check(check, table_fn=None):
    start = time.perf_counter()
    try:
        detail = check.fn(table_fn=table_fn)
        passed = True
    except (CheckFailed, ModHodgeError) as exc:
        detail, passed = f"{type(exc).__name__}: {exc}", False
    seconds = time.perf_counter() - start
    if passed and seconds > check.limit:
        passed, detail = False, f"took {seconds:.1f}s, limit {check.limit:.0f}s"
    return CheckResult(check, passed, seconds, detail)


def run_checks(ids=None, table_fn=None):
    return [run_check(c, table_fn) for c in CHECKS if ids is None or c.id in ids]


def format_report(results):
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status}  [{r.check.id:2d}] {r.check.title:<66} {r.seconds:7.2f}s  {r.detail}")
    ok = sum(r.passed for r in results)
    lines.append(f"{ok}/{len(results)} checks passed")
    return "\n".join(lines)
