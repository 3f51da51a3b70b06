import random

import pytest

from modhodge.errors import ConversionError, UnsupportedError
from modhodge.hilbert import (
    ResolutionSpec, base_e, base_mhp, e_from_mhp, he_surface, hilb_e_23, hilb_mu_23,
    hilb_mu_series, hilb_poincare_series, partition_poincare, poincare_from_e, punctual_weights,
    resolution_outputs,
)
from modhodge.poly import ONE, T, U, V, X, MultiPoly, at_unit_uv, euler_value
from modhodge.series import YSeries


def tpoly(coeffs):
    return MultiPoly.from_univariate(coeffs)


def xpoly(coeffs):
    return MultiPoly.from_univariate(coeffs, (0, 1, 1))


def test_punctual_weights_surface():
    w = punctual_weights(2, 6)
    assert w == YSeries.from_terms(6, {n: X ** (n - 1) for n in range(1, 7)})


def test_punctual_weights_dim4():
    w = punctual_weights(4, 3)
    assert w[1] == ONE
    assert w[2] == xpoly([0, 1, 1, 1])
    assert w[3] == xpoly([0, 0, 1, 1, 2, 1, 1])


def test_punctual_weights_limits():
    with pytest.raises(UnsupportedError):
        punctual_weights(4, 4)
    with pytest.raises(UnsupportedError):
        punctual_weights(1, 2)
    tw = punctual_weights(2, 3, tate=True)
    assert tw[3] == (T**2 * X) ** 2


def test_surface_series_first_coefficient():
    rng = random.Random(3)
    for _ in range(10):
        e = MultiPoly({(0, rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-4, 4) for _ in range(3)})
        assert he_surface(e, 4)[1] == e
        assert he_surface(e, 4)[0] == ONE


def test_surface_series_triple_product():
    order = 6
    e = X * (U - 1) * (V - 1)
    prod = YSeries.one(order)
    for n in range(1, order + 1):
        def factor(mono, sign):
            return YSeries.from_terms(order, {0: ONE, n: sign * mono})

        def geom(mono):
            return YSeries.from_terms(order, {n * k: mono**k for k in range(order // n + 1)})

        un, vn = U**n, V**n
        prod = prod * factor(un * vn * V, -1) * factor(un * U * vn, -1)
        prod = prod * geom(un * U * vn * V) * geom(un * vn)
    assert he_surface(e, order) == prod


def test_hilb2_of_torus_square():
    assert he_surface((X - 1) ** 2, 2)[2] == X**4 - X**3 - X + 1
    assert hilb_e_23((X - 1) ** 2, 2)[0] == X**4 - X**3 - X + 1


def test_closed_forms_vanish_at_zero():
    for m in (2, 4, 6):
        assert hilb_e_23(MultiPoly(), m) == (MultiPoly(), MultiPoly())


def test_closed_forms_match_surface_series():
    e = X * (U - 1) * (V - 1)
    h2, h3 = hilb_e_23(e, 2)
    series = he_surface(e, 3)
    assert (h2, h3) == (series[2], series[3])


def test_mu_closed_forms():
    higgs = (1 + T * U) * (1 + T * V)
    char = (1 + T * X) ** 2
    target2 = tpoly([1, 2, 3, 4, 2])
    assert at_unit_uv(hilb_mu_23(higgs, 2)[0]) == target2
    assert at_unit_uv(hilb_mu_23(char, 2)[0]) == target2
    assert at_unit_uv(hilb_mu_23(char, 2)[1]).evaluate(1) == 32
    assert partition_poincare(3).evaluate(1) == 32


def test_mu_series_matches_closed_form_higher_dim():
    for d in (2, 3):
        mu = base_mhp(d, "higgs")
        series = hilb_mu_series(mu, 2 * d, 3)
        assert (series[2], series[3]) == hilb_mu_23(mu, 2 * d)


def test_partition_poincare_examples():
    assert partition_poincare(1) == (1 + T) ** 2
    assert partition_poincare(2) == tpoly([1, 2, 3, 4, 2])
    assert partition_poincare(3) == tpoly([1, 2, 3, 6, 9, 8, 3])


def test_poincare_series():
    s = hilb_poincare_series(10)
    assert s[0] == ONE
    assert s[2] == tpoly([1, 2, 3, 4, 2])
    for n in range(1, 11):
        assert s[n] == partition_poincare(n)
        assert euler_value(s[n]) == 0
        assert s[n].degree("t") == 2 * n and s[n].coefficient(2 * n) > 0


def test_conversions():
    for d in (1, 2):
        assert poincare_from_e(base_e(d, "higgs"), 2 * d) == (1 + T) ** (2 * d)
    for r in (1, 2, 3):
        assert poincare_from_e((X - 1) ** r, r, "round") == (1 + T) ** r
    assert poincare_from_e(ONE, 0) == ONE
    with pytest.raises(ValueError):
        poincare_from_e(ONE, 0, "other")


def test_round_conversion_fails_on_hilbert_scheme_of_torus():
    # Hilb^2(G_m^2) is not round: the round rule gives the wrong Betti numbers
    e = hilb_e_23(base_e(1, "character"), 2)[0]
    wrong = poincare_from_e(e, 4, "round")
    assert wrong == tpoly([1, 1, 0, 1, 1])
    assert wrong != partition_poincare(2)
    with pytest.raises(ConversionError):
        poincare_from_e(e, 4, "pure")


def test_duality_route():
    for d in (1, 2):
        for space in ("higgs", "character"):
            assert e_from_mhp(base_mhp(d, space), 2 * d) == base_e(d, space)


@pytest.mark.parametrize("space", ["higgs", "character"])
def test_resolution_surface(space):
    out = resolution_outputs(ResolutionSpec(2, 1, space))
    assert out.P == tpoly([1, 2, 3, 4, 2])
    assert out.euler == 0 and out.crepant and out.routes_agree


def test_resolution_large_n_surface():
    for space in ("higgs", "character"):
        for n in (4, 5, 6):
            assert resolution_outputs(ResolutionSpec(n, 1, space)).P == partition_poincare(n)


def test_resolution_fourfold():
    out = resolution_outputs(ResolutionSpec(2, 2, "higgs"))
    assert out.P.constant_term() == 1
    # Sym^2 part reaches degree 8; the P^3-bundle over the diagonal reaches 4 + 6 = 10
    assert out.P == tpoly([1, 4, 13, 32, 45, 36, 20, 12, 8, 4, 1])
    assert out.P.degree("t") == 10
    assert not out.crepant
    assert out.euler == 0
    char = resolution_outputs(ResolutionSpec(2, 2, "character"))
    assert char.P == out.P


def test_resolution_limits():
    with pytest.raises(UnsupportedError):
        ResolutionSpec(4, 2, "higgs")
    with pytest.raises(UnsupportedError):
        ResolutionSpec(2, 1, "higgs", 3)
    with pytest.raises(UnsupportedError):
        ResolutionSpec(2, 1, "bundles")
    out = resolution_outputs(ResolutionSpec(3, 1, "character", 3))
    assert out.euler == 0 and not out.crepant


def test_result_json():
    obj = resolution_outputs(ResolutionSpec(2, 1, "higgs")).to_json()
    for key in ("E", "P", "euler", "crepant", "routes_agree"):
        assert key in obj
    assert obj["euler"] == 0 and obj["crepant"] is True and obj["routes_agree"] is True
