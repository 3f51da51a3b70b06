"""Mixed Hodge, Poincare and Euler data of G-Higgs and G-character moduli over an abelian variety.

Both moduli spaces are quotients of a rank-one model tensored with the
cocharacter lattice by the Weyl group, so everything reduces to Molien-type
averages of ``det(I + m w)`` over ``W``:

* character variety ``M^R``: ``(1/|W|) sum_w det(I + tuv w)^(2d)``
* Higgs moduli ``M^H`` (and the bundle moduli ``M``, which has the same
  mixed Hodge structure): ``(1/|W|) sum_w (det(I + tu w) det(I + tv w))^d``
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import UnsupportedError
from .hilbert import base_e, base_mhp
from .plethystic import pexp
from .poly import MultiPoly, at_unit_uv, euler_value
from .series import YSeries
from .weyl import GroupSpec, class_table, molien_average

SPACES = ("higgs", "character", "bundles")
SPACE_ALIASES = {"higgs": "higgs", "char": "character", "character": "character",
                 "bundle": "bundles", "bundles": "bundles"}


@dataclass(frozen=True)
class ModuliSpec:
    group: GroupSpec
    d: int
    space: str = "higgs"
    torus_exponent: Optional[int] = None

    def __post_init__(self):
        space = SPACE_ALIASES.get(self.space)
        if space is None:
            raise UnsupportedError(f"unknown space {self.space!r}; expected higgs, character or bundles")
        object.__setattr__(self, "space", space)
        if not isinstance(self.d, int) or self.d < 1:
            raise UnsupportedError("abelian dimension d must be a positive integer")
        if self.torus_exponent is not None:
            if space != "character":
                raise UnsupportedError("a torus exponent override only applies to the character space")
            if self.torus_exponent < 1:
                raise UnsupportedError("torus exponent must be a positive integer")

    @property
    def torus_rank(self):
        """Rank of the free abelian group whose character variety is described."""
        return self.torus_exponent or 2 * self.d

    @property
    def dim(self):
        """Complex dimension ``2 d r`` (or ``r' r`` with an override)."""
        if self.space == "bundles":
            return self.d * self.group.rank
        return self.torus_rank * self.group.rank


def mhp_character(spec):
    if spec.space != "character":
        raise UnsupportedError("mhp_character needs space = character")
    return molien_average(class_table(spec.group), [("tuv", spec.torus_rank)])


def mhp_higgs(spec):
    """Also returned for ``space = bundles``: the two mixed Hodge structures coincide."""
    if spec.space not in ("higgs", "bundles"):
        raise UnsupportedError("mhp_higgs needs space = higgs or bundles")
    return molien_average(class_table(spec.group), [("tu", spec.d), ("tv", spec.d)])


def mhp(spec):
    return mhp_character(spec) if spec.space == "character" else mhp_higgs(spec)


def poincare_moduli(spec):
    return at_unit_uv(mhp(spec))


def euler_moduli(spec):
    return euler_value(mhp(spec))


class BaseInputs(NamedTuple):
    E_higgs: MultiPoly
    E_char: MultiPoly
    mu_higgs: MultiPoly
    mu_char: MultiPoly
    m: int


def base_inputs(d):
    """E-polynomials and mixed Hodge polynomials of ``T*A`` and ``G_m^(2d)``, plus their dimension."""
    if d < 1:
        raise UnsupportedError("abelian dimension d must be >= 1")
    return BaseInputs(base_e(d, "higgs"), base_e(d, "character"),
                      base_mhp(d, "higgs"), base_mhp(d, "character"), 2 * d)


def symmetric_product_mhp(mu_x, n):
    """Mixed Hodge polynomial of ``Sym^n X``: the ``y^n`` coefficient of the signed ``PExp(mu_X y)``."""
    series = YSeries.from_terms(max(n, 1), {1: mu_x})
    return pexp(series, signed=True)[n].require_integral("Sym^n mixed Hodge polynomial")
