"""SL3 weight data and the Duistermaat-Heckman style polynomial P(t).

Weights are stored in the fundamental-weight basis, so ``Weight(1, 0)`` is
the first fundamental weight and ``Weight(0, 1)`` the second.  The simple
root ``alpha_2`` is ``2*w2 - w1 = Weight(-1, 2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ratpoly import Number, UniPoly


class UnknownRoot(KeyError):
    pass


class ConsistencyFailure(AssertionError):
    """A recomputed quantity disagrees with its stated closed form."""


@dataclass(frozen=True)
class Weight:
    x1: Fraction
    x2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x1", Fraction(self.x1))
        object.__setattr__(self, "x2", Fraction(self.x2))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.x1 + other.x1, self.x2 + other.x2)

    def __mul__(self, c: Number) -> "Weight":
        return Weight(c * self.x1, c * self.x2)

    __rmul__ = __mul__


OMEGA_1 = Weight(1, 0)
OMEGA_2 = Weight(0, 1)
ALPHA_2 = OMEGA_2 * 2 + OMEGA_1 * -1
RHO = OMEGA_1 + OMEGA_2

# The character chi and the spherical root sigma of the blowup.
CHI = OMEGA_2
SIGMA = ALPHA_2

ALPHA1 = "alpha1"
ALPHA2 = "alpha2"
ALPHA12 = "alpha1+alpha2"
POSITIVE_ROOTS = (ALPHA1, ALPHA2, ALPHA12)

# <alpha, x1 w1 + x2 w2> / <alpha_1, rho>, as linear functionals of (x1, x2).
_PAIRING = {
    ALPHA1: (Fraction(1), Fraction(0)),
    ALPHA2: (Fraction(0), Fraction(1)),
    ALPHA12: (Fraction(1, 2), Fraction(1, 2)),
}


def pairing_ratio(root: str, w: Weight) -> Fraction:
    try:
        c1, c2 = _PAIRING[root]
    except KeyError:
        raise UnknownRoot(root) from None
    return c1 * w.x1 + c2 * w.x2


def weight_line() -> tuple[UniPoly, UniPoly]:
    """Coordinates of ``chi + t*sigma`` as polynomials in ``t``: ``(-t, 1 + 2t)``."""
    x1 = UniPoly([CHI.x1, SIGMA.x1])
    x2 = UniPoly([CHI.x2, SIGMA.x2])
    return x1, x2


def _pairing_poly(root: str) -> UniPoly:
    c1, c2 = _PAIRING[root]
    x1, x2 = weight_line()
    return x1.scale(c1) + x2.scale(c2)


STATED_P = UniPoly([0, -1, -3, -2]).scale(Fraction(1, 2))


def build_P() -> UniPoly:
    """Product of the three pairing ratios along ``chi + t*sigma``.

    Checked against ``(-2t^3 - 3t^2 - t)/2``; a mismatch raises
    :class:`ConsistencyFailure`.
    """
    p = UniPoly.constant(1)
    for root in POSITIVE_ROOTS:
        p = p * _pairing_poly(root)
    if p != STATED_P:
        raise ConsistencyFailure(f"product of pairings {p} != {STATED_P}")
    return p


def stated_Q() -> UniPoly:
    """``(1 - 3t^2)/2``.

    Taken as given input: it comes from the general rank-one criterion and
    is not rederived here.
    """
    return UniPoly([Fraction(1, 2), 0, Fraction(-3, 2)])
