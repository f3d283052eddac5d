"""Line bundles ``D(a,b,c) = -aE + b♦ + c♥`` on the blowup and their normalization.

The Picard group has the single relation ``♦ + ♥ = E + ♣``; divisors here
are always written with zero ``♣`` coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .criterion import CriterionReport, evaluate_C
from .rootdata import ALPHA_2, OMEGA_2, Weight


class NotAmple(ValueError):
    pass


class DegenerateScaling(ValueError):
    pass


class EmptyPolytope(ValueError):
    pass


@dataclass(frozen=True)
class BundleParams:
    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"{name} must be an int, got {v!r}")


@dataclass(frozen=True)
class NormalizedClass:
    a_n: Fraction
    b_n: Fraction


@dataclass(frozen=True)
class MomentSegment:
    base_weight: Weight
    lo: Fraction
    hi: Fraction

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def endpoints(self) -> tuple[Weight, Weight]:
        return (
            self.base_weight + ALPHA_2 * self.lo,
            self.base_weight + ALPHA_2 * self.hi,
        )


def with_relation(p: BundleParams, k: int) -> tuple[int, int, int, int]:
    """Coefficients ``(E, ♦, ♥, ♣)`` of ``D(a,b,c) + k(♦ + ♥ - E - ♣)``.

    The added vector is the relation, so the class is unchanged.
    """
    return (-p.a - k, p.b + k, p.c + k, -k)


def from_divisor(e: int, diamond: int, heart: int, club: int) -> BundleParams:
    """Rewrite ``eE + d♦ + h♥ + k♣`` in the ``D(a,b,c)`` form using the relation."""
    # k♣ = k(♦ + ♥ - E)
    return BundleParams(-(e - club), diamond + club, heart + club)


def is_ample(p: BundleParams) -> bool:
    return 0 < p.a < min(p.b, p.c)


def normalize(p: BundleParams) -> NormalizedClass:
    """Scale to ``b + c = 1`` and swap so that ``b <= c``."""
    s = p.b + p.c
    if s <= 0:
        raise DegenerateScaling(f"b + c = {s} <= 0")
    return NormalizedClass(Fraction(p.a, s), Fraction(min(p.b, p.c), s))


def moment_polytope(p: BundleParams) -> MomentSegment:
    lo = Fraction(max(-p.b, -p.c))
    hi = Fraction(min(-p.a, 0))
    if lo > hi:
        raise EmptyPolytope(f"[{lo}, {hi}] is empty for {p}")
    return MomentSegment(OMEGA_2 * (p.b + p.c), lo, hi)


def kstability_verdict(p: BundleParams) -> CriterionReport:
    if not is_ample(p):
        raise NotAmple(f"{p} is not ample: need 0 < a < min(b, c)")
    n = normalize(p)
    return evaluate_C(n.a_n, n.b_n)


def boundary_margin(p: BundleParams) -> Fraction:
    """``min(a, b - a, c - b) / (b + c)`` for ``b <= c`` (after swapping)."""
    b, c = sorted((p.b, p.c))
    return Fraction(min(p.a, b - p.a, c - b), b + c)
