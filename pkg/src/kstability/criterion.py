"""The K-stability quantity C(a, b) for L(a, b, 1 - b).

``C`` is assembled from four closed-form building blocks in ``(a, b)``:

    C = I_P * W_1 - I_tP * W_0

with ``I_P = ∫P``, ``I_tP = ∫tP`` over ``[-b, -a]``, and the boundary terms
``W_0 = P(-b) + P(-a) + 2∫Q`` and ``W_1 = -bP(-b) - aP(-a) + 2∫tQ``.

Two routes exist.  ``"displayed"`` uses the published closed forms of the
four blocks; ``"quadrature"`` recomputes each block from P and Q by exact
antidifferentiation.  The routes agree on ``I_P``, ``I_tP`` and ``W_0`` but
not on ``W_1``: quadrature gives ``(-b^4 - 7a^4 + 6(b^3 + a^3) - 4b^2)/4``
where the closed form has ``+4a^2``.  Every published consequence (the
``b = 1/2``, ``a = b`` and ``a = 0`` factorizations) follows from the closed
form, so ``"displayed"`` is the default and :func:`route_discrepancy`
exposes the gap.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from . import kernels
from .ratpoly import (
    A,
    B,
    BiPoly,
    Number,
    UniPoly,
    divide_linear_factor,
    substitute_line,
    symbolic_integral_ab,
)
from .rootdata import ConsistencyFailure, build_P, stated_Q

# endpoint convention: s_minus = -b, s_plus = -a
S_MINUS = -B
S_PLUS = -A

DISPLAYED_INT_P = (B**4 - A**4 - 2 * (B**3 - A**3) + B**2 - A**2) * Fraction(1, 4)
DISPLAYED_INT_TP = (
    -24 * (B**5 - A**5) + 45 * (B**4 - A**4) - 20 * (B**3 - A**3)
) * Fraction(1, 120)
DISPLAYED_W0 = (4 * A**3 - 3 * (A**2 + B**2) + 3 * B - A) * Fraction(1, 2)
DISPLAYED_W1 = (-(B**4) - 7 * A**4 + 6 * (B**3 + A**3) + 4 * A**2) * Fraction(1, 4)

# restrictions and their factored forms
SEXTIC_HALF = UniPoly([249, 884, 524, 1888, -464, -2496, 576])
C_AT_B_HALF = (UniPoly([1, -2]) ** 2 * SEXTIC_HALF).scale(Fraction(1, 61440))
C_TILDE_ON_DIAGONAL = UniPoly([0, 0, 0, 1]) * UniPoly([1, -2]) * UniPoly([1, -1])
CUBIC_A_ZERO = UniPoly([20, -15, -11, 5])
C_AT_A_ZERO = (UniPoly([0, 0, 0, 0, 1]) * UniPoly([1, -1]) * CUBIC_A_ZERO).scale(
    Fraction(1, 80)
)

ROUTES = ("displayed", "quadrature")


class Verdict(enum.Enum):
    KSTABLE = "KStable"
    UNSTABLE = "Unstable"
    BOUNDARY_ZERO = "BoundaryZero"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CriterionReport:
    a: Fraction
    b: Fraction
    value: Fraction
    verdict: Verdict


@dataclass(frozen=True)
class CriterionData:
    P: UniPoly
    Q: UniPoly
    s_minus: BiPoly = S_MINUS
    s_plus: BiPoly = S_PLUS


@lru_cache(maxsize=None)
def criterion_data() -> CriterionData:
    return CriterionData(build_P(), stated_Q())


def _point_value(p: UniPoly, x: BiPoly) -> BiPoly:
    return p.compose_linear(x)


def quadrature_blocks(P: UniPoly | None = None, Q: UniPoly | None = None) -> dict[str, BiPoly]:
    """The four building blocks recomputed from P and Q (defaults: the stored pair)."""
    d = criterion_data()
    P = d.P if P is None else P
    Q = d.Q if Q is None else Q
    Pm, Pp = _point_value(P, d.s_minus), _point_value(P, d.s_plus)
    return {
        "int_P": symbolic_integral_ab(P, 1),
        "int_tP": symbolic_integral_ab(P, "t"),
        "W0": Pm + Pp + 2 * symbolic_integral_ab(Q, 1),
        "W1": d.s_minus * Pm + d.s_plus * Pp + 2 * symbolic_integral_ab(Q, "t"),
    }


def displayed_blocks() -> dict[str, BiPoly]:
    return {
        "int_P": DISPLAYED_INT_P,
        "int_tP": DISPLAYED_INT_TP,
        "W0": DISPLAYED_W0,
        "W1": DISPLAYED_W1,
    }


def boundary_term_P(weighted: bool, check: bool = True) -> BiPoly:
    """``W_1`` if ``weighted`` else ``W_0``, from quadrature.

    With ``check`` the result is compared to the closed form and a
    :class:`ConsistencyFailure` raised on mismatch (this fires for ``W_1``).
    """
    key = "W1" if weighted else "W0"
    got = quadrature_blocks()[key]
    if check:
        want = displayed_blocks()[key]
        if got != want:
            raise ConsistencyFailure(f"{key}: quadrature - closed form = {got - want}")
    return got


def block_identities(
    P: UniPoly | None = None, Q: UniPoly | None = None
) -> list[tuple[str, bool, BiPoly]]:
    """``(name, holds, quadrature - closed form)`` for each building block."""
    q, d = quadrature_blocks(P, Q), displayed_blocks()
    return [(k, q[k] == d[k], q[k] - d[k]) for k in ("int_P", "int_tP", "W0", "W1")]


def _assemble(blocks: dict[str, BiPoly]) -> BiPoly:
    return blocks["int_P"] * blocks["W1"] - blocks["int_tP"] * blocks["W0"]


@lru_cache(maxsize=None)
def assemble_C(route: str = "displayed") -> BiPoly:
    if route == "displayed":
        return _assemble(displayed_blocks())
    if route == "quadrature":
        return _assemble(quadrature_blocks())
    raise ValueError(f"unknown route {route!r}")


def route_discrepancy() -> BiPoly:
    """``C_quadrature - C_displayed``; zero iff the two routes agree."""
    return assemble_C("quadrature") - assemble_C("displayed")


@lru_cache(maxsize=None)
def reduced_C_tilde(route: str = "displayed") -> BiPoly:
    """``C / (b - a)``, checked on the diagonal against ``a^3(1-2a)(1-a)``."""
    ct = divide_linear_factor(assemble_C(route), "b-a")
    if route == "displayed" and substitute_line(ct, "b=a") != C_TILDE_ON_DIAGONAL:
        raise ConsistencyFailure("C/(b-a) on b=a is not a^3(1-2a)(1-a)")
    return ct


class HomogenizedInt:
    """Integer form of a BiPoly for fast exact evaluation at ``(p/q, r/q)``.

    ``f(p/q, r/q) = eval_homogeneous(terms, p, r, q, n) / (den * q**n)``.
    """

    def __init__(self, f: BiPoly):
        self.degree = max(f.total_degree, 0)
        self.den = lcm(*(c.denominator for c in f.terms.values())) if f.terms else 1
        self.terms = [(i, j, int(c * self.den)) for (i, j), c in f.terms.items()]

    def sign_at(self, p: int, r: int, q: int) -> int:
        v = kernels.eval_homogeneous(self.terms, p, r, q, self.degree)
        return (v > 0) - (v < 0)

    def value_at(self, a: Number, b: Number) -> Fraction:
        a, b = Fraction(a), Fraction(b)
        q = lcm(a.denominator, b.denominator)
        p, r = a.numerator * (q // a.denominator), b.numerator * (q // b.denominator)
        v = kernels.eval_homogeneous(self.terms, p, r, q, self.degree)
        return Fraction(v, self.den * q**self.degree)


@lru_cache(maxsize=None)
def homogenized_C(route: str = "displayed") -> HomogenizedInt:
    return HomogenizedInt(assemble_C(route))


def verdict_for(value: Fraction) -> Verdict:
    if value > 0:
        return Verdict.KSTABLE
    if value < 0:
        return Verdict.UNSTABLE
    return Verdict.BOUNDARY_ZERO


def evaluate_C(a: Number, b: Number, route: str = "displayed") -> CriterionReport:
    a, b = Fraction(a), Fraction(b)
    value = homogenized_C(route).value_at(a, b)
    return CriterionReport(a, b, value, verdict_for(value))
