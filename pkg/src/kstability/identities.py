"""Exact identity and inequality checks for P, the building blocks and C."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .criterion import (
    C_AT_A_ZERO,
    C_AT_B_HALF,
    C_TILDE_ON_DIAGONAL,
    CUBIC_A_ZERO,
    assemble_C,
    block_identities,
    evaluate_C,
)
from .ratpoly import UniPoly, divide_linear_factor, substitute_line
from .rootdata import STATED_P, ConsistencyFailure, build_P

BLOCK_LABELS = {
    "int_P": "int_{-b}^{-a} P dt closed form",
    "int_tP": "int_{-b}^{-a} tP dt closed form",
    "W0": "P(-b)+P(-a)+2 int Q dt closed form",
    "W1": "-bP(-b)-aP(-a)+2 int tQ dt closed form",
}


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def identity_suite(P: UniPoly | None = None, Q: UniPoly | None = None) -> list[Check]:
    """The eight exact identities.  ``P``/``Q`` override the stored pair
    for the building-block checks (fault injection).
    """
    out = []
    try:
        built = build_P()
        out.append(Check("P = (-2t^3-3t^2-t)/2 from root pairings", built == STATED_P))
    except ConsistencyFailure as exc:
        out.append(Check("P = (-2t^3-3t^2-t)/2 from root pairings", False, str(exc)))
    for key, ok, diff in block_identities(P, Q):
        out.append(Check(BLOCK_LABELS[key], ok, "" if ok else f"quadrature - closed form = {diff}"))

    C = assemble_C()
    half = substitute_line(C, "b", Fraction(1, 2))
    out.append(
        Check(
            "C(a,1/2) = (1-2a)^2(576a^6-...+249)/61440",
            half == C_AT_B_HALF,
            "" if half == C_AT_B_HALF else f"difference {half - C_AT_B_HALF}",
        )
    )
    try:
        diag = substitute_line(divide_linear_factor(C, "b-a"), "b=a")
        out.append(Check("C/(b-a) at b=a = a^3(1-2a)(1-a)", diag == C_TILDE_ON_DIAGONAL))
    except ArithmeticError as exc:
        out.append(Check("C/(b-a) at b=a = a^3(1-2a)(1-a)", False, str(exc)))
    zero = substitute_line(C, "a", 0)
    out.append(
        Check(
            "C(0,b) = b^4(1-b)(5b^3-11b^2-15b+20)/80",
            zero == C_AT_A_ZERO,
            "" if zero == C_AT_A_ZERO else f"difference {zero - C_AT_A_ZERO}",
        )
    )
    return out


def _random_open(rng: random.Random, lo: Fraction, hi: Fraction, include_hi=False) -> Fraction:
    den = rng.randint(2, 10**6)
    while True:
        x = lo + (hi - lo) * Fraction(rng.randint(0, den), den)
        if lo < x < hi or (include_hi and x == hi):
            return x


def b_half_chain(a: Fraction) -> bool:
    """``C(a,1/2) > (1-2a)^2 (576a^6+1032a^3+524a^2+884a+249)/61440 > 249(1-2a)^2/61440 > 0``."""
    c = evaluate_C(a, Fraction(1, 2)).value
    sq = (1 - 2 * a) ** 2 / 61440
    mid = sq * UniPoly([249, 884, 524, 1032, 0, 0, 576])(a)
    low = 249 * sq
    return c > mid > low > 0


def a_zero_chain(b: Fraction) -> bool:
    """``C(0,b) > b^4(1-b)(39/4)/80 > 0``."""
    c = evaluate_C(0, b).value
    low = b**4 * (1 - b) * Fraction(39, 4) / 80
    return c > low > 0 and CUBIC_A_ZERO(b) > Fraction(39, 4)


def inequality_chains(samples: int = 1000, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    half = Fraction(1, 2)
    bad_a = [a for a in (_random_open(rng, Fraction(0), half) for _ in range(samples)) if not b_half_chain(a)]
    bad_b = [
        b
        for b in (_random_open(rng, Fraction(0), half, include_hi=True) for _ in range(samples))
        if not a_zero_chain(b)
    ]
    return [
        Check(
            f"C(a,1/2) > 249(1-2a)^2/61440 at {samples} rational a in (0,1/2)",
            not bad_a,
            f"fails at a = {bad_a[0]}" if bad_a else "",
        ),
        Check(
            f"C(0,b) > b^4(1-b)(39/4)/80 at {samples} rational b in (0,1/2]",
            not bad_b,
            f"fails at b = {bad_b[0]}" if bad_b else "",
        ),
    ]
