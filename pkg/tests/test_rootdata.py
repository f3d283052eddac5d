from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import small_fractions
from kstability.ratpoly import UniPoly
from kstability.rootdata import (
    ALPHA1,
    ALPHA12,
    ALPHA2,
    ALPHA_2,
    CHI,
    OMEGA_2,
    POSITIVE_ROOTS,
    RHO,
    STATED_P,
    UnknownRoot,
    Weight,
    build_P,
    pairing_ratio,
    stated_Q,
    weight_line,
)

F = Fraction


def test_alpha2_in_weight_basis():
    assert ALPHA_2 == Weight(-1, 2)
    assert CHI == OMEGA_2 == Weight(0, 1)
    assert RHO == Weight(1, 1)


def test_pairing_examples():
    assert pairing_ratio(ALPHA2, OMEGA_2) == 1
    assert pairing_ratio(ALPHA12, RHO) == 1
    assert pairing_ratio(ALPHA1, ALPHA_2) == -1
    with pytest.raises(UnknownRoot):
        pairing_ratio("alpha3", RHO)


def test_each_root_pairs_to_one_with_rho():
    # the denominator of each displayed ratio is <alpha_1, rho>
    for root in POSITIVE_ROOTS:
        assert pairing_ratio(root, RHO) == 1


@given(small_fractions, small_fractions, small_fractions, small_fractions, small_fractions)
def test_pairing_is_linear(x1, x2, y1, y2, c):
    w, v = Weight(x1, x2), Weight(y1, y2)
    for root in POSITIVE_ROOTS:
        assert pairing_ratio(root, w + v) == pairing_ratio(root, w) + pairing_ratio(root, v)
        assert pairing_ratio(root, w * c) == c * pairing_ratio(root, w)


def test_weight_line():
    x1, x2 = weight_line()
    assert (x1(0), x2(0)) == (0, 1)
    assert (x1(1), x2(1)) == (-1, 3)
    assert (x1(F(-1, 2)), x2(F(-1, 2))) == (F(1, 2), 0)


def test_build_P():
    p = build_P()
    assert p == UniPoly([0, -1, -3, -2]).scale(F(1, 2))
    assert p(0) == 0
    assert STATED_P(-1) == 0 and p(-1) == 0
    factored = UniPoly([0, -1]) * UniPoly([1, 2]) * UniPoly([1, 1])
    assert factored.scale(F(1, 2)) == p


def test_stated_Q():
    q = stated_Q()
    assert q(0) == F(1, 2)
    assert q(1) == -1
    assert q(F(-1, 2)) == F(1, 8)
