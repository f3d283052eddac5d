from fractions import Fraction

import pytest
from hypothesis import strategies as st

from kstability.ratpoly import BiPoly, UniPoly

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=50)


@st.composite
def unipolys(draw, max_degree=6):
    cs = draw(st.lists(small_fractions, max_size=max_degree + 1))
    return UniPoly(cs)


@st.composite
def bipolys(draw, max_degree=4):
    terms = draw(
        st.dictionaries(
            st.tuples(st.integers(0, max_degree), st.integers(0, max_degree)).filter(
                lambda e: e[0] + e[1] <= max_degree
            ),
            small_fractions,
            max_size=8,
        )
    )
    return BiPoly(terms)


def sympy_bipoly(f: BiPoly):
    import sympy as sp

    a, b = sp.symbols("a b")
    return a, b, sum(
        (sp.Rational(c.numerator, c.denominator) * a**i * b**j for (i, j), c in f.terms.items()),
        sp.Integer(0),
    )


def to_fraction(x) -> Fraction:
    return Fraction(int(x.p), int(x.q))


# --------------------------------------------------------------------------
# acceptance reporting: one line per criterion in the terminal summary

_acceptance: dict[str, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _acceptance.setdefault(mark.args[0], []).append((item.name, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_acceptance, key=lambda s: int(s.split(".")[0])):
        results = _acceptance[label]
        ok = all(o == "passed" for _, o in results)
        failed = [n for n, o in results if o != "passed"]
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        if failed:
            line += f"  (failed: {', '.join(failed)})"
        terminalreporter.write_line(line)
