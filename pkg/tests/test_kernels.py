import pytest
from hypothesis import given
from hypothesis import strategies as st

from kstability import _kernels_py, kernels

big = st.integers(-(10**40), 10**40)

compiled = pytest.mark.skipif(
    "compiled" not in kernels.available_backends(), reason="extension not built"
)


def _compiled():
    from kstability import _kernels

    return _kernels


@compiled
@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4), big), max_size=10), big, big, big)
def test_eval_homogeneous_backends_agree(terms, p, r, q):
    terms = [(i, j, c) for i, j, c in terms if i + j <= 6]
    assert _compiled().eval_homogeneous(terms, p, r, q, 6) == _kernels_py.eval_homogeneous(terms, p, r, q, 6)


def test_eval_homogeneous_value():
    # 3 p^2 q + 2 r^3 at (2, 5, 7), degree 3
    assert _kernels_py.eval_homogeneous([(2, 0, 3), (0, 3, 2)], 2, 5, 7, 3) == 3 * 4 * 7 + 2 * 125


@compiled
@given(st.lists(big, min_size=5, max_size=5), st.data())
def test_transfer_backends_agree(h, data):
    rows = data.draw(st.lists(st.lists(st.tuples(st.integers(0, 4), st.integers(-9, 9)), max_size=5), max_size=6))
    assert _compiled().transfer(rows, h) == _kernels_py.transfer(rows, h)


@given(st.lists(big, max_size=8))
def test_content_reduce(h):
    for mod in [_kernels_py] + ([_compiled()] if "compiled" in kernels.available_backends() else []):
        red, g = mod.content_reduce(h)
        assert g >= 1
        assert [x * g for x in red] == list(h)
        assert mod.all_positive(red) == mod.all_positive(h)


def test_use_backend_errors():
    with pytest.raises(ValueError):
        kernels.use_backend("gpu")
