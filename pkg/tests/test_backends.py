import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scatlib import _backend

py = _backend.pykernels
cy = _backend.ckernels

pytestmark = pytest.mark.skipif(cy is None, reason="compiled kernels not built")

words = st.integers(1, 4).flatmap(
    lambda s: st.tuples(st.just(s), st.lists(st.integers(1, s), max_size=40))
)


def _arr(letters):
    return np.asarray(letters, dtype=np.int64)


def _same(a, b):
    if isinstance(a, tuple):
        assert len(a) == len(b)
        for x, y in zip(a, b):
            _same(x, y)
    else:
        assert list(np.asarray(a).tolist()) == list(np.asarray(b).tolist())


@settings(max_examples=300, deadline=None)
@given(words)
def test_arch_ends_parity(data):
    sigma, letters = data
    w = _arr(letters)
    _same(py.arch_ends(w, sigma, sigma + 1), cy.arch_ends(w, sigma, sigma + 1))


@settings(max_examples=300, deadline=None)
@given(words)
def test_suffix_tables_parity(data):
    sigma, letters = data
    w = _arr(letters)
    _same(py.suffix_tables(w, sigma, sigma + 1), cy.suffix_tables(w, sigma, sigma + 1))


@settings(max_examples=300, deadline=None)
@given(words, st.integers(0, 8))
def test_coordinates_and_normal_form_parity(data, k):
    sigma, letters = data
    w = _arr(letters)
    x = py.x_coordinates(w, sigma + 1)
    _same(x, cy.x_coordinates(w, sigma + 1))
    xs = np.asarray(x, dtype=np.int64)
    _same(py.y_coordinates(w, sigma + 1, k, xs), cy.y_coordinates(w, sigma + 1, k, xs))
    _same(py.normal_form(w, sigma + 1, k), cy.normal_form(w, sigma + 1, k))


def test_switching():
    previous = _backend.use("python")
    try:
        assert _backend.BACKEND == "python"
        with pytest.raises(ValueError):
            _backend.use("fortran")
    finally:
        _backend.use(previous)
    assert "python" in _backend.available()
