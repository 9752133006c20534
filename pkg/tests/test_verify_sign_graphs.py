"""Tests for sign graphs and vanishing sets."""

import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from tests.strategies import trees
from tree_spectra.errors import VertexSetError
from tree_spectra.verify.sign_graphs import (
    borderline_entries,
    common_vanishing_set,
    relative_zero_tol,
    sign_graphs,
)


def test_sign_graphs_p4(p4):
    """Test one positive and one negative sign graph on P4."""
    decomposition = sign_graphs(p4, [1.0, 0.5, -0.5, -1.0], zero_tol=1e-9)

    assert decomposition.positive == ({0, 1},)
    assert decomposition.negative == ({2, 3},)
    assert decomposition.zeros == frozenset()
    assert decomposition.count == 2


def test_sign_graphs_with_zero(p5):
    """Test that a zero entry splits the path and is reported."""
    decomposition = sign_graphs(p5, [1.0, 0.7, 1e-17, -0.7, -1.0], zero_tol=1e-7)

    assert decomposition.all_graphs == ({0, 1}, {3, 4})
    assert decomposition.zeros == {2}


def test_sign_graphs_same_sign_split(star3):
    """Test that same-sign vertices separated by a zero form separate graphs.

    Verifies all_graphs orders positive and negative graphs together by
    smallest vertex.
    """
    decomposition = sign_graphs(star3, [0.0, 1.0, -1.0, 1.0], zero_tol=1e-9)

    assert decomposition.positive == ({1}, {3})
    assert decomposition.negative == ({2},)
    assert decomposition.all_graphs == ({1}, {2}, {3})
    assert decomposition.count == 3


def test_sign_graphs_shape_mismatch(p4):
    with pytest.raises(VertexSetError):
        sign_graphs(p4, [1.0, -1.0], zero_tol=1e-9)


def test_relative_zero_tol():
    assert relative_zero_tol([3.0, -4.0], 0.5) == 2.0
    assert relative_zero_tol(np.zeros(0), 0.5) == 0.0


def test_common_vanishing_set():
    """Test zeros and borderline vertices from basis row norms."""
    basis = np.array([[1.0, 0.0], [0.0, 0.0], [0.0, 1e-9], [0.0, 5e-7]])

    zeros, borderline = common_vanishing_set(basis, 1e-7)

    assert zeros == {1, 2}
    assert borderline == {3}


def test_common_vanishing_set_single_vector():
    """Test that a 1-D vector is treated as one basis column."""
    zeros, borderline = common_vanishing_set(np.array([1.0, 0.0, 5e-7]), 1e-7)

    assert zeros == {1}
    assert borderline == {2}


def test_borderline_entries():
    assert borderline_entries([1.0, 5e-7, 1e-8], 1e-7) == {1}


@st.composite
def trees_with_functions(draw):
    """A tree and an integer-valued vertex function on it."""
    t = draw(trees(max_n=16))
    f = draw(st.lists(st.integers(min_value=-3, max_value=3), min_size=t.n, max_size=t.n))
    return t, np.array(f, dtype=float)


@given(trees_with_functions(), st.floats(min_value=1e-3, max_value=1e3))
@hypothesis_settings(max_examples=200)
def test_sign_graphs_scaling_and_negation(tree_and_f, scale):
    """Test that positive scaling keeps the decomposition and negation swaps signs.

    The zero threshold is 0.5 before scaling, so no integer entry sits on it.
    """
    t, f = tree_and_f
    base = sign_graphs(t, f, zero_tol=0.5)
    scaled = sign_graphs(t, scale * f, zero_tol=0.5 * scale)
    negated = sign_graphs(t, -f, zero_tol=0.5)

    assert (scaled.positive, scaled.negative, scaled.zeros) == (base.positive, base.negative, base.zeros)
    assert (negated.positive, negated.negative, negated.zeros) == (base.negative, base.positive, base.zeros)
    assert base.zeros == {v for v in t.vertices if f[v] == 0}
