"""Tests for eigenvector selection and DOT rendering."""

import numpy as np
import pytest

from tree_spectra.cli.dot import render_dot, select_vector
from tree_spectra.errors import SelectorError
from tree_spectra.verify.analysis import TreeAnalysis


def test_render_dot_p5(p5):
    """Test sizes, colors and edges for a vector with one zero."""
    text = render_dot(p5, [1.0, 0.5, 0.0, -0.5, -1.0], zero_tol=1e-9)
    lines = text.splitlines()

    assert lines[0] == "graph tree {"
    assert lines[1].startswith("  node [")
    assert lines[2] == '  0 [width=1.0000, height=1.0000, fillcolor=gray, label="0"];'
    assert lines[3] == '  1 [width=0.5750, height=0.5750, fillcolor=gray, label="1"];'
    assert lines[4] == '  2 [width=0.1500, height=0.1500, fillcolor=white, label="2"];'
    assert lines[6] == '  4 [width=1.0000, height=1.0000, fillcolor=black, label="4"];'
    assert lines[7:11] == ["  0 -- 1;", "  1 -- 2;", "  2 -- 3;", "  3 -- 4;"]
    assert text.endswith("}\n")


def test_render_dot_zero_vector(p4):
    """Test that an all-zero vector draws minimal white vertices."""
    text = render_dot(p4, np.zeros(4), zero_tol=0.0, name="flat")

    assert text.startswith("graph flat {")
    assert text.count("fillcolor=white") == 4
    assert text.count("width=0.1500") == 4


def test_select_vector_one(star3):
    """Test that "one" picks the first exact 1-eigenvector."""
    f = select_vector(TreeAnalysis(star3), "one")

    np.testing.assert_array_equal(f, [0.0, -1.0, 1.0, 0.0])


def test_select_vector_pre_one(p4):
    """Test that "pre-one" picks an eigenvector of 1/2 on P4."""
    analysis = TreeAnalysis(p4)
    f = select_vector(analysis, "pre-one")

    np.testing.assert_allclose(analysis.laplacian.entries @ f, 0.5 * f, atol=1e-12)


def test_select_vector_index(p4):
    analysis = TreeAnalysis(p4)

    f = select_vector(analysis, "3")

    np.testing.assert_allclose(analysis.laplacian.entries @ f, 2.0 * f, atol=1e-12)


@pytest.mark.parametrize("selector, message", [("one", "multiplicity 0"), ("4", "out of range"), ("-1", "out of range"), ("x", "Unknown")])
def test_select_vector_errors(p4, selector, message):
    with pytest.raises(SelectorError, match=message):
        select_vector(TreeAnalysis(p4), selector)
