"""Tests for the separation around 1 and its cover bounds."""

import math
from fractions import Fraction

import numpy as np
import pytest

from tree_spectra.cover.matching import analyze_covers, enumerate_min_covers
from tree_spectra.errors import CoverError, SpectralError
from tree_spectra.spectral.eigensolver import laplacian_spectrum
from tree_spectra.spectral.laplacian import build_laplacian
from tree_spectra.spectral.separation import (
    closed_form_quotient_spectrum,
    interlaces,
    lambda_bar,
    lambda_p,
    quotient_corner,
    quotient_eigenvalues,
    quotient_matrix,
    separation,
    volume_bound,
)
from tree_spectra.trees.generators import path


@pytest.mark.parametrize(
    "fixture, cover, volume, corner",
    [
        ("p4", {1, 2}, Fraction(1, 2), Fraction(1, 2)),
        ("p4", {1, 3}, Fraction(1), Fraction(1)),
        ("p5", {1, 3}, Fraction(1), Fraction(1)),
        ("double_star_22", {0, 1}, Fraction(2, 3), Fraction(2, 3)),
        ("star5", {0}, Fraction(1), Fraction(1)),
        ("single_edge", {1}, Fraction(1), Fraction(1)),
    ],
)
def test_exact_bounds(request, fixture, cover, volume, corner):
    """Test the volume ratio and the quotient corner as exact fractions."""
    t = request.getfixturevalue(fixture)

    assert volume_bound(t, cover) == volume
    assert quotient_corner(t, cover) == corner


def test_bounds_reject_non_covers(p4):
    with pytest.raises(CoverError):
        volume_bound(p4, {0, 3})
    with pytest.raises(CoverError):
        quotient_corner(p4, set())


def test_quotient_matrix_p4(p4):
    """Test the quotient of P4 over {1, 2}, {0}, {3} and its spectrum."""
    B = quotient_matrix(build_laplacian(p4), p4, {1, 2})

    np.testing.assert_allclose(B, [[0.5, -0.25, -0.25], [-1.0, 1.0, 0.0], [-1.0, 0.0, 1.0]])
    np.testing.assert_allclose(quotient_eigenvalues(B), [0.0, 1.0, 1.5], atol=1e-12)
    assert closed_form_quotient_spectrum(4, 2, Fraction(1, 2)) == (0.0, 1.0, 1.5)


def test_quotient_matrix_single_edge(single_edge):
    B = quotient_matrix(build_laplacian(single_edge), single_edge, {1})

    np.testing.assert_array_equal(B, [[1.0, -1.0], [-1.0, 1.0]])


def test_quotient_eigenvalues_complex():
    """Test that a rotation's complex eigenvalues are rejected."""
    with pytest.raises(SpectralError, match="non-real"):
        quotient_eigenvalues(np.array([[0.0, -1.0], [1.0, 0.0]]))


def test_interlaces():
    """Test the interlacing predicate on the P4 quotient and on failures."""
    assert interlaces([0.0, 1.0, 1.5], [0.0, 0.5, 1.5, 2.0])
    assert interlaces([0.5, 1.5], [0.0, 0.5, 1.5, 2.0])
    assert not interlaces([2.5], [0.0, 1.0])
    assert not interlaces([0.0, 1.0, 2.0], [0.0, 2.0])


@pytest.mark.parametrize("n", range(3, 13))
def test_path_separation_closed_form(n):
    """Test lambda_bar on paths: sin(pi/(n-1)) for odd n, sin(pi/(2(n-1))) for even n."""
    spectrum = laplacian_spectrum(build_laplacian(path(n)))
    expected = math.sin(math.pi / (n - 1)) if n % 2 else math.sin(math.pi / (2 * (n - 1)))

    assert lambda_bar(spectrum) == pytest.approx(expected, abs=1e-10)


def test_separation_double_star(double_star_22):
    """Test the separation report of S(2,2), where both bounds are tight."""
    t = double_star_22
    spectrum = laplacian_spectrum(build_laplacian(t))
    report = separation(spectrum, analyze_covers(t), t)

    assert report.lambda_bar == pytest.approx(2 / 3)
    assert report.lambda_p == pytest.approx(1 / 3)
    assert report.bound_volume == pytest.approx(2 / 3)
    assert report.bound_quotient == pytest.approx(2 / 3)
    assert report.quotient_spectrum == pytest.approx((0.0, 1.0, 1.0, 1.0, 5 / 3))
    assert len(report.per_cover) == 1


def test_separation_all_covers_p4(p4):
    """Test that every cover gets bounds and the witness comes first."""
    spectrum = laplacian_spectrum(build_laplacian(p4))
    covers = enumerate_min_covers(p4, cap=10).covers
    report = separation(spectrum, analyze_covers(p4), p4, covers=covers)

    assert report.per_cover[0].cover == {1, 2}
    assert {b.cover for b in report.per_cover} == set(covers)
    assert len(report.per_cover) == 3
    assert report.best_volume == 0.5
    assert report.best_quotient == 0.5
    assert report.lambda_bar == pytest.approx(0.5)


def test_lambda_p_star(star5):
    """Test that a star's separation is 1 with nothing between 0 and 1."""
    spectrum = laplacian_spectrum(build_laplacian(star5))

    assert lambda_bar(spectrum) == pytest.approx(1.0)
    assert lambda_p(spectrum) == pytest.approx(0.0, abs=1e-12)
