"""Shared pytest fixtures for Tree-Spectra tests."""

import pytest

from tree_spectra.config.settings import Settings
from tree_spectra.trees.generators import double_star, join_through_vertex, path, star
from tree_spectra.trees.tree import from_edge_list


@pytest.fixture
def default_settings():
    """Fixture providing a Settings instance with every default.

    Returns
    -------
    Settings
        Fresh default settings.
    """
    return Settings()


@pytest.fixture
def lapack_settings():
    """Fixture providing Settings that use the LAPACK eigensolver.

    Used by the larger ensemble runs.

    Returns
    -------
    Settings
        Default settings with ``eigensolver="lapack"``.
    """
    return Settings().override(eigensolver="lapack")


@pytest.fixture
def single_edge():
    """The tree on two vertices."""
    return from_edge_list([(0, 1)])


@pytest.fixture
def p4():
    """Path 0 - 1 - 2 - 3."""
    return path(4)


@pytest.fixture
def p5():
    """Path on five vertices; its pre-1 eigenvector vanishes at vertex 2."""
    return path(5)


@pytest.fixture
def star3():
    """Star K_{1,3} with center 0."""
    return star(3)


@pytest.fixture
def star5():
    """Star K_{1,5} with center 0."""
    return star(5)


@pytest.fixture
def double_star_22():
    """Double star S(2,2): centers 0 and 1, leaves 2, 3 on 0 and 4, 5 on 1.

    Spectrum {0, 1/3, 1, 1, 5/3, 2}; separation and both cover bounds 2/3.
    """
    return double_star(2, 2)


@pytest.fixture
def spider():
    """Two copies of K_{1,2} joined through a middle vertex 6 at their centers 0 and 3.

    The pre-1 eigenvector is antisymmetric and vanishes at the middle vertex.
    """
    return join_through_vertex(star(2), star(2), 0, 0)
