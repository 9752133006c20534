"""Tests for the rooted traversal order."""

from hypothesis import given

from tests.strategies import trees
from tree_spectra.trees.rooted import RootedForest


def test_rooted_path(p4):
    """Test breadth-first order and parents on P4 rooted at 0."""
    rooted = RootedForest.from_tree(p4)

    assert rooted.preorder == (0, 1, 2, 3)
    assert rooted.postorder == (3, 2, 1, 0)
    assert rooted.parent == {0: None, 1: 0, 2: 1, 3: 2}
    assert rooted.children[1] == (2,)
    assert rooted.roots == (0,)


def test_rooted_forest_with_singletons():
    """Test that each component is rooted at its smallest vertex.

    Verifies vertices without edges become their own roots.
    """
    rooted = RootedForest.from_edges([0, 1, 2, 3, 4], [(4, 3), (2, 1)])

    assert rooted.roots == (0, 1, 3)
    assert rooted.parent[2] == 1
    assert rooted.parent[4] == 3
    assert rooted.children[0] == ()


@given(trees(max_n=14))
def test_postorder_children_first(t):
    """Test that every vertex comes after its children in postorder."""
    rooted = RootedForest.from_tree(t)
    position = {v: i for i, v in enumerate(rooted.postorder)}

    for v, kids in rooted.children.items():
        assert all(position[c] < position[v] for c in kids)
