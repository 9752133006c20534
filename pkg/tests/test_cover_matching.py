"""Tests for minimum vertex covers and maximum matchings."""

import networkx as nx
import pytest
from hypothesis import given

from tests.strategies import trees
from tree_spectra.cover.matching import (
    analyze_covers,
    cover_membership,
    enumerate_min_covers,
    forest_min_cover_size,
    is_vertex_cover,
    max_matching,
    min_cover_with_forced,
    min_vertex_cover,
)
from tree_spectra.cover.oracles import brute_force_min_covers
from tree_spectra.errors import CoverError
from tree_spectra.trees.generators import random_tree, star


@pytest.mark.parametrize(
    "fixture, size, witness",
    [
        ("single_edge", 1, {1}),
        ("p4", 2, {1, 2}),
        ("p5", 2, {1, 3}),
        ("star3", 1, {0}),
        ("double_star_22", 2, {0, 1}),
        ("spider", 2, {0, 3}),
    ],
)
def test_min_vertex_cover_witness(request, fixture, size, witness):
    """Test the cover size and the deterministic witness on small trees.

    Verifies the tie-break: a root prefers to stay out of the cover and a
    child of a cover vertex prefers to join it.
    """
    t = request.getfixturevalue(fixture)

    assert min_vertex_cover(t) == (size, witness)


def test_max_matching_p4(p4):
    """Test that leaf pruning matches both end edges of P4."""
    assert max_matching(p4) == {(0, 1), (2, 3)}


def test_max_matching_star(star5):
    """Test that a star has a matching of one edge."""
    assert len(max_matching(star5)) == 1


def test_cover_membership(p4, p5, star5, single_edge):
    """Test the union of minimum covers and its complement."""
    assert cover_membership(p4) == (frozenset(range(4)), frozenset())
    assert cover_membership(p5) == ({1, 3}, {0, 2, 4})
    assert cover_membership(star5) == ({0}, {1, 2, 3, 4, 5})
    assert cover_membership(single_edge) == ({0, 1}, frozenset())


def test_min_cover_with_forced(p4):
    """Test constrained minima, infeasible constraints and overlaps."""
    assert min_cover_with_forced(p4) == 2
    assert min_cover_with_forced(p4, forced_in=[0]) == 2
    assert min_cover_with_forced(p4, forced_in=[0, 3]) == 3
    assert min_cover_with_forced(p4, forced_out=[1]) == 2
    assert min_cover_with_forced(p4, forced_out=[1, 2]) is None

    with pytest.raises(CoverError, match="both in and out"):
        min_cover_with_forced(p4, forced_in=[1], forced_out=[1])


def test_forest_min_cover_size():
    """Test forests with isolated vertices and several components."""
    assert forest_min_cover_size([0, 1, 2, 3, 4], [(0, 1), (2, 3)]) == 2
    assert forest_min_cover_size([7], []) == 0
    assert forest_min_cover_size(star(4).vertices, star(4).edges) == 1


def test_enumerate_min_covers_p4(p4):
    """Test that P4 has exactly the covers {1,2}, {1,3} and {0,2}."""
    enumeration = enumerate_min_covers(p4, cap=10)

    assert set(enumeration.covers) == {frozenset({1, 2}), frozenset({1, 3}), frozenset({0, 2})}
    assert len(enumeration.covers) == 3
    assert not enumeration.truncated


def test_enumerate_min_covers_truncated(p4, caplog):
    """Test that hitting the cap truncates the list and logs a warning."""
    with caplog.at_level("WARNING"):
        enumeration = enumerate_min_covers(p4, cap=2)

    assert len(enumeration.covers) == 2
    assert enumeration.truncated
    assert "truncated" in caplog.text


def test_analyze_covers_double_star(double_star_22):
    """Test the full report on S(2,2): one cover, both centers."""
    report = analyze_covers(double_star_22)

    assert report.cover_size == report.matching_size == 2
    assert report.witness_cover == {0, 1}
    assert report.cover_union == {0, 1}
    assert report.always_excluded == {2, 3, 4, 5}
    assert is_vertex_cover(double_star_22, report.witness_cover)


def test_is_vertex_cover(p4):
    assert is_vertex_cover(p4, [1, 2])
    assert not is_vertex_cover(p4, [0, 3])


@given(trees(max_n=16))
def test_cover_equals_matching(t):
    """Test that cover and matching sizes agree and both witnesses are valid."""
    size, cover = min_vertex_cover(t)
    matching = max_matching(t)

    assert len(matching) == size
    assert is_vertex_cover(t, cover)
    used = [v for edge in matching for v in edge]
    assert len(used) == len(set(used))


@given(trees(max_n=9))
def test_enumeration_matches_brute_force(t):
    """Test that enumeration finds exactly the brute-force minimum covers."""
    size, expected = brute_force_min_covers(t)
    enumeration = enumerate_min_covers(t, cap=10_000)

    assert min_vertex_cover(t)[0] == size
    assert set(enumeration.covers) == set(expected)
    assert len(enumeration.covers) == len(expected)

    union, excluded = cover_membership(t)
    assert union == frozenset().union(*expected)
    assert excluded == frozenset(t.vertices) - union


def test_koenig_on_seeded_trees():
    """Test cover size against Hopcroft-Karp on 1000 trees with 2 to 64 vertices.

    Verifies the cover never exceeds half the vertices and that the
    bipartite cover networkx builds from its matching has the same size.
    """
    for seed in range(1000):
        t = random_tree(2 + seed % 63, seed)
        G = t.to_networkx()
        top, _ = nx.bipartite.sets(G)
        reference = nx.bipartite.hopcroft_karp_matching(G, top_nodes=top)

        size, cover = min_vertex_cover(t)
        report = analyze_covers(t)

        assert size == len(reference) // 2 == len(max_matching(t)), t.edges
        assert size == len(nx.bipartite.to_vertex_cover(G, reference, top_nodes=top))
        assert report.cover_size == report.matching_size == size
        assert size <= t.n // 2
        assert is_vertex_cover(t, cover)
