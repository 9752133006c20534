"""Exhaustive oracles for small trees."""

import itertools

from tree_spectra.cover.matching import is_vertex_cover
from tree_spectra.trees.tree import Edge, Tree, VertexSet


def brute_force_min_covers(t: Tree) -> tuple[int, list[VertexSet]]:
    """All minimum vertex covers by increasing-size subset search.

    Returns
    -------
    tuple of (int, list of frozenset[int])
        Minimum size and every cover of that size, in lexicographic order.

    """
    for k in range(t.n + 1):
        covers = [frozenset(s) for s in itertools.combinations(t.vertices, k) if is_vertex_cover(t, s)]
        if covers:
            return k, covers
    raise AssertionError("the full vertex set is always a cover")


def brute_force_matchings(t: Tree) -> list[frozenset[Edge]]:
    """Every matching of ``t``, the empty matching included."""
    edges = t.edges
    matchings: list[frozenset[Edge]] = []

    def extend(start: int, chosen: list[Edge], used: set[int]) -> None:
        matchings.append(frozenset(chosen))
        for i in range(start, len(edges)):
            u, v = edges[i]
            if u in used or v in used:
                continue
            chosen.append(edges[i])
            used.update((u, v))
            extend(i + 1, chosen, used)
            used.difference_update((u, v))
            chosen.pop()

    extend(0, [], set())
    return matchings
