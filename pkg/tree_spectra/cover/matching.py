"""Exact maximum matchings and minimum vertex covers on trees.

Covers come from the two-state tree program::

    in[v]  = 1 + sum(min(in[c], out[c]) for c in children(v))
    out[v] = sum(in[c] for c in children(v))

Witnesses are deterministic: a root takes the not-in-cover state on ties,
and a child below a cover vertex takes the in-cover state on ties.
"""

import logging
import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import Optional

from tree_spectra.errors import CoverError
from tree_spectra.trees.rooted import RootedForest
from tree_spectra.trees.tree import Edge, Tree, VertexSet

logger = logging.getLogger(__name__)

IN, OUT = True, False


@dataclass(frozen=True)
class CoverReport:
    """Minimum vertex cover summary of one tree.

    Attributes
    ----------
    cover_size : int
        Size of a minimum vertex cover.
    witness_cover : frozenset[int]
        One minimum vertex cover.
    matching_size : int
        Size of a maximum matching (equal to ``cover_size`` on trees).
    witness_matching : frozenset[tuple[int, int]]
        One maximum matching.
    cover_union : frozenset[int]
        Vertices in at least one minimum vertex cover.
    always_excluded : frozenset[int]
        Vertices in no minimum vertex cover.

    """

    cover_size: int
    witness_cover: VertexSet
    matching_size: int
    witness_matching: frozenset[Edge]
    cover_union: VertexSet
    always_excluded: VertexSet


@dataclass(frozen=True)
class CoverEnumeration:
    """Minimum vertex covers listed up to a cap."""

    covers: tuple[VertexSet, ...]
    truncated: bool


def _cover_table(
    forest: RootedForest, forced_in: VertexSet = frozenset(), forced_out: VertexSet = frozenset()
) -> dict[int, dict[bool, float]]:
    table: dict[int, dict[bool, float]] = {}
    for v in forest.postorder:
        kids = forest.children[v]
        take = 1 + sum(min(table[c][IN], table[c][OUT]) for c in kids)
        skip = sum(table[c][IN] for c in kids)
        table[v] = {
            IN: math.inf if v in forced_out else take,
            OUT: math.inf if v in forced_in else skip,
        }
    return table


def _optimal_states(table: dict[int, dict[bool, float]], v: int, parent_state: Optional[bool]) -> list[bool]:
    """States of ``v`` consistent with an optimum, in tie-break order."""
    if parent_state is OUT:
        return [IN] if table[v][IN] < math.inf else []
    best = min(table[v][IN], table[v][OUT])
    if best == math.inf:
        return []
    order = [OUT, IN] if parent_state is None else [IN, OUT]
    return [s for s in order if table[v][s] == best]


def forest_min_cover_size(vertices: Iterable[int], edges: Iterable[Edge]) -> int:
    """Minimum vertex cover size of an arbitrary forest.

    Parameters
    ----------
    vertices : iterable of int
        Vertex labels; isolated vertices are allowed.
    edges : iterable of (int, int)
        Acyclic edge set over ``vertices``.

    """
    forest = RootedForest.from_edges(vertices, edges)
    table = _cover_table(forest)
    return int(sum(min(table[r][IN], table[r][OUT]) for r in forest.roots))


def max_matching(t: Tree) -> frozenset[Edge]:
    """Maximum matching by leaf pruning, which is exact on trees.

    Every vertex, visited after its descendants, is matched to its parent
    when both are still free.
    """
    forest = RootedForest.from_tree(t)
    matched: set[int] = set()
    matching = set()
    for v in forest.postorder:
        p = forest.parent[v]
        if p is not None and v not in matched and p not in matched:
            matched.update((v, p))
            matching.add((min(v, p), max(v, p)))
    return frozenset(matching)


def min_vertex_cover(t: Tree) -> tuple[int, VertexSet]:
    """Exact minimum vertex cover size and a deterministic witness.

    Returns
    -------
    tuple of (int, frozenset[int])
        Cover size and one minimum cover.

    """
    forest = RootedForest.from_tree(t)
    table = _cover_table(forest)
    state: dict[int, bool] = {}
    for v in forest.preorder:
        p = forest.parent[v]
        state[v] = _optimal_states(table, v, None if p is None else state[p])[0]
    cover = frozenset(v for v, s in state.items() if s is IN)
    return len(cover), cover


def min_cover_with_forced(
    t: Tree, forced_in: Iterable[int] = (), forced_out: Iterable[int] = ()
) -> Optional[int]:
    """Minimum cover size among covers containing ``forced_in`` and avoiding ``forced_out``.

    Returns
    -------
    int or None
        The constrained minimum, or None when ``forced_out`` holds both
        endpoints of some edge.

    Raises
    ------
    CoverError
        If the two forced sets overlap.

    """
    inside, outside = t.vertex_set(forced_in), t.vertex_set(forced_out)
    overlap = inside & outside
    if overlap:
        raise CoverError(f"Vertices forced both in and out of the cover: {sorted(overlap)}")
    forest = RootedForest.from_tree(t)
    table = _cover_table(forest, inside, outside)
    root = forest.roots[0]
    best = min(table[root][IN], table[root][OUT])
    return None if best == math.inf else int(best)


def cover_membership(t: Tree) -> tuple[VertexSet, VertexSet]:
    """Split vertices into those in some minimum cover and those in none.

    Returns
    -------
    tuple of (frozenset[int], frozenset[int])
        ``(cover_union, always_excluded)``.

    """
    size, _ = min_vertex_cover(t)
    union = frozenset(v for v in t.vertices if min_cover_with_forced(t, forced_in=[v]) == size)
    return union, frozenset(t.vertices) - union


def enumerate_min_covers(t: Tree, cap: int) -> CoverEnumeration:
    """List minimum vertex covers by backtracking over optimal DP states.

    Each vertex's admissible states depend only on its parent's state, so
    a depth-first walk over the preorder yields every minimum cover once.

    Parameters
    ----------
    t : Tree
        Tree to enumerate.
    cap : int
        Maximum number of covers returned.

    Returns
    -------
    CoverEnumeration
        Covers in discovery order and whether the list was cut at ``cap``.

    """
    forest = RootedForest.from_tree(t)
    table = _cover_table(forest)
    order = forest.preorder
    covers: list[VertexSet] = []
    state: dict[int, bool] = {}

    stack: list[Iterator[bool]] = [iter(_optimal_states(table, order[0], None))]
    while stack:
        depth = len(stack) - 1
        choice = next(stack[-1], None)
        if choice is None:
            stack.pop()
            continue
        v = order[depth]
        state[v] = choice
        if depth + 1 == len(order):
            covers.append(frozenset(u for u in order if state[u] is IN))
            if len(covers) > cap:
                break
            continue
        nxt = order[depth + 1]
        stack.append(iter(_optimal_states(table, nxt, state[forest.parent[nxt]])))

    truncated = len(covers) > cap
    if truncated:
        logger.warning(f"Minimum cover enumeration truncated at {cap} covers (n={t.n})")
    return CoverEnumeration(covers=tuple(covers[:cap]), truncated=truncated)


def analyze_covers(t: Tree) -> CoverReport:
    """Assemble the full cover report of ``t``."""
    size, cover = min_vertex_cover(t)
    matching = max_matching(t)
    union, excluded = cover_membership(t)
    return CoverReport(
        cover_size=size,
        witness_cover=cover,
        matching_size=len(matching),
        witness_matching=matching,
        cover_union=union,
        always_excluded=excluded,
    )


def is_vertex_cover(t: Tree, vertices: Iterable[int]) -> bool:
    """True when every edge has an endpoint in ``vertices``."""
    members = set(vertices)
    return all(u in members or v in members for u, v in t.edges)
