"""Pruefer-sequence codec, seeded random trees and named tree families.

Random trees are uniform over labeled trees: a Pruefer sequence of length
``n - 2`` is drawn from ``numpy.random.Generator(PCG64(seed))`` with
``integers(0, n, size=n - 2)`` and decoded.
"""

import heapq
import itertools
from collections.abc import Iterator, Sequence

import numpy as np

from tree_spectra.errors import PrueferError, TooFewVerticesError, TreeStructureError
from tree_spectra.trees.tree import Edge, Tree, from_edge_list


def from_pruefer(seq: Sequence[int]) -> Tree:
    """Decode a Pruefer sequence.

    Parameters
    ----------
    seq : sequence of int
        Length ``n - 2`` with entries in ``0..n-1``; empty means ``n = 2``.

    Returns
    -------
    Tree
        The unique labeled tree with that sequence.

    Raises
    ------
    PrueferError
        If an entry is out of range.

    """
    n = len(seq) + 2
    for x in seq:
        if not 0 <= x < n:
            raise PrueferError(f"Pruefer entry {x} out of range 0..{n - 1}")

    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)

    edges: list[Edge] = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, int(x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, int(x))
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return from_edge_list(edges)


def to_pruefer(t: Tree) -> list[int]:
    """Encode a tree as its Pruefer sequence (inverse of ``from_pruefer``)."""
    degree = list(t.degrees)
    removed = [False] * t.n
    leaves = [v for v in t.vertices if degree[v] == 1]
    heapq.heapify(leaves)

    seq = []
    for _ in range(t.n - 2):
        leaf = heapq.heappop(leaves)
        removed[leaf] = True
        parent = next(u for u in t.adjacency[leaf] if not removed[u])
        seq.append(parent)
        degree[parent] -= 1
        if degree[parent] == 1:
            heapq.heappush(leaves, parent)
    return seq


def _require_seed(seed: int) -> None:
    # PCG64 only accepts non-negative seeds
    if seed < 0:
        raise TreeStructureError(f"Seed must be non-negative, got {seed}")


def random_tree(n: int, seed: int) -> Tree:
    """Draw a uniformly random labeled tree, deterministically per ``(n, seed)``.

    Raises
    ------
    TooFewVerticesError
        If ``n < 2``.
    TreeStructureError
        If ``seed`` is negative.

    """
    if n < 2:
        raise TooFewVerticesError(f"A tree needs at least 2 vertices, got n={n}")
    _require_seed(seed)
    rng = np.random.Generator(np.random.PCG64(seed))
    return from_pruefer([int(x) for x in rng.integers(0, n, size=n - 2)])


def enumerate_labeled_trees(n: int) -> Iterator[Tree]:
    """Yield all ``n ** (n - 2)`` labeled trees on ``n`` vertices."""
    if n < 2:
        raise TooFewVerticesError(f"A tree needs at least 2 vertices, got n={n}")
    for seq in itertools.product(range(n), repeat=n - 2):
        yield from_pruefer(seq)


def path(n: int) -> Tree:
    """Path ``0 - 1 - ... - (n-1)``."""
    if n < 2:
        raise TooFewVerticesError(f"A path needs at least 2 vertices, got n={n}")
    return from_edge_list([(i, i + 1) for i in range(n - 1)])


def star(m: int) -> Tree:
    """Star ``K_{1,m}`` with center 0."""
    if m < 1:
        raise TooFewVerticesError(f"A star needs at least 1 leaf, got m={m}")
    return from_edge_list([(0, i) for i in range(1, m + 1)])


def double_star(a: int, b: int) -> Tree:
    """Adjacent centers 0 and 1 carrying ``a`` and ``b`` leaves respectively."""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return from_edge_list(edges)


def caterpillar(spine: int, legs: Sequence[int]) -> Tree:
    """Path of ``spine`` vertices, spine vertex ``i`` carrying ``legs[i]`` leaves."""
    if len(legs) != spine:
        raise TreeStructureError(f"Expected {spine} leg counts, got {len(legs)}")
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i, count in enumerate(legs):
        for _ in range(count):
            edges.append((i, nxt))
            nxt += 1
    return from_edge_list(edges)


def join_through_vertex(t1: Tree, t2: Tree, a1: int, a2: int) -> Tree:
    """Join two trees through a new middle vertex.

    The result holds ``t1`` on ``0..n1-1``, ``t2`` shifted to
    ``n1..n1+n2-1``, and a middle vertex ``n1 + n2`` adjacent to ``a1``
    and to the shifted ``a2``.
    """
    t1.vertex_set([a1])
    t2.vertex_set([a2])
    middle = t1.n + t2.n
    edges = list(t1.edges)
    edges += [(u + t1.n, v + t1.n) for u, v in t2.edges]
    edges += [(a1, middle), (a2 + t1.n, middle)]
    return from_edge_list(edges)


FAMILIES = ("random", "path", "star", "double-star")


def random_ensemble(count: int, min_n: int, max_n: int, seed: int) -> list[Tree]:
    """``count`` random trees; member ``i`` uses seed ``seed + i``.

    Sizes are drawn uniformly from ``min_n..max_n`` by a ``PCG64(seed)``
    generator, so an ensemble is reproducible from its arguments.

    Raises
    ------
    TooFewVerticesError
        If ``min_n < 2``.
    TreeStructureError
        If ``max_n < min_n``, ``count`` is negative or ``seed`` is negative.

    """
    if min_n < 2:
        raise TooFewVerticesError(f"A tree needs at least 2 vertices, got min_n={min_n}")
    if max_n < min_n or count < 0:
        raise TreeStructureError(f"Invalid ensemble: count={count}, n in [{min_n}, {max_n}]")
    _require_seed(seed)
    rng = np.random.Generator(np.random.PCG64(seed))
    sizes = rng.integers(min_n, max_n + 1, size=count)
    return [random_tree(int(n), seed + i) for i, n in enumerate(sizes)]


def family_member(family: str, n: int) -> Tree:
    """The ``n``-vertex member of a named family (double stars split leaves evenly)."""
    if family == "path":
        return path(n)
    if family == "star":
        return star(n - 1)
    if family == "double-star":
        if n < 4:
            raise TooFewVerticesError(f"A double star needs at least 4 vertices, got n={n}")
        a = (n - 2) // 2
        return double_star(a, n - 2 - a)
    raise TreeStructureError(f"Unknown tree family: {family}")


def ensemble(family: str, count: int, min_n: int, max_n: int, seed: int) -> list[Tree]:
    """Random ensemble, or one family member per size in ``min_n..max_n``."""
    if family == "random":
        return random_ensemble(count, min_n, max_n, seed)
    if max_n < min_n:
        raise TreeStructureError(f"Invalid size range [{min_n}, {max_n}]")
    return [family_member(family, n) for n in range(min_n, max_n + 1)]
