"""Tree data model and the structural edits used by the cover properties."""

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from tree_spectra.errors import (
    CycleError,
    DisconnectedError,
    DuplicateEdgeError,
    IsolatedVertexError,
    SelfLoopError,
    TooFewVerticesError,
    TreeStructureError,
    VertexSetError,
)

VertexSet = frozenset[int]
Edge = tuple[int, int]


@dataclass(frozen=True)
class Tree:
    """Connected acyclic simple graph on vertices ``0..n-1``.

    Build instances with ``from_edge_list`` (or the generators); the
    constructor trusts its arguments.

    Attributes
    ----------
    n : int
        Vertex count, at least 2.
    adjacency : tuple[tuple[int, ...], ...]
        Sorted neighbor ids of every vertex.

    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Every edge once, as ``(u, v)`` with ``u < v``, sorted."""
        return tuple((u, v) for u in range(self.n) for v in self.adjacency[u] if u < v)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[self._check_vertex(v)]

    def degree(self, v: int) -> int:
        return len(self.adjacency[self._check_vertex(v)])

    def leaves(self) -> VertexSet:
        """Vertices of degree 1."""
        return frozenset(v for v in range(self.n) if len(self.adjacency[v]) == 1)

    def measure(self, vertices: Iterable[int]) -> int:
        """Sum of degrees over ``vertices`` (the volume of the set)."""
        return sum(self.degree(v) for v in set(vertices))

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        """Validate ids against this tree and freeze them.

        Raises
        ------
        VertexSetError
            If an id is out of range.

        """
        members = frozenset(vertices)
        for v in members:
            self._check_vertex(v)
        return members

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def _check_vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise VertexSetError(f"Vertex {v} out of range for a tree on {self.n} vertices")
        return v


@dataclass(frozen=True)
class ForestComponent:
    """One connected piece of a forest, labelled back into its host tree.

    Attributes
    ----------
    vertices : tuple[int, ...]
        Host labels, sorted; local vertex ``i`` is host vertex ``vertices[i]``.
    tree : Tree, optional
        The component relabelled to ``0..k-1``; None for a single vertex.

    """

    vertices: tuple[int, ...]
    tree: Optional[Tree]

    @property
    def isolated(self) -> bool:
        """True when the component is a single vertex with no edge."""
        return self.tree is None

    def to_host(self, local: Iterable[int]) -> VertexSet:
        return frozenset(self.vertices[i] for i in local)

    def to_local(self, host: Iterable[int]) -> VertexSet:
        index = {v: i for i, v in enumerate(self.vertices)}
        return frozenset(index[v] for v in host if v in index)


@dataclass(frozen=True)
class Forest:
    """Components of an edited tree, ordered by smallest host label.

    Attributes
    ----------
    components : tuple[ForestComponent, ...]
        Vertex-disjoint components.
    removed : frozenset[int]
        Host vertices not covered by any component.

    """

    components: tuple[ForestComponent, ...]
    removed: VertexSet

    @property
    def vertex_groups(self) -> list[VertexSet]:
        return [frozenset(c.vertices) for c in self.components]


def from_edge_list(edges: Iterable[Edge]) -> Tree:
    """Build a tree from undirected edges over dense ids ``0..n-1``.

    Parameters
    ----------
    edges : iterable of (int, int)
        Edge endpoints; ``n`` is one more than the largest id.

    Returns
    -------
    Tree
        The validated tree.

    Raises
    ------
    TooFewVerticesError
        If no edge is given.
    SelfLoopError, DuplicateEdgeError, IsolatedVertexError, CycleError, DisconnectedError
        For the corresponding violated invariant.

    """
    pairs = [(int(u), int(v)) for u, v in edges]
    if not pairs:
        raise TooFewVerticesError("A tree needs at least 2 vertices (no edges given)")

    seen: set[Edge] = set()
    for u, v in pairs:
        if u < 0 or v < 0:
            raise TreeStructureError(f"negative vertex id in edge ({u}, {v})")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)

    n = 1 + max(max(u, v) for u, v in pairs)
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(pairs)

    isolated = sorted(nx.isolates(graph))
    if isolated:
        raise IsolatedVertexError(f"isolated vertex {isolated[0]} (every vertex needs degree >= 1)")
    if not nx.is_forest(graph):
        cycle = [u for u, _ in nx.find_cycle(graph)]
        raise CycleError(f"cycle detected through vertices {cycle}")
    if not nx.is_connected(graph):
        raise DisconnectedError(
            f"graph is disconnected ({nx.number_connected_components(graph)} components)"
        )

    return Tree(n=n, adjacency=tuple(tuple(sorted(graph.adj[v])) for v in range(n)))


def _forest_from_edges(
    vertices: Iterable[int], edges: Iterable[Edge], removed: VertexSet
) -> Forest:
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from(edges)
    groups = sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0])

    components = []
    for group in groups:
        if len(group) == 1:
            components.append(ForestComponent(vertices=tuple(group), tree=None))
            continue
        index = {v: i for i, v in enumerate(group)}
        local_edges = [(index[u], index[v]) for u, v in graph.subgraph(group).edges]
        components.append(ForestComponent(vertices=tuple(group), tree=from_edge_list(local_edges)))
    return Forest(components=tuple(components), removed=removed)


def delete_vertices(t: Tree, z: Iterable[int]) -> Forest:
    """Delete a vertex set and all incident edges.

    Parameters
    ----------
    t : Tree
        Host tree.
    z : iterable of int
        Vertices to delete; may be empty.

    Returns
    -------
    Forest
        Components of ``t - z``. Single vertices appear as isolated
        components.

    Raises
    ------
    VertexSetError
        If ``z`` contains every vertex or an out-of-range id.

    """
    removed = t.vertex_set(z)
    if len(removed) == t.n:
        raise VertexSetError("Cannot delete every vertex of the tree")
    kept = [v for v in t.vertices if v not in removed]
    edges = [(u, v) for u, v in t.edges if u not in removed and v not in removed]
    return _forest_from_edges(kept, edges, removed)


def expand_subgraph(t: Tree, c: Iterable[int]) -> Forest:
    """Subgraph expanded by ``c``: ``c``, its neighbors, and edges touching ``c``.

    Raises
    ------
    VertexSetError
        If ``c`` is empty or has an out-of-range id.

    """
    core = t.vertex_set(c)
    if not core:
        raise VertexSetError("Cannot expand an empty vertex set")
    vertices = set(core)
    for v in core:
        vertices.update(t.adjacency[v])
    edges = [(u, v) for u, v in t.edges if u in core or v in core]
    removed = frozenset(v for v in t.vertices if v not in vertices)
    return _forest_from_edges(sorted(vertices), edges, removed)
