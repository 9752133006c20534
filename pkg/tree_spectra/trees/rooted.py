"""Rooted traversal order shared by the tree dynamic programs."""

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Optional

from tree_spectra.trees.tree import Edge, Tree


@dataclass(frozen=True)
class RootedForest:
    """Forest with every component rooted at its smallest vertex.

    Attributes
    ----------
    preorder : tuple[int, ...]
        Vertices in breadth-first order, roots before their descendants.
    parent : dict[int, Optional[int]]
        Parent of each vertex; None for roots.
    children : dict[int, tuple[int, ...]]
        Children of each vertex, ascending.

    """

    preorder: tuple[int, ...]
    parent: dict[int, Optional[int]]
    children: dict[int, tuple[int, ...]]

    @property
    def postorder(self) -> tuple[int, ...]:
        """Every vertex after all of its descendants."""
        return tuple(reversed(self.preorder))

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(v for v in self.preorder if self.parent[v] is None)

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[Edge]) -> "RootedForest":
        """Root an acyclic edge set over ``vertices``.

        Vertices without edges become single-vertex components.
        """
        nodes = sorted(set(vertices))
        adjacency: dict[int, list[int]] = {v: [] for v in nodes}
        for u, v in edges:
            adjacency[u].append(v)
            adjacency[v].append(u)

        parent: dict[int, Optional[int]] = {}
        children: dict[int, list[int]] = {v: [] for v in nodes}
        preorder: list[int] = []
        for root in nodes:
            if root in parent:
                continue
            parent[root] = None
            queue = deque([root])
            while queue:
                v = queue.popleft()
                preorder.append(v)
                for u in sorted(adjacency[v]):
                    if u not in parent:
                        parent[u] = v
                        children[v].append(u)
                        queue.append(u)
        return cls(
            preorder=tuple(preorder),
            parent=parent,
            children={v: tuple(c) for v, c in children.items()},
        )

    @classmethod
    def from_tree(cls, t: Tree) -> "RootedForest":
        return cls.from_edges(t.vertices, t.edges)
