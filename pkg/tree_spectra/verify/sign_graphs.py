"""Sign graphs (discrete nodal domains) of a vertex function on a tree."""

from collections.abc import Sequence
from dataclasses import dataclass

import networkx as nx
import numpy as np

from tree_spectra.errors import VertexSetError
from tree_spectra.trees.tree import Tree, VertexSet


@dataclass(frozen=True)
class SignGraphDecomposition:
    """Maximal connected same-sign vertex sets of ``f``.

    Attributes
    ----------
    positive : tuple[frozenset[int], ...]
        Components where ``f > zero_tol``, ordered by smallest vertex.
    negative : tuple[frozenset[int], ...]
        Components where ``f < -zero_tol``, same order.
    zeros : frozenset[int]
        Vertices with ``|f| <= zero_tol``.
    zero_tol : float
        Threshold used for the classification.

    """

    positive: tuple[VertexSet, ...]
    negative: tuple[VertexSet, ...]
    zeros: VertexSet
    zero_tol: float

    @property
    def count(self) -> int:
        return len(self.positive) + len(self.negative)

    @property
    def all_graphs(self) -> tuple[VertexSet, ...]:
        """Positive and negative sign graphs together, ordered by smallest vertex."""
        return tuple(sorted(self.positive + self.negative, key=min))


def _components(graph: nx.Graph, members: list[int]) -> tuple[VertexSet, ...]:
    groups = nx.connected_components(graph.subgraph(members))
    return tuple(sorted((frozenset(g) for g in groups), key=min))


def sign_graphs(t: Tree, f: Sequence[float], zero_tol: float) -> SignGraphDecomposition:
    """Split ``f`` into positive and negative sign graphs and its zero set.

    Raises
    ------
    VertexSetError
        If ``f`` does not have one entry per vertex.

    """
    values = np.asarray(f, dtype=np.float64)
    if values.shape != (t.n,):
        raise VertexSetError(f"Vector of shape {values.shape} does not match a tree on {t.n} vertices")
    graph = t.to_networkx()
    positive = [v for v in t.vertices if values[v] > zero_tol]
    negative = [v for v in t.vertices if values[v] < -zero_tol]
    zeros = frozenset(v for v in t.vertices if abs(values[v]) <= zero_tol)
    return SignGraphDecomposition(
        positive=_components(graph, positive),
        negative=_components(graph, negative),
        zeros=zeros,
        zero_tol=zero_tol,
    )


def relative_zero_tol(f: Sequence[float], factor: float) -> float:
    """Zero threshold ``factor * ||f||_inf``."""
    return factor * float(np.max(np.abs(f), initial=0.0))


def common_vanishing_set(basis: np.ndarray, factor: float) -> tuple[VertexSet, VertexSet]:
    """Vertices where every vector of an orthonormal basis vanishes.

    A vertex is a zero when the row norm of ``basis`` there is at most
    ``factor`` times the largest row norm; row norms do not depend on the
    choice of orthonormal basis.

    Returns
    -------
    tuple of (frozenset[int], frozenset[int])
        The vanishing set and the non-zero vertices within a decade of
        the threshold.

    """
    basis = np.asarray(basis, dtype=np.float64)
    norms = np.linalg.norm(basis.reshape(len(basis), -1), axis=1)
    zero_tol = factor * float(np.max(norms, initial=0.0))
    zeros = frozenset(int(v) for v in np.flatnonzero(norms <= zero_tol))
    borderline = frozenset(int(v) for v in np.flatnonzero((norms > zero_tol) & (norms <= 10 * zero_tol)))
    return zeros, borderline


def borderline_entries(f: Sequence[float], zero_tol: float) -> VertexSet:
    """Entries classified non-zero but within a decade of ``zero_tol``."""
    magnitude = np.abs(np.asarray(f, dtype=np.float64))
    return frozenset(int(v) for v in np.flatnonzero((magnitude > zero_tol) & (magnitude <= 10 * zero_tol)))
