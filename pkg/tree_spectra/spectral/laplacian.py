"""Normalized Laplacian and Dirichlet normalized Laplacian of a tree."""

import math
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from tree_spectra.errors import SpectralError, VertexSetError
from tree_spectra.trees.tree import Tree


@dataclass(frozen=True, eq=False)
class NormalizedLaplacian:
    """Matrix of ``Lf(u) = f(u) - (1/deg u) * sum(f(v) for v ~ u)``.

    Attributes
    ----------
    n : int
        Dimension.
    entries : numpy.ndarray
        Dense ``n x n`` matrix; ``L[u, u] = 1``, ``L[u, v] = -1/deg u`` on edges.
    degrees : numpy.ndarray
        Vertex degrees.

    """

    n: int
    entries: np.ndarray
    degrees: np.ndarray

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(range(self.n))


@dataclass(frozen=True, eq=False)
class DirichletLaplacian:
    """Restriction of a normalized Laplacian to the vertex set ``domain``.

    Functions are extended by zero outside ``domain``; the matrix is the
    principal submatrix of the host Laplacian, and ``degrees`` are host
    degrees.
    """

    domain: tuple[int, ...]
    entries: np.ndarray
    degrees: np.ndarray

    @property
    def n(self) -> int:
        return len(self.domain)


def build_laplacian(t: Tree) -> NormalizedLaplacian:
    """Dense normalized Laplacian of ``t``.

    Raises
    ------
    SpectralError
        If a row sum is not zero to rounding accuracy.

    """
    degrees = np.asarray(t.degrees, dtype=np.float64)
    entries = np.eye(t.n)
    for u in t.vertices:
        for v in t.adjacency[u]:
            entries[u, v] = -1.0 / degrees[u]

    eps = np.finfo(np.float64).eps
    for u in t.vertices:
        # fsum is exactly rounded; the only error left is in the 1/deg entries.
        if abs(math.fsum(entries[u])) > 4 * degrees[u] * eps:
            raise SpectralError(f"Row {u} of the Laplacian does not sum to zero")
    return NormalizedLaplacian(n=t.n, entries=entries, degrees=degrees)


def symmetrize(L: NormalizedLaplacian | DirichletLaplacian) -> np.ndarray:
    """Return ``D^{1/2} L D^{-1/2}``, symmetric with ``-1/sqrt(deg u deg v)`` off the diagonal."""
    root = np.sqrt(L.degrees)
    similar = root[:, None] * L.entries / root[None, :]
    return (similar + similar.T) / 2


def dirichlet(L: NormalizedLaplacian, omega: Iterable[int]) -> DirichletLaplacian:
    """Dirichlet normalized Laplacian on ``omega``.

    Raises
    ------
    VertexSetError
        If ``omega`` is empty or has an out-of-range id.

    """
    domain = tuple(sorted(set(omega)))
    if not domain:
        raise VertexSetError("Dirichlet domain must be nonempty")
    if domain[0] < 0 or domain[-1] >= L.n:
        raise VertexSetError(f"Dirichlet domain {list(domain)} out of range for n={L.n}")
    index = np.asarray(domain)
    return DirichletLaplacian(
        domain=domain,
        entries=L.entries[np.ix_(index, index)].copy(),
        degrees=L.degrees[index].copy(),
    )
