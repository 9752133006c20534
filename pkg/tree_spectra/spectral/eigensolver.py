"""Dense symmetric eigensolver and eigenvalue clustering.

The default method is cyclic-by-row Jacobi: each sweep visits every
``(p, q)`` with ``p < q`` in row order and annihilates ``S[p, q]`` with the
rotation ``theta = (S[q,q] - S[p,p]) / (2 S[p,q])``,
``t = sign(theta) / (|theta| + sqrt(theta^2 + 1))``, ``c = 1/sqrt(t^2 + 1)``,
``s = t c``. It stops when the off-diagonal Frobenius norm is at most
``tol * ||S||_F`` and raises ``ConvergenceError`` after ``max_sweeps``
sweeps. ``method="lapack"`` hands the same matrix to ``numpy.linalg.eigh``
for bulk enumeration runs; both share the post-processing: ascending
order (stable, so ties keep diagonal order) and eigenvectors signed so
their largest-magnitude entry, lowest index first, is positive.
"""

import logging
from dataclasses import dataclass

import numpy as np

from tree_spectra.errors import ConvergenceError, SpectralError
from tree_spectra.spectral.laplacian import DirichletLaplacian, NormalizedLaplacian, symmetrize

logger = logging.getLogger(__name__)

METHODS = ("jacobi", "lapack")


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigen-decomposition of a (Dirichlet) normalized Laplacian.

    Attributes
    ----------
    eigenvalues : numpy.ndarray
        Non-decreasing eigenvalues.
    eigenvectors : numpy.ndarray
        Laplacian eigenvectors as unit-norm columns, ``D^{-1/2}`` times
        the symmetric ones.
    symmetric_vectors : numpy.ndarray
        Orthonormal eigenvectors of the symmetrized operator.
    residuals : numpy.ndarray
        ``||L f - lambda f||_inf`` per eigenpair.
    sweeps : int
        Jacobi sweeps used (0 for LAPACK).

    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    symmetric_vectors: np.ndarray
    residuals: np.ndarray
    sweeps: int = 0

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def residuals_within(self, residual_tol: float) -> bool:
        scale = np.maximum(1.0, np.abs(self.eigenvalues))
        return bool(np.all(self.residuals <= residual_tol * scale))


@dataclass(frozen=True, eq=False)
class Cluster:
    """Eigenvalues within ``cluster_tol`` of a target.

    Attributes
    ----------
    target : float
        Center of the window.
    multiplicity : int
        Number of eigenvalues in the window.
    start, stop : int
        Index range ``[start, stop)`` into the sorted spectrum.
    basis : numpy.ndarray
        Laplacian eigenvectors of the cluster as columns.
    symmetric_basis : numpy.ndarray
        Orthonormal symmetrized eigenvectors of the cluster.
    boundary_sensitive : bool
        True when another eigenvalue lies within ten times the window.

    """

    target: float
    multiplicity: int
    start: int
    stop: int
    basis: np.ndarray
    symmetric_basis: np.ndarray
    boundary_sensitive: bool


def _off_norm(A: np.ndarray) -> float:
    """Frobenius norm of the off-diagonal part of ``A``."""
    return float(np.linalg.norm(A - np.diag(np.diag(A))))


def jacobi_eigh(S: np.ndarray, tol: float = 1e-12, max_sweeps: int = 50) -> tuple[np.ndarray, np.ndarray, int]:
    """Cyclic Jacobi eigen-decomposition of a symmetric matrix.

    Parameters
    ----------
    S : numpy.ndarray
        Symmetric matrix; not modified.
    tol : float, optional
        Relative off-diagonal norm at convergence.
    max_sweeps : int, optional
        Sweep budget.

    Returns
    -------
    tuple of (numpy.ndarray, numpy.ndarray, int)
        Unsorted eigenvalues, eigenvectors as columns, sweeps used.

    Raises
    ------
    ConvergenceError
        If the budget runs out.

    """
    A = np.array(S, dtype=np.float64)
    n = A.shape[0]
    V = np.eye(n)
    target = tol * np.linalg.norm(A)
    # Skipping entries below target / n keeps the off-diagonal norm under target.
    skip = target / max(n, 1)

    for sweep in range(max_sweeps + 1):
        off = _off_norm(A)
        if off <= target:
            logger.debug(f"Jacobi converged after {sweep} sweeps (n={n})")
            return np.diag(A).copy(), V, sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= skip:
                    continue
                app, aqq = A[p, p], A[q, q]
                theta = (aqq - app) / (2.0 * apq)
                t = np.copysign(1.0, theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c

                col_p, col_q = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                A[p, :] = A[:, p]
                A[q, :] = A[:, q]
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = A[q, p] = 0.0

                vec_p, vec_q = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vec_p - s * vec_q
                V[:, q] = s * vec_p + c * vec_q

    raise ConvergenceError(f"Jacobi did not converge within {max_sweeps} sweeps (n={n}, off-norm {off:.3e})")


def _normalize_signs(vectors: np.ndarray) -> np.ndarray:
    signed = vectors.copy()
    for k in range(signed.shape[1]):
        lead = int(np.argmax(np.abs(signed[:, k])))
        if signed[lead, k] < 0:
            signed[:, k] = -signed[:, k]
    return signed


def eigensolve(
    S: np.ndarray,
    degrees: np.ndarray,
    operator: np.ndarray,
    tol: float = 1e-12,
    max_sweeps: int = 50,
    method: str = "jacobi",
) -> Spectrum:
    """Eigen-decompose a symmetrized Laplacian and map vectors back.

    Parameters
    ----------
    S : numpy.ndarray
        Symmetric operator ``D^{1/2} L D^{-1/2}``.
    degrees : numpy.ndarray
        Diagonal of ``D``.
    operator : numpy.ndarray
        The unsymmetrized ``L``, used for residuals.
    tol : float, optional
        Jacobi convergence tolerance.
    max_sweeps : int, optional
        Jacobi sweep budget.
    method : {"jacobi", "lapack"}, optional
        Eigensolver backend.

    Returns
    -------
    Spectrum
        Sorted eigenpairs with residuals.

    Raises
    ------
    SpectralError
        If ``S`` is not symmetric within 1e-12 or the method is unknown.
    ConvergenceError
        If Jacobi runs out of sweeps.

    """
    S = np.asarray(S, dtype=np.float64)
    if S.ndim != 2 or S.shape[0] != S.shape[1]:
        raise SpectralError(f"Expected a square matrix, got shape {S.shape}")
    asymmetry = float(np.max(np.abs(S - S.T))) if S.size else 0.0
    if asymmetry > 1e-12:
        raise SpectralError(f"Matrix is not symmetric (max |S - S^T| = {asymmetry:.3e})")

    if method == "jacobi":
        values, vectors, sweeps = jacobi_eigh(S, tol=tol, max_sweeps=max_sweeps)
    elif method == "lapack":
        values, vectors = np.linalg.eigh(S)
        sweeps = 0
    else:
        raise SpectralError(f"Unknown eigensolver method: {method}")

    order = np.argsort(values, kind="stable")
    values = values[order]
    symmetric_vectors = _normalize_signs(vectors[:, order])

    mapped = symmetric_vectors / np.sqrt(degrees)[:, None]
    mapped = mapped / np.linalg.norm(mapped, axis=0)[None, :]
    residuals = np.max(np.abs(operator @ mapped - mapped * values[None, :]), axis=0)
    return Spectrum(
        eigenvalues=values,
        eigenvectors=mapped,
        symmetric_vectors=symmetric_vectors,
        residuals=residuals,
        sweeps=sweeps,
    )


def laplacian_spectrum(
    L: NormalizedLaplacian | DirichletLaplacian,
    tol: float = 1e-12,
    max_sweeps: int = 50,
    method: str = "jacobi",
) -> Spectrum:
    """Spectrum of a normalized or Dirichlet Laplacian."""
    return eigensolve(symmetrize(L), L.degrees, L.entries, tol=tol, max_sweeps=max_sweeps, method=method)


def cluster_eigenvalues(spectrum: Spectrum, target: float, cluster_tol: float = 1e-8) -> Cluster:
    """Group the eigenvalues within ``cluster_tol`` of ``target``.

    Returns
    -------
    Cluster
        Possibly empty; flagged ``boundary_sensitive`` when some eigenvalue
        sits in ``(cluster_tol, 10 * cluster_tol]`` of the target.

    """
    distance = np.abs(spectrum.eigenvalues - target)
    inside = np.flatnonzero(distance <= cluster_tol)
    near = np.any((distance > cluster_tol) & (distance <= 10 * cluster_tol))
    if near:
        logger.warning(f"Eigenvalue cluster at {target} is boundary-sensitive (tol {cluster_tol})")
    if inside.size:
        start, stop = int(inside[0]), int(inside[-1]) + 1
    else:
        start = stop = int(np.searchsorted(spectrum.eigenvalues, target))
    return Cluster(
        target=target,
        multiplicity=stop - start,
        start=start,
        stop=stop,
        basis=spectrum.eigenvectors[:, start:stop],
        symmetric_basis=spectrum.symmetric_vectors[:, start:stop],
        boundary_sensitive=bool(near),
    )
