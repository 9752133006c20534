"""Spectral separation around 1 and its two cover-based upper bounds.

For a minimum vertex cover ``C`` the volume bound is ``mu(V - C) / mu(C)``
and the quotient bound is the corner ``A`` of the quotient matrix over the
partition ``X_0 = C, X_i = {v_i}`` for ``v_i`` outside ``C``::

    A = 1 - (1/|C|) * sum over edges uv inside C of (1/deg u + 1/deg v)

whose spectrum is ``{0, 1 (n - |C| - 1 times), 1 + A}``.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from tree_spectra.cover.matching import CoverReport, is_vertex_cover
from tree_spectra.errors import CoverError, SpectralError
from tree_spectra.spectral.eigensolver import Spectrum
from tree_spectra.spectral.laplacian import NormalizedLaplacian
from tree_spectra.trees.tree import Tree, VertexSet


@dataclass(frozen=True)
class CoverBounds:
    """Both separation bounds for one minimum cover, exact."""

    cover: VertexSet
    bound_volume: Fraction
    bound_quotient: Fraction


@dataclass(frozen=True, eq=False)
class SeparationReport:
    """Distance from 1 to the rest of the spectrum, with its bounds.

    Attributes
    ----------
    lambda_bar : float
        ``min |1 - lambda|`` over eigenvalues outside the 1-cluster.
    lambda_p : float, optional
        Largest eigenvalue below the 1-cluster.
    bound_volume, bound_quotient : float
        Bounds for the witness cover.
    quotient_spectrum : tuple[float, ...]
        Closed-form quotient eigenvalues for the witness cover.
    per_cover : tuple[CoverBounds, ...]
        Bounds for every cover examined, witness first.

    """

    lambda_bar: float
    lambda_p: Optional[float]
    bound_volume: float
    bound_quotient: float
    quotient_spectrum: tuple[float, ...]
    per_cover: tuple[CoverBounds, ...]

    @property
    def best_volume(self) -> float:
        return float(min(b.bound_volume for b in self.per_cover))

    @property
    def best_quotient(self) -> float:
        return float(min(b.bound_quotient for b in self.per_cover))


def _require_cover(t: Tree, cover: VertexSet) -> None:
    if not cover or not is_vertex_cover(t, cover):
        raise CoverError(f"{sorted(cover)} is not a vertex cover")


def volume_bound(t: Tree, cover: Iterable[int]) -> Fraction:
    """Exact ``mu(V - C) / mu(C)``."""
    members = t.vertex_set(cover)
    _require_cover(t, members)
    return Fraction(t.measure(set(t.vertices) - members), t.measure(members))


def quotient_corner(t: Tree, cover: Iterable[int]) -> Fraction:
    """Exact corner ``A`` of the quotient matrix."""
    members = t.vertex_set(cover)
    _require_cover(t, members)
    inner = sum(
        (Fraction(1, t.degree(u)) + Fraction(1, t.degree(v)) for u, v in t.edges if u in members and v in members),
        Fraction(0),
    )
    return 1 - inner / len(members)


def quotient_matrix(L: NormalizedLaplacian, t: Tree, cover: Iterable[int]) -> np.ndarray:
    """Quotient of ``L`` over the partition ``C, {v_1}, ..., {v_k}``.

    Entries are block averages of row sums; index 0 is the ``C`` block and
    index ``i`` the ``i``-th smallest vertex outside ``C``.

    Raises
    ------
    CoverError
        If ``cover`` is not a vertex cover.

    """
    members = t.vertex_set(cover)
    _require_cover(t, members)
    inside = sorted(members)
    outside = [v for v in t.vertices if v not in members]
    blocks = [inside] + [[v] for v in outside]

    m = len(blocks)
    B = np.zeros((m, m))
    for i, rows in enumerate(blocks):
        for j, cols in enumerate(blocks):
            B[i, j] = L.entries[np.ix_(rows, cols)].sum() / len(rows)
    return B


def quotient_eigenvalues(B: np.ndarray, imag_tol: float = 1e-10) -> np.ndarray:
    """Sorted eigenvalues of the (nonsymmetric) quotient matrix.

    Raises
    ------
    SpectralError
        If an eigenvalue has imaginary part above ``imag_tol``.

    """
    values = np.linalg.eigvals(B)
    if np.max(np.abs(values.imag), initial=0.0) > imag_tol:
        raise SpectralError("Quotient matrix has non-real eigenvalues")
    return np.sort(values.real)


def closed_form_quotient_spectrum(n: int, cover_size: int, corner: float) -> tuple[float, ...]:
    """``(0, 1, ..., 1, 1 + A)`` with ``n - |C| - 1`` ones."""
    return (0.0,) + (1.0,) * (n - cover_size - 1) + (1.0 + float(corner),)


def interlaces(inner: Sequence[float], outer: Sequence[float], tol: float = 1e-8) -> bool:
    """True when sorted ``inner`` (length m) interlaces sorted ``outer`` (length n).

    That is ``outer[i] <= inner[i] <= outer[n - m + i]`` for every ``i``,
    up to ``tol``.
    """
    mu, lam = np.sort(np.asarray(inner)), np.sort(np.asarray(outer))
    m, n = len(mu), len(lam)
    if m > n:
        return False
    return bool(np.all(lam[:m] <= mu + tol) and np.all(mu <= lam[n - m :] + tol))


def lambda_bar(spectrum: Spectrum, cluster_tol: float = 1e-8) -> float:
    distance = np.abs(1.0 - spectrum.eigenvalues)
    return float(np.min(distance[distance > cluster_tol]))


def lambda_p(spectrum: Spectrum, cluster_tol: float = 1e-8) -> Optional[float]:
    below = spectrum.eigenvalues[spectrum.eigenvalues < 1.0 - cluster_tol]
    return float(below[-1]) if below.size else None


def separation(
    spectrum: Spectrum,
    cover: CoverReport,
    t: Tree,
    covers: Iterable[Iterable[int]] = (),
    cluster_tol: float = 1e-8,
) -> SeparationReport:
    """Separation ``lambda_bar`` with both bounds per minimum cover.

    Parameters
    ----------
    spectrum : Spectrum
        Spectrum of the full tree.
    cover : CoverReport
        Cover report of ``t``; the witness cover gives the headline bounds.
    t : Tree
        The tree.
    covers : iterable of iterable of int, optional
        Further minimum covers whose bounds are recorded too.
    cluster_tol : float, optional
        Width of the 1-cluster excluded from ``lambda_bar``.

    """
    witness_set = cover.witness_cover
    ordered = [witness_set] + [c for c in (t.vertex_set(c) for c in covers) if c != witness_set]
    per_cover = tuple(
        CoverBounds(cover=c, bound_volume=volume_bound(t, c), bound_quotient=quotient_corner(t, c)) for c in ordered
    )
    head = per_cover[0]
    return SeparationReport(
        lambda_bar=lambda_bar(spectrum, cluster_tol),
        lambda_p=lambda_p(spectrum, cluster_tol),
        bound_volume=float(head.bound_volume),
        bound_quotient=float(head.bound_quotient),
        quotient_spectrum=closed_form_quotient_spectrum(t.n, len(witness_set), head.bound_quotient),
        per_cover=per_cover,
    )
