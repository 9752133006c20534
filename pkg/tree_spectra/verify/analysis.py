"""Per-tree analysis context shared by every check."""

import logging
from collections.abc import Iterable
from functools import cached_property
from typing import Optional

import numpy as np

from tree_spectra.charpoly.kernel import RationalKernel, one_eigenspace_exact
from tree_spectra.charpoly.polynomial import MatchingPolynomial, matching_polynomial
from tree_spectra.config.settings import Settings
from tree_spectra.cover.matching import CoverEnumeration, CoverReport, analyze_covers, enumerate_min_covers
from tree_spectra.spectral.eigensolver import Cluster, Spectrum, cluster_eigenvalues, laplacian_spectrum
from tree_spectra.spectral.laplacian import NormalizedLaplacian, build_laplacian, dirichlet
from tree_spectra.spectral.separation import SeparationReport, lambda_p, separation
from tree_spectra.trees.tree import Tree, VertexSet
from tree_spectra.verify.sign_graphs import common_vanishing_set, relative_zero_tol

logger = logging.getLogger(__name__)


class TreeAnalysis:
    """Lazily computed spectral and combinatorial data of one tree.

    Every quantity is computed on first access and cached, so checks that
    share a spectrum or a cover enumeration pay for it once.

    Attributes
    ----------
    tree : Tree
        The tree under analysis.
    settings : Settings
        Tolerances and limits.

    """

    def __init__(self, tree: Tree, settings: Optional[Settings] = None):
        """Initialize the context.

        Parameters
        ----------
        tree : Tree
            The tree under analysis.
        settings : Settings, optional
            Settings instance (defaults if not provided).

        """
        self.tree = tree
        self.settings = settings or Settings()
        self._dirichlet_spectra: dict[tuple[int, ...], Spectrum] = {}
        logger.debug(f"Analyzing tree with n={tree.n}")

    @cached_property
    def laplacian(self) -> NormalizedLaplacian:
        return build_laplacian(self.tree)

    @cached_property
    def spectrum(self) -> Spectrum:
        return laplacian_spectrum(self.laplacian, **self.settings.get_spectral_config())

    @cached_property
    def covers(self) -> CoverReport:
        return analyze_covers(self.tree)

    @cached_property
    def enumeration(self) -> CoverEnumeration:
        return enumerate_min_covers(self.tree, self.settings.enumeration_cap)

    @cached_property
    def polynomial(self) -> MatchingPolynomial:
        return matching_polynomial(self.tree)

    @cached_property
    def kernel(self) -> RationalKernel:
        """Exact 1-eigenspace from the witness cover; may raise ``TheoremViolation``."""
        return one_eigenspace_exact(self.tree, self.covers.witness_cover)

    @cached_property
    def one_cluster(self) -> Cluster:
        return cluster_eigenvalues(self.spectrum, 1.0, self.settings.cluster_tol)

    @cached_property
    def lambda_p(self) -> Optional[float]:
        return lambda_p(self.spectrum, self.settings.cluster_tol)

    @cached_property
    def pre_one_cluster(self) -> Optional[Cluster]:
        """Cluster around the largest eigenvalue below 1."""
        if self.lambda_p is None:
            return None
        return cluster_eigenvalues(self.spectrum, self.lambda_p, self.settings.cluster_tol)

    @cached_property
    def pre_one_nonvanishing(self) -> Optional[np.ndarray]:
        """A lambda_p eigenvector with no zero entry, or None.

        Candidates are the cluster basis vectors and their sum.
        """
        cluster = self.pre_one_cluster
        if cluster is None or cluster.multiplicity == 0:
            return None
        candidates = [cluster.basis[:, k] for k in range(cluster.multiplicity)]
        if cluster.multiplicity > 1:
            candidates.append(cluster.basis.sum(axis=1))
        for f in candidates:
            zero_tol = relative_zero_tol(f, self.settings.zero_tol_factor)
            if np.all(np.abs(f) > zero_tol):
                return f
        return None

    @cached_property
    def pre_one_vanishing(self) -> tuple[VertexSet, VertexSet]:
        """Common vanishing set of the lambda_p cluster and its borderline vertices."""
        cluster = self.pre_one_cluster
        if cluster is None or cluster.multiplicity == 0:
            return frozenset(), frozenset()
        return common_vanishing_set(cluster.symmetric_basis, self.settings.zero_tol_factor)

    @cached_property
    def separation(self) -> SeparationReport:
        return separation(
            self.spectrum,
            self.covers,
            self.tree,
            covers=self.enumeration.covers,
            cluster_tol=self.settings.cluster_tol,
        )

    def dirichlet_spectrum(self, domain: Iterable[int]) -> Spectrum:
        """Spectrum of the Dirichlet operator on ``domain``, cached per domain."""
        key = tuple(sorted(set(domain)))
        if key not in self._dirichlet_spectra:
            operator = dirichlet(self.laplacian, key)
            self._dirichlet_spectra[key] = laplacian_spectrum(operator, **self.settings.get_spectral_config())
        return self._dirichlet_spectra[key]
