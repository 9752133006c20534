"""Checks that turn one statement about a tree into a ``CheckRecord``.

Each check reads what it needs from a shared ``TreeAnalysis`` and never
raises for a failed statement; failures are recorded with their witnesses.
"""

import logging
from abc import ABC, abstractmethod
from fractions import Fraction

import numpy as np

from tree_spectra.charpoly.polynomial import (
    brute_force_matching_polynomial,
    coefficient_scale,
    eval_at,
    matching_polynomial,
    multiplicity_of_one,
)
from tree_spectra.cover.oracles import brute_force_min_covers
from tree_spectra.cover.properties import check_cover_properties
from tree_spectra.errors import SpectralError, TheoremViolation
from tree_spectra.spectral.eigensolver import cluster_eigenvalues
from tree_spectra.spectral.separation import (
    closed_form_quotient_spectrum,
    interlaces,
    quotient_eigenvalues,
    quotient_matrix,
)
from tree_spectra.trees.tree import VertexSet, delete_vertices
from tree_spectra.verify.analysis import TreeAnalysis
from tree_spectra.verify.report import CheckRecord
from tree_spectra.verify.sign_graphs import borderline_entries, relative_zero_tol, sign_graphs

logger = logging.getLogger(__name__)


class BaseCheck(ABC):
    """Abstract base class for per-tree checks.

    Attributes
    ----------
    config : dict
        Tolerances and limits, as returned by ``Settings.get_verify_config``.

    """

    theorem: str = ""
    tolerance_keys: tuple[str, ...] = ()

    def __init__(self, config: dict):
        """Initialize check with configuration.

        Parameters
        ----------
        config : dict
            Tolerances and limits keyed by setting name.

        """
        self.config = config

    def applies_to(self, analysis: TreeAnalysis) -> bool:
        """Whether the tree is small enough for this check."""
        return True

    @abstractmethod
    def run(self, analysis: TreeAnalysis) -> CheckRecord:
        """Check the statement on one tree.

        Parameters
        ----------
        analysis : TreeAnalysis
            Shared per-tree data.

        Returns
        -------
        CheckRecord
            Verdict with witnesses and slack.

        """
        pass

    def new_record(self) -> CheckRecord:
        return CheckRecord(
            theorem=self.theorem,
            tolerances={key: self.config[key] for key in self.tolerance_keys},
        )

    def note_truncation(self, record: CheckRecord, analysis: TreeAnalysis) -> None:
        record.witnesses["covers_checked"] = len(analysis.enumeration.covers)
        if analysis.enumeration.truncated:
            record.flags.append("cover_enumeration_truncated")


class MultiplicityCheck(BaseCheck):
    """Numeric 1-multiplicity, exact polynomial multiplicity and ``n - 2|C|`` agree."""

    theorem = "multiplicity"
    tolerance_keys = ("cluster_tol",)

    def run(self, analysis: TreeAnalysis) -> CheckRecord:
        record = self.new_record()
        numeric = analysis.one_cluster.multiplicity
        exact = multiplicity_of_one(analysis.polynomial)
        formula = analysis.tree.n - 2 * analysis.covers.cover_size
        record.witnesses.update(numeric=numeric, exact=exact, formula=formula, cover_size=analysis.covers.cover_size)
        if analysis.one_cluster.boundary_sensitive:
            record.flags.append("boundary_sensitive_cluster")
        record.require(numeric == exact == formula, f"multiplicities disagree: {numeric}, {exact}, {formula}")
        return record


class VanishingCheck(BaseCheck):
    """Every 1-eigenvector vanishes on every minimum vertex cover."""

    theorem = "vanishing"
    tolerance_keys = ("vanish_tol", "cluster_tol")

    def run(self, analysis: TreeAnalysis) -> CheckRecord:
        record = self.new_record()
        union = analysis.covers.cover_union
        record.witnesses.update(witness_cover=analysis.covers.witness_cover, cover_union=union)
        self.note_truncation(record, analysis)

        try:
            kernel = analysis.kernel
        except TheoremViolation as e:
            record.fail(f"exact 1-eigenspace construction failed: {e}")
            return record

        record.witnesses["dimension"] = kernel.dimension
        exact = multiplicity_of_one(analysis.polynomial)
        record.require(kernel.dimension == exact, f"kernel dimension {kernel.dimension} != multiplicity {exact}")
        for i, f in enumerate(kernel.basis):
            support = sorted(c for c in union if f[c] != 0)
            record.require(not support, f"exact basis vector {i} is nonzero on cover vertices {support}")
        for cover in analysis.enumeration.covers:
            if any(f[c] != 0 for f in kernel.basis for c in cover):
                record.fail(f"exact kernel is nonzero on minimum cover {sorted(cover)}")

        basis = analysis.one_cluster.basis
        if basis.shape[1] and union:
            worst = float(np.max(np.abs(basis[sorted(union), :])))
        else:
            worst = 0.0
        record.slack["max_abs_on_cover_union"] = worst
        record.require(worst <= self.config["vanish_tol"], f"numeric 1-eigenvector reaches {worst:.3e} on the cover union")
        return record


class SeparationBoundsCheck(BaseCheck):
    """The separation is at most both cover bounds, for every minimum cover."""

    theorem = "separation_bounds"
    tolerance_keys = ("bound_tol", "cluster_tol")

    def run(self, analysis: TreeAnalysis) -> CheckRecord:
        record = self.new_record()
        report = analysis.separation
        tol = self.config["bound_tol"]
        self.note_truncation(record, analysis)

        per_cover = []
        for bounds in report.per_cover:
            slack_volume = float(bounds.bound_volume) - report.lambda_bar
            slack_quotient = float(bounds.bound_quotient) - report.lambda_bar
            per_cover.append(
                {
                    "cover": bounds.cover,
                    "bound_volume": bounds.bound_volume,
                    "bound_quotient": bounds.bound_quotient,
                    "slack_volume": slack_volume,
                    "slack_quotient": slack_quotient,
                }
            )
            record.require(slack_volume >= -tol, f"volume bound violated on cover {sorted(bounds.cover)}")
            record.require(slack_quotient >= -tol, f"quotient bound violated on cover {sorted(bounds.cover)}")

        head = per_cover[0]
        record.witnesses.update(
            lambda_bar=report.lambda_bar,
            per_cover=per_cover,
            tight_volume=abs(head["slack_volume"]) <= tol,
            tight_quotient=abs(head["slack_quotient"]) <= tol,
        )
        record.slack["volume"] = min(c["slack_volume"] for c in per_cover)
        record.slack["quotient"] = min(c["slack_quotient"] for c in per_cover)
        return record


class InterlacingCheck(BaseCheck):
    """Quotient and single-deletion Dirichlet spectra interlace the tree spectrum."""

    theorem = "interlacing"
    tolerance_keys = ("interlace_tol", "imag_tol")

    def run(self, analysis: TreeAnalysis) -> CheckRecord:
        record = self.new_record()
        tol = self.config["interlace_tol"]
        t, eigenvalues = analysis.tree, analysis.spectrum.eigenvalues
        self.note_truncation(record, analysis)

        worst = 0.0
        for bounds in analysis.separation.per_cover:
            B = quotient_matrix(analysis.laplacian, t, bounds.cover)
            try:
                numeric = quotient_eigenvalues(B, imag_tol=self.config["imag_tol"])
            except SpectralError as e:
                record.fail(f"quotient of {sorted(bounds.cover)}: {e}")
                continue
            closed = np.array(closed_form_quotient_spectrum(t.n, len(bounds.cover), bounds.bound_quotient))
            gap = float(np.max(np.abs(numeric - closed)))
            worst = max(worst, gap)
            record.require(gap <= tol, f"quotient spectrum of {sorted(bounds.cover)} is off its closed form by {gap:.3e}")
            record.require(
                interlaces(numeric, eigenvalues, tol), f"quotient spectrum of {sorted(bounds.cover)} does not interlace"
            )
        record.slack["quotient_closed_form"] = worst

        excluded = sorted(analysis.covers.always_excluded)
        for z in excluded:
            domain = [v for v in t.vertices if v != z]
            inner = analysis.dirichlet_spectrum(domain).eigenvalues
            record.require(interlaces(inner, eigenvalues, tol), f"Dirichlet spectrum without vertex {z} does not interlace")
        record.witnesses.update(
            quotient_spectrum=analysis.separation.quotient_spectrum,
            dirichlet_deletions=excluded,
        )
        return record


class SignTransversalCheck(BaseCheck):
    """Minimum covers are transversals of the sign graphs of the largest eigenvalue below 1.

    With a nowhere-zero eigenvector the eigenvalue is simple and each
    cover vertex sits in exactly one sign graph. Otherwise the common
    vanishing set avoids every minimum cover and the analysis repeats on
    the Dirichlet operators of the components left after deleting it.
    """

    theorem = "sign_transversal"
    tolerance_keys = ("zero_tol_factor", "cluster_tol")

    def run(self, analysis: TreeAnalysis) -> CheckRecord:
        record = self.new_record()
        cluster = analysis.pre_one_cluster
        self.note_truncation(record, analysis)
        record.witnesses["lambda_p"] = analysis.lambda_p
        if cluster is None or cluster.multiplicity == 0:
            record.fail("no eigenvalue below 1")
            return record
        record.witnesses.update(eigenvector_index=cluster.start, multiplicity=cluster.multiplicity)

        f = analysis.pre_one_nonvanishing
        if f is not None:
            self._nowhere_zero(record, analysis, f, cluster.multiplicity)
        else:
            self._with_vanishing_set(record, analysis)
        if "ambiguous_zero_classification" in record.flags:
            logger.warning(f"Sign classification near the zero threshold on n={analysis.tree.n}")
        return record

    def _transversal(
        self, record: CheckRecord, graphs: tuple[VertexSet, ...], analysis: TreeAnalysis, exact: bool
    ) -> None:
        for cover in analysis.enumeration.covers:
            for graph in graphs:
                hits = len(graph & cover)
                record.require(hits >= 1, f"sign graph {sorted(graph)} misses cover {sorted(cover)}")
                if exact:
                    record.require(hits == 1, f"sign graph {sorted(graph)} meets cover {sorted(cover)} {hits} times")

    def _nowhere_zero(self, record: CheckRecord, analysis: TreeAnalysis, f: np.ndarray, multiplicity: int) -> None:
        zero_tol = relative_zero_tol(f, self.config["zero_tol_factor"])
        decomposition = sign_graphs(analysis.tree, f, zero_tol)
        graphs = decomposition.all_graphs
        cover_size = analysis.covers.cover_size
        record.witnesses.update(case="a", sign_graph_count=decomposition.count, sign_graphs=graphs)
        record.slack["min_abs_entry"] = float(np.min(np.abs(f)))
        if borderline_entries(f, zero_tol):
            record.flags.append("ambiguous_zero_classification")

        record.require(multiplicity == 1, f"eigenvalue below 1 has multiplicity {multiplicity}")
        record.require(
            decomposition.count == cover_size, f"{decomposition.count} sign graphs for a cover of size {cover_size}"
        )
        for graph in graphs:
            record.require(len(graph) >= 2, f"sign graph {sorted(graph)} is a single vertex")
        self._transversal(record, graphs, analysis, exact=True)

    def _with_vanishing_set(self, record: CheckRecord, analysis: TreeAnalysis) -> None:
        t, target, tol = analysis.tree, analysis.lambda_p, self.config["cluster_tol"]
        zeros, borderline = analysis.pre_one_vanishing
        cover_size = analysis.covers.cover_size
        record.witnesses.update(case="b", vanishing_set=zeros)
        if borderline:
            record.flags.append("ambiguous_zero_classification")

        record.require(bool(zeros), "no nowhere-zero eigenvector and no common vanishing set")
        clash = zeros & analysis.covers.cover_union
        record.require(not clash, f"vanishing set meets minimum covers at {sorted(clash)}")
        if not zeros or len(zeros) == t.n:
            return

        components, graphs, positions, without = [], [], [], []
        for component in delete_vertices(t, zeros).components:
            spectrum = analysis.dirichlet_spectrum(component.vertices)
            local = cluster_eigenvalues(spectrum, target, tol)
            if local.multiplicity == 0:
                without.append(list(component.vertices))
                continue
            label = list(component.vertices)
            record.require(local.multiplicity == 1, f"eigenvalue is not simple on component {label}")
            g = local.basis[:, 0]
            component_tol = relative_zero_tol(g, self.config["zero_tol_factor"])
            host = np.zeros(t.n)
            host[label] = g
            decomposition = sign_graphs(t, host, component_tol)
            position = local.start + 1
            vanishing = sorted(v for v, x in zip(component.vertices, g) if abs(x) <= component_tol)
            record.require(not vanishing, f"component {label} eigenvector vanishes at {vanishing}")
            record.require(
                decomposition.count == position,
                f"component {label} has {decomposition.count} sign graphs at eigenvalue position {position}",
            )
            if borderline_entries(g, component_tol):
                record.flags.append("ambiguous_zero_classification")
            graphs.extend(decomposition.all_graphs)
            positions.append(position)
            components.append(
                {"vertices": component.vertices, "position": position, "sign_graph_count": decomposition.count}
            )

        total = len(graphs)
        record.witnesses.update(
            components=components,
            components_without_eigenvalue=without,
            sign_graph_count=total,
            position_sum=sum(positions),
        )
        if without:
            record.flags.append("components_without_eigenvalue")
        record.require(bool(components), "eigenvalue missing from every component of the decomposition")
        record.require(total <= sum(positions), f"{total} sign graphs exceed the position sum {sum(positions)}")
        record.require(total == cover_size, f"{total} sign graphs for a cover of size {cover_size}")
        self._transversal(record, tuple(graphs), analysis, exact=True)


class DirichletMultiplicityCheck(BaseCheck):
    """1-multiplicity of Dirichlet operators matches their matching polynomials."""

    theorem = "dirichlet_multiplicity"
    tolerance_keys = ("cluster_tol",)

    def run(self, analysis: TreeAnalysis) -> CheckRecord:
        record = self.new_record()
        t = analysis.tree
        domains: list[tuple[int, ...]] = []
        for z in sorted(analysis.covers.always_excluded):
            domains.append(tuple(v for v in t.vertices if v != z))
        if analysis.pre_one_nonvanishing is None:
            zeros, _ = analysis.pre_one_vanishing
            if zeros and len(zeros) < t.n:
                domains.extend(c.vertices for c in delete_vertices(t, zeros).components)

        checked = []
        for domain in dict.fromkeys(domains):
            numeric = cluster_eigenvalues(analysis.dirichlet_spectrum(domain), 1.0, self.config["cluster_tol"]).multiplicity
            exact = multiplicity_of_one(matching_polynomial(t, domain))
            checked.append({"domain": domain, "numeric": numeric, "exact": exact})
            record.require(numeric == exact, f"Dirichlet multiplicity on {list(domain)}: {numeric} != {exact}")
        record.witnesses["domains"] = checked
        return record


class SpectralSanityCheck(BaseCheck):
    """Endpoints, symmetry about 1, residuals, polynomial roots and the position of lambda_p."""

    theorem = "spectral_sanity"
    tolerance_keys = ("endpoint_tol", "cluster_tol", "residual_tol", "vanish_tol")

    def run(self, analysis: TreeAnalysis) -> CheckRecord:
        record = self.new_record()
        values = analysis.spectrum.eigenvalues
        endpoint_tol, cluster_tol = self.config["endpoint_tol"], self.config["cluster_tol"]

        record.slack.update(
            lowest=float(values[0]),
            highest_gap=float(abs(values[-1] - 2.0)),
            asymmetry=float(np.max(np.abs(values + values[::-1] - 2.0))),
            max_residual=float(np.max(analysis.spectrum.residuals)),
        )
        record.require(abs(values[0]) <= endpoint_tol, f"smallest eigenvalue {values[0]:.3e} is not 0")
        record.require(abs(values[-1] - 2.0) <= endpoint_tol, f"largest eigenvalue {values[-1]!r} is not 2")
        record.require(record.slack["asymmetry"] <= cluster_tol, "spectrum is not symmetric about 1")
        record.require(analysis.spectrum.residuals_within(self.config["residual_tol"]), "eigenpair residuals too large")

        poly = analysis.polynomial
        limit = self.config["vanish_tol"] * coefficient_scale(poly)
        worst = max(abs(eval_at(poly, float(x))) for x in values)
        record.slack["charpoly_at_eigenvalues"] = worst
        record.require(worst <= limit, f"matching polynomial reaches {worst:.3e} at an eigenvalue")

        k = analysis.covers.cover_size
        record.witnesses["cover_size"] = k
        record.require(values[k - 1] < 1.0 - cluster_tol, f"eigenvalue {k} is not below 1")
        if k < len(values):
            record.require(values[k] >= 1.0 - cluster_tol, f"eigenvalue {k + 1} is below 1")
        if analysis.lambda_p is not None:
            record.require(analysis.lambda_p == float(values[k - 1]), "lambda_p is not eigenvalue number |C|")
        return record


class OracleCheck(BaseCheck):
    """Tree programs agree with exhaustive search on small trees."""

    theorem = "oracles"
    tolerance_keys = ("brute_force_max_n",)

    def applies_to(self, analysis: TreeAnalysis) -> bool:
        return analysis.tree.n <= self.config["brute_force_max_n"]

    def run(self, analysis: TreeAnalysis) -> CheckRecord:
        record = self.new_record()
        t, covers = analysis.tree, analysis.covers
        size, brute_covers = brute_force_min_covers(t)
        record.witnesses.update(cover_size=covers.cover_size, brute_force_cover_size=size, brute_force_covers=len(brute_covers))

        record.require(covers.cover_size == size, f"cover size {covers.cover_size} != exhaustive {size}")
        record.require(covers.witness_cover in brute_covers, "witness cover is not a minimum cover")
        record.require(covers.matching_size == covers.cover_size, "maximum matching and minimum cover sizes differ")
        union = frozenset().union(*brute_covers)
        record.require(covers.cover_union == union, "cover union disagrees with exhaustive search")
        if not analysis.enumeration.truncated:
            record.require(
                set(analysis.enumeration.covers) == set(brute_covers), "cover enumeration disagrees with exhaustive search"
            )
        brute = brute_force_matching_polynomial(t)
        record.require(brute == analysis.polynomial, "matching polynomial disagrees with exhaustive matchings")
        record.witnesses["coefficients"] = {k: Fraction(c) for k, c in analysis.polynomial.coeffs.items()}
        return record


class CoverPropertiesCheck(BaseCheck):
    """Deletion, leaf and expansion properties of every enumerated minimum cover."""

    theorem = "cover_properties"
    tolerance_keys = ("enumeration_cap",)

    def run(self, analysis: TreeAnalysis) -> CheckRecord:
        record = self.new_record()
        result = check_cover_properties(analysis.tree, self.config["enumeration_cap"], analysis.covers)
        record.witnesses.update(covers_checked=result.covers_checked, checks=result.checks)
        if result.truncated:
            record.flags.append("cover_enumeration_truncated")
        for counterexample in result.counterexamples:
            record.fail(str(counterexample))
        return record
