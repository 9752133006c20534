"""JSON analysis document emitted by ``tree-spectra analyze``."""

from typing import Optional

from tree_spectra import __version__
from tree_spectra.charpoly.polynomial import multiplicity_of_one
from tree_spectra.verify.analysis import TreeAnalysis
from tree_spectra.verify.report import VerificationReport, to_jsonable

SCHEMA_VERSION = 1


def build_document(
    analysis: TreeAnalysis,
    report: VerificationReport,
    with_vectors: bool = False,
    seed: Optional[int] = None,
) -> dict:
    """Assemble the analysis document of one tree.

    Exact rationals appear as ``"p/q"`` strings; floating-point values
    appear as JSON numbers.

    Parameters
    ----------
    analysis : TreeAnalysis
        Analysis of the tree.
    report : VerificationReport
        Verification records of the same tree.
    with_vectors : bool, optional
        Include eigenvectors (one list per eigenvector).
    seed : int, optional
        Seed the tree was generated from, echoed when given.

    Returns
    -------
    dict
        JSON-ready document.

    """
    t, settings = analysis.tree, analysis.settings
    covers, poly, sep = analysis.covers, analysis.polynomial, analysis.separation

    spectrum = {
        "eigenvalues": analysis.spectrum.eigenvalues,
        "max_residual": float(analysis.spectrum.residuals.max()),
        "sweeps": analysis.spectrum.sweeps,
    }
    if with_vectors:
        spectrum["eigenvectors"] = analysis.spectrum.eigenvectors.T

    document = {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "tree-spectra", "version": __version__},
        "config": {**settings.get_verify_config(), **settings.get_spectral_config()},
        "tree": {"n": t.n, "edges": [list(e) for e in t.edges]},
        "covers": {
            "cover_size": covers.cover_size,
            "witness_cover": covers.witness_cover,
            "matching_size": covers.matching_size,
            "witness_matching": sorted(list(e) for e in covers.witness_matching),
            "cover_union": covers.cover_union,
            "always_excluded": covers.always_excluded,
        },
        "spectrum": spectrum,
        "matching_polynomial": {
            "n": poly.n,
            "coefficients": dict(sorted(poly.coeffs.items())),
            "multiplicity_of_one": multiplicity_of_one(poly),
        },
        "separation": {
            "lambda_bar": sep.lambda_bar,
            "lambda_p": sep.lambda_p,
            "bound_volume": sep.bound_volume,
            "bound_quotient": sep.bound_quotient,
            "quotient_spectrum": sep.quotient_spectrum,
            "per_cover": [
                {"cover": b.cover, "bound_volume": b.bound_volume, "bound_quotient": b.bound_quotient}
                for b in sep.per_cover
            ],
        },
        "verification": report.to_dict(),
    }
    if seed is not None:
        document["seed"] = seed
    return to_jsonable(document)
