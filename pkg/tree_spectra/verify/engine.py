"""Run the per-tree checks and collect their records."""

import logging
from typing import Optional

from tree_spectra.config.settings import Settings
from tree_spectra.trees.tree import Tree
from tree_spectra.verify.analysis import TreeAnalysis
from tree_spectra.verify.checks import (
    BaseCheck,
    CoverPropertiesCheck,
    DirichletMultiplicityCheck,
    InterlacingCheck,
    MultiplicityCheck,
    OracleCheck,
    SeparationBoundsCheck,
    SignTransversalCheck,
    SpectralSanityCheck,
    VanishingCheck,
)
from tree_spectra.verify.report import CheckRecord, VerificationReport

logger = logging.getLogger(__name__)

# Run order of verify_all
CHECKS: dict[str, type[BaseCheck]] = {
    "spectral_sanity": SpectralSanityCheck,
    "multiplicity": MultiplicityCheck,
    "vanishing": VanishingCheck,
    "separation_bounds": SeparationBoundsCheck,
    "interlacing": InterlacingCheck,
    "sign_transversal": SignTransversalCheck,
    "dirichlet_multiplicity": DirichletMultiplicityCheck,
    "oracles": OracleCheck,
    "cover_properties": CoverPropertiesCheck,
}


def _analysis_for(t: Tree, settings: Optional[Settings], analysis: Optional[TreeAnalysis]) -> TreeAnalysis:
    if analysis is not None:
        return analysis
    return TreeAnalysis(t, settings)


def run_check(
    name: str, t: Tree, settings: Optional[Settings] = None, analysis: Optional[TreeAnalysis] = None
) -> CheckRecord:
    """Run one named check.

    Parameters
    ----------
    name : str
        Key of ``CHECKS``.
    t : Tree
        Tree under test.
    settings : Settings, optional
        Tolerances (defaults if not provided).
    analysis : TreeAnalysis, optional
        Shared context to reuse; built from ``t`` and ``settings`` if absent.

    Returns
    -------
    CheckRecord
        The check's verdict.

    Raises
    ------
    ValueError
        If ``name`` is not a known check.

    """
    if name not in CHECKS:
        raise ValueError(f"Unknown check: {name}")
    analysis = _analysis_for(t, settings, analysis)
    check = CHECKS[name](analysis.settings.get_verify_config())
    return check.run(analysis)


def verify_multiplicity(t: Tree, settings: Optional[Settings] = None) -> CheckRecord:
    return run_check("multiplicity", t, settings)


def verify_vanishing(t: Tree, settings: Optional[Settings] = None) -> CheckRecord:
    return run_check("vanishing", t, settings)


def verify_separation_bounds(t: Tree, settings: Optional[Settings] = None) -> CheckRecord:
    return run_check("separation_bounds", t, settings)


def verify_interlacing(t: Tree, settings: Optional[Settings] = None) -> CheckRecord:
    return run_check("interlacing", t, settings)


def verify_sign_transversal(t: Tree, settings: Optional[Settings] = None) -> CheckRecord:
    return run_check("sign_transversal", t, settings)


def verify_dirichlet_multiplicity(t: Tree, settings: Optional[Settings] = None) -> CheckRecord:
    return run_check("dirichlet_multiplicity", t, settings)


def verify_spectral_sanity(t: Tree, settings: Optional[Settings] = None) -> CheckRecord:
    return run_check("spectral_sanity", t, settings)


def verify_oracles(t: Tree, settings: Optional[Settings] = None) -> CheckRecord:
    return run_check("oracles", t, settings)


def verify_all(
    t: Tree, settings: Optional[Settings] = None, analysis: Optional[TreeAnalysis] = None
) -> VerificationReport:
    """Run every applicable check on one tree.

    Checks limited by tree size (the exhaustive oracles) are skipped on
    larger trees and leave no record.

    Parameters
    ----------
    t : Tree
        Tree under test.
    settings : Settings, optional
        Tolerances (defaults if not provided).
    analysis : TreeAnalysis, optional
        Shared context to reuse.

    Returns
    -------
    VerificationReport
        One record per check run; failed if any record failed.

    """
    analysis = _analysis_for(t, settings, analysis)
    config = analysis.settings.get_verify_config()
    report = VerificationReport(n=t.n)
    for name, check_class in CHECKS.items():
        check = check_class(config)
        if not check.applies_to(analysis):
            logger.debug(f"Skipping {name} on n={t.n}")
            continue
        record = check.run(analysis)
        report.records.append(record)
        logger.debug(f"{name} on n={t.n}: {'pass' if record.passed else 'FAIL'}")
    return report
