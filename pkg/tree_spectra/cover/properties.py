"""Checkable forms of the deletion, leaf and expansion properties of minimum covers."""

import logging
from dataclasses import dataclass, field

from tree_spectra.cover.matching import (
    CoverReport,
    analyze_covers,
    enumerate_min_covers,
    forest_min_cover_size,
    is_vertex_cover,
)
from tree_spectra.trees.tree import Tree, VertexSet, expand_subgraph

logger = logging.getLogger(__name__)


@dataclass
class CoverPropertyReport:
    """Outcome of the four cover properties on one tree.

    Attributes
    ----------
    covers_checked : int
        Minimum covers examined.
    truncated : bool
        True when cover enumeration hit its cap.
    checks : dict[str, int]
        Number of instances checked per property.
    counterexamples : list[dict]
        One entry per failed instance, verbatim.

    """

    covers_checked: int = 0
    truncated: bool = False
    checks: dict[str, int] = field(
        default_factory=lambda: {"deletion": 0, "leaves": 0, "expansion": 0, "excluded_deletion": 0}
    )
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def _sample_subsets(cover: VertexSet) -> list[VertexSet]:
    """Nonempty subsets of ``cover``: all of them for small covers, else a fixed sample."""
    members = sorted(cover)
    if len(members) <= 4:
        return [
            frozenset(m for i, m in enumerate(members) if mask >> i & 1)
            for mask in range(1, 1 << len(members))
        ]
    singletons = [frozenset([m]) for m in members]
    co_singletons = [cover - {m} for m in members]
    return singletons + co_singletons + [cover]


def _forest_cover_size(t: Tree, removed: VertexSet) -> int:
    kept = [v for v in t.vertices if v not in removed]
    edges = [(u, v) for u, v in t.edges if u not in removed and v not in removed]
    return forest_min_cover_size(kept, edges)


def check_cover_properties(
    t: Tree, cap: int = 256, report: CoverReport | None = None
) -> CoverPropertyReport:
    """Check the cover properties on every enumerated minimum cover.

    Parameters
    ----------
    t : Tree
        Tree under test.
    cap : int, optional
        Maximum number of minimum covers to examine.
    report : CoverReport, optional
        Precomputed cover report of ``t``.

    Returns
    -------
    CoverPropertyReport
        Counts and any counterexamples.

    """
    report = report or analyze_covers(t)
    enumeration = enumerate_min_covers(t, cap)
    result = CoverPropertyReport(covers_checked=len(enumeration.covers), truncated=enumeration.truncated)
    leaves = t.leaves()
    excluded_sizes = {z: _forest_cover_size(t, frozenset([z])) for z in sorted(report.always_excluded)}

    for cover in enumeration.covers:
        result.checks["leaves"] += 1
        if leaves <= cover:
            result.counterexamples.append({"property": "leaves", "cover": sorted(cover)})

        for sub in _sample_subsets(cover):
            result.checks["deletion"] += 1
            size = _forest_cover_size(t, sub)
            if size != len(cover) - len(sub):
                result.counterexamples.append(
                    {
                        "property": "deletion",
                        "cover": sorted(cover),
                        "deleted": sorted(sub),
                        "remaining_cover_size": size,
                    }
                )

            result.checks["expansion"] += 1
            for component in expand_subgraph(t, sub).components:
                local = component.to_local(sub)
                if component.tree is None:
                    continue
                best = forest_min_cover_size(component.tree.vertices, component.tree.edges)
                if best != len(local) or not is_vertex_cover(component.tree, local):
                    result.counterexamples.append(
                        {
                            "property": "expansion",
                            "cover": sorted(cover),
                            "expanded_by": sorted(sub),
                            "component": list(component.vertices),
                            "component_cover_size": best,
                        }
                    )

        for z, size in excluded_sizes.items():
            result.checks["excluded_deletion"] += 1
            if size != len(cover) or z in cover:
                result.counterexamples.append(
                    {
                        "property": "excluded_deletion",
                        "cover": sorted(cover),
                        "deleted": z,
                        "remaining_cover_size": size,
                    }
                )

    if result.counterexamples:
        logger.warning(f"Cover properties failed on n={t.n}: {result.counterexamples[0]}")
    return result
