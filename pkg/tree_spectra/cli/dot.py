"""Graphviz DOT rendering of an eigenvector on a tree.

Vertex size shows ``|f(v)|`` and fill color its sign: gray positive,
black negative, white zero.
"""

from collections.abc import Sequence

import numpy as np

from tree_spectra.errors import SelectorError
from tree_spectra.trees.tree import Tree
from tree_spectra.verify.analysis import TreeAnalysis

MIN_WIDTH = 0.15
SCALE = 0.85
COLORS = {1: "gray", -1: "black", 0: "white"}


def select_vector(analysis: TreeAnalysis, selector: str) -> np.ndarray:
    """Pick the eigenvector to draw.

    Parameters
    ----------
    analysis : TreeAnalysis
        Analysis of the tree.
    selector : str
        An eigenvector index into the sorted spectrum, ``"one"`` for the
        first exact basis vector of the 1-eigenspace, or ``"pre-one"`` for
        an eigenvector of the largest eigenvalue below 1.

    Returns
    -------
    numpy.ndarray
        Vertex values.

    Raises
    ------
    SelectorError
        If the index is out of range, ``"one"`` is used on a tree without
        eigenvalue 1, or the selector is not recognised.

    """
    if selector == "one":
        kernel = analysis.kernel
        if kernel.dimension == 0:
            raise SelectorError("Eigenvalue 1 has multiplicity 0 on this tree")
        return np.array([float(x) for x in kernel.basis[0]])
    if selector == "pre-one":
        cluster = analysis.pre_one_cluster
        if cluster is None or cluster.multiplicity == 0:
            raise SelectorError("No eigenvalue below 1")
        return cluster.basis[:, 0].copy()
    try:
        index = int(selector)
    except ValueError as e:
        raise SelectorError(f"Unknown vector selector: {selector!r}") from e
    n = analysis.tree.n
    if not 0 <= index < n:
        raise SelectorError(f"Eigenvector index {index} out of range 0..{n - 1}")
    return analysis.spectrum.eigenvectors[:, index].copy()


def render_dot(t: Tree, f: Sequence[float], zero_tol: float, name: str = "tree") -> str:
    """DOT text with width ``0.15 + 0.85 * |f(v)| / ||f||_inf`` inches per vertex."""
    values = np.asarray(f, dtype=np.float64)
    peak = float(np.max(np.abs(values), initial=0.0))
    lines = [
        f"graph {name} {{",
        '  node [shape=circle, style=filled, fixedsize=true, fontsize=8, color=black];',
    ]
    for v in t.vertices:
        value = values[v]
        sign = 0 if abs(value) <= zero_tol else int(np.sign(value))
        width = MIN_WIDTH + (SCALE * abs(value) / peak if peak > 0 else 0.0)
        lines.append(
            f'  {v} [width={width:.4f}, height={width:.4f}, fillcolor={COLORS[sign]}, label="{v}"];'
        )
    lines.extend(f"  {u} -- {v};" for u, v in t.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
