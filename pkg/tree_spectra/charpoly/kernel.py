"""Exact rational 1-eigenspace of the normalized Laplacian of a tree.

With ``f = 0`` on a minimum cover ``C`` every vertex outside ``C`` only
sees cover vertices, so ``Lf = f`` reduces to one equation per cover
vertex: ``sum(f(v) for v ~ c) = 0``. The solution space over ``V - C`` is
the whole 1-eigenspace and has dimension ``n - 2|C|``.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from tree_spectra.cover.matching import is_vertex_cover, min_vertex_cover
from tree_spectra.errors import CoverError, TheoremViolation, VertexSetError
from tree_spectra.trees.tree import Tree

logger = logging.getLogger(__name__)

RationalVector = tuple[Fraction, ...]


@dataclass(frozen=True)
class RationalKernel:
    """Basis of the 1-eigenspace in exact rationals.

    Attributes
    ----------
    dimension : int
        Multiplicity of eigenvalue 1.
    basis : tuple[tuple[Fraction, ...], ...]
        Linearly independent vectors over all ``n`` vertices, zero on the cover.

    """

    dimension: int
    basis: tuple[RationalVector, ...]


def row_echelon(rows: list[list[Fraction]], n_cols: int) -> list[int]:
    """Reduce ``rows`` in place to reduced row echelon form.

    Returns
    -------
    list of int
        Pivot column of each nonzero row, in order.

    """
    pivots: list[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        for i_row in range(piv_r, len(rows)):
            if rows[i_row][piv_c] != 0:
                break
        else:
            continue
        rows[piv_r], rows[i_row] = rows[i_row], rows[piv_r]
        fp = rows[piv_r][piv_c]
        rows[piv_r] = [x / fp for x in rows[piv_r]]
        for r in range(len(rows)):
            fr = rows[r][piv_c]
            if r == piv_r or fr == 0:
                continue
            rows[r] = [x - fr * y for x, y in zip(rows[r], rows[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == len(rows):
            break
    return pivots


def nullspace(rows: list[list[Fraction]], n_cols: int) -> list[list[Fraction]]:
    """Basis of ``{x : A x = 0}``, one vector per free column, that column set to 1."""
    reduced = [list(r) for r in rows]
    pivots = row_echelon(reduced, n_cols)
    free = [c for c in range(n_cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        x = [Fraction(0)] * n_cols
        x[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            x[pc] = -reduced[r][fc]
        basis.append(x)
    return basis


def exact_matrix_apply(t: Tree, f: Sequence[Fraction | int]) -> RationalVector:
    """Exact ``Lf`` with ``Lf(u) = f(u) - (1/deg u) * sum(f(v) for v ~ u)``.

    Raises
    ------
    VertexSetError
        If ``f`` does not have one entry per vertex.

    """
    if len(f) != t.n:
        raise VertexSetError(f"Vector of length {len(f)} does not match a tree on {t.n} vertices")
    values = [Fraction(x) for x in f]
    return tuple(values[u] - sum((values[v] for v in t.adjacency[u]), Fraction(0)) / t.degree(u) for u in t.vertices)


def one_eigenspace_exact(t: Tree, cover: Iterable[int]) -> RationalKernel:
    """Solve the cover equations for the 1-eigenspace.

    Parameters
    ----------
    t : Tree
        The tree.
    cover : iterable of int
        A minimum vertex cover of ``t``.

    Returns
    -------
    RationalKernel
        Basis vectors, each checked to satisfy ``Lf = f`` exactly.

    Raises
    ------
    CoverError
        If ``cover`` is not a minimum vertex cover.
    TheoremViolation
        If the dimension is not ``n - 2|C|`` or a basis vector is not fixed by ``L``.

    """
    members = t.vertex_set(cover)
    if not is_vertex_cover(t, members):
        raise CoverError(f"{sorted(members)} is not a vertex cover")
    size, _ = min_vertex_cover(t)
    if len(members) != size:
        raise CoverError(f"{sorted(members)} is not a minimum vertex cover (minimum size {size})")

    unknowns = [v for v in t.vertices if v not in members]
    column = {v: i for i, v in enumerate(unknowns)}
    rows = []
    for c in sorted(members):
        row = [Fraction(0)] * len(unknowns)
        for v in t.adjacency[c]:
            if v in column:
                row[column[v]] = Fraction(1)
        rows.append(row)

    solutions = nullspace(rows, len(unknowns))
    expected = t.n - 2 * size
    if len(solutions) != expected:
        raise TheoremViolation(f"1-eigenspace has dimension {len(solutions)}, expected n - 2|C| = {expected}")

    basis = []
    for x in solutions:
        f = [Fraction(0)] * t.n
        for v, value in zip(unknowns, x):
            f[v] = value
        vector = tuple(f)
        if exact_matrix_apply(t, vector) != vector:
            raise TheoremViolation("Kernel vector is not fixed by the normalized Laplacian")
        basis.append(vector)
    logger.debug(f"Exact 1-eigenspace of dimension {expected} on n={t.n}")
    return RationalKernel(dimension=expected, basis=tuple(basis))
