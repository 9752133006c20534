"""Matching expansion of the normalized Laplacian characteristic polynomial.

On a tree every term of ``det(L - xI)`` comes from a matching ``M``::

    P(x) = sum_k (-1)^k c_k (x - 1)^(n - 2k)
    c_k  = sum over k-edge matchings M of prod over matched v of 1/deg v

Coefficients are exact rationals. With a ``domain`` the same expansion is
taken over the forest induced on the domain while keeping host degrees,
which gives the polynomial of the Dirichlet operator on that domain.
"""

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from tree_spectra.cover.oracles import brute_force_matchings
from tree_spectra.errors import VertexSetError
from tree_spectra.trees.rooted import RootedForest
from tree_spectra.trees.tree import Tree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatchingPolynomial:
    """Exact coefficients ``c_k`` of the matching expansion.

    Attributes
    ----------
    coeffs : dict[int, Fraction]
        ``k -> c_k`` for ``k = 0..`` the maximum matching size; every
        listed value is positive.
    n : int
        Dimension of the operator (``|domain|`` for a Dirichlet operator).

    """

    coeffs: dict[int, Fraction]
    n: int

    @property
    def max_matching_size(self) -> int:
        return max(self.coeffs)

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs.get(k, Fraction(0))

    def y_terms(self) -> list[tuple[int, Fraction]]:
        """Nonzero ``(power, coefficient)`` pairs in ``y = x - 1``, highest power first."""
        return [(self.n - 2 * k, (-1) ** k * c) for k, c in sorted(self.coeffs.items())]


def _poly_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    size = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)]


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _domain_of(t: Tree, domain: Optional[Iterable[int]]) -> tuple[int, ...]:
    if domain is None:
        return tuple(t.vertices)
    members = tuple(sorted(t.vertex_set(domain)))
    if not members:
        raise VertexSetError("Matching polynomial domain must be nonempty")
    return members


def _from_sequence(seq: Sequence[Fraction], n: int) -> MatchingPolynomial:
    return MatchingPolynomial(coeffs={k: Fraction(c) for k, c in enumerate(seq) if c != 0}, n=n)


def matching_polynomial(t: Tree, domain: Optional[Iterable[int]] = None) -> MatchingPolynomial:
    """Matching coefficients by a rooted two-state program.

    For each vertex two generating sequences over the number of matched
    edges are kept: subtree matchings leaving the vertex free, and those
    matching it to a child. Matching ``v`` to child ``c`` contributes the
    weight ``1 / (deg v * deg c)``.

    Parameters
    ----------
    t : Tree
        Host tree; its degrees weight every vertex.
    domain : iterable of int, optional
        Restrict to the forest induced on these vertices.

    Returns
    -------
    MatchingPolynomial
        Exact coefficients; ``n`` is the domain size.

    Raises
    ------
    VertexSetError
        If ``domain`` is empty or has an out-of-range id.

    """
    members = _domain_of(t, domain)
    inside = set(members)
    edges = [(u, v) for u, v in t.edges if u in inside and v in inside]
    forest = RootedForest.from_edges(members, edges)

    free: dict[int, list[Fraction]] = {}
    matched: dict[int, list[Fraction]] = {}
    for v in forest.postorder:
        f, m = [Fraction(1)], [Fraction(0)]
        for c in forest.children[v]:
            total_c = _poly_add(free[c], matched[c])
            weight = Fraction(1, t.degree(v) * t.degree(c))
            pair = [Fraction(0)] + [weight * x for x in _poly_mul(f, free[c])]
            m = _poly_add(_poly_mul(m, total_c), pair)
            f = _poly_mul(f, total_c)
        free[v], matched[v] = f, m

    result = [Fraction(1)]
    for root in forest.roots:
        result = _poly_mul(result, _poly_add(free[root], matched[root]))
    poly = _from_sequence(result, len(members))
    logger.debug(f"Matching polynomial on {len(members)} vertices has degree-{poly.max_matching_size} coefficients")
    return poly


def brute_force_matching_polynomial(t: Tree, domain: Optional[Iterable[int]] = None) -> MatchingPolynomial:
    """Same coefficients summed over every matching explicitly."""
    members = _domain_of(t, domain)
    inside = set(members)
    sums: dict[int, Fraction] = {}
    for matching in brute_force_matchings(t):
        if any(u not in inside or v not in inside for u, v in matching):
            continue
        weight = Fraction(1)
        for u, v in matching:
            weight /= t.degree(u) * t.degree(v)
        sums[len(matching)] = sums.get(len(matching), Fraction(0)) + weight
    return MatchingPolynomial(coeffs=dict(sorted(sums.items())), n=len(members))


def multiplicity_of_one(poly: MatchingPolynomial) -> int:
    """Exact multiplicity of eigenvalue 1: ``n - 2 * (largest k with c_k != 0)``."""
    return poly.n - 2 * poly.max_matching_size


def eval_at(poly: MatchingPolynomial, x: float) -> float:
    """Evaluate ``P(x)`` in floating point."""
    y = x - 1.0
    return math.fsum(float((-1) ** k * c) * y ** (poly.n - 2 * k) for k, c in poly.coeffs.items())


def coefficient_scale(poly: MatchingPolynomial) -> float:
    """``sum |c_k|``, the scale used for root-residual tolerances."""
    return float(sum(poly.coeffs.values()))


def format_polynomial(poly: MatchingPolynomial) -> str:
    """Render ``P`` in ``y = x - 1``, e.g. ``y^6 - 13/9 y^4 + 4/9 y^2``."""
    parts = []
    for i, (power, coeff) in enumerate(poly.y_terms()):
        sign = "-" if coeff < 0 else "+"
        magnitude = abs(coeff)
        if power == 0:
            body = str(magnitude)
        else:
            var = "y" if power == 1 else f"y^{power}"
            body = var if magnitude == 1 else f"{magnitude} {var}"
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)
