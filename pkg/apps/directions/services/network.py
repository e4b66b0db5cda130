"""
Colored direction networks.

A direction network puts a direction d_e on every quotient edge. A
realization places the quotient vertices so that, for every edge
(i, j, gamma), the lifted edge vector Phi(gamma) p_j - p_i is parallel to
d_e; the symmetric copy of each lifted edge then follows automatically.
Unknowns are ordered (x_0, y_0, x_1, y_1, ...).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from apps.directions.exceptions import ZeroDirectionError
from apps.directions.services import linalg
from apps.gain_graphs.graph import ColoredGraph, Edge, Placement

logger = logging.getLogger(__name__)

Direction = Tuple[Fraction, Fraction]
DirectionAssignment = Tuple[Direction, ...]

VERTICAL = (Fraction(0), Fraction(1))
HORIZONTAL = (Fraction(1), Fraction(0))


def as_direction(d: Sequence) -> Direction:
    dx, dy = d
    return (Fraction(dx), Fraction(dy))


def as_assignment(directions: Sequence[Sequence]) -> DirectionAssignment:
    return tuple(as_direction(d) for d in directions)


def perp(d: Sequence[Sequence]) -> DirectionAssignment:
    """Rotate every direction by a quarter turn: (dx, dy) -> (-dy, dx)."""
    return tuple((-Fraction(dy), Fraction(dx)) for dx, dy in d)


def edge_vector(edge: Edge, vector: Sequence) -> Direction:
    """Phi(gamma) p_head - p_tail for a flat coordinate vector."""
    sign = -1 if edge.gain else 1
    i, j = edge.tail, edge.head
    return (sign * vector[2 * j] - vector[2 * i], vector[2 * j + 1] - vector[2 * i + 1])


def to_placement(vector: Sequence) -> Placement:
    return tuple((Fraction(vector[2 * i]), Fraction(vector[2 * i + 1])) for i in range(len(vector) // 2))


def from_placement(p: Sequence[Sequence]) -> List[Fraction]:
    flat = []
    for x, y in p:
        flat.extend([Fraction(x), Fraction(y)])
    return flat


def build_system(g: ColoredGraph, d: Sequence[Sequence]) -> List[List[Fraction]]:
    """
    The m x 2n system: one row per edge, the cross product
    dx * (Phi(gamma) p_j - p_i)_y - dy * (Phi(gamma) p_j - p_i)_x.

    Raises:
        ZeroDirectionError: if some d_e is the zero vector.
        ValueError: if d does not cover every edge.
    """
    if len(d) != g.m:
        raise ValueError(f"{len(d)} directions for {g.m} edges")
    rows = []
    for index, (edge, direction) in enumerate(zip(g.edges, d)):
        dx, dy = as_direction(direction)
        if dx == 0 and dy == 0:
            raise ZeroDirectionError(index)
        sign = -1 if edge.gain else 1
        row = [Fraction(0)] * (2 * g.n)
        i, j = edge.tail, edge.head
        row[2 * i] += dy
        row[2 * i + 1] -= dx
        row[2 * j] -= dy * sign
        row[2 * j + 1] += dx
        rows.append(row)
    return rows


@dataclass(frozen=True)
class RealizationSpace:
    """Exact basis of the realizations of a direction network."""
    n: int
    basis: Tuple[Tuple[Fraction, ...], ...]
    rank: int

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains_vertical_translation(self) -> bool:
        translation = [Fraction(k % 2) for k in range(2 * self.n)]
        if not self.basis:
            return self.n == 0
        return linalg.rank(list(self.basis) + [translation], 2 * self.n) == self.dimension

    def as_dict(self) -> Dict:
        return {
            'rank': self.rank,
            'dimension': self.dimension,
            'basis': [[str(v) for v in b] for b in self.basis],
        }


def realization_space(g: ColoredGraph, d: Sequence[Sequence]) -> RealizationSpace:
    rows = build_system(g, d)
    ncols = 2 * g.n
    basis = linalg.nullspace(rows, ncols)
    return RealizationSpace(g.n, tuple(tuple(b) for b in basis), ncols - len(basis))


@dataclass(frozen=True)
class PairClassification:
    """
    Whether a direction network has faithful realizations, only collapsed
    ones, or neither.

    never_collapsed[e] is True when edge e is non-degenerate somewhere in
    the realization space.
    """
    dimension: int
    faithful_exists: bool
    collapsed_only: bool
    never_collapsed: Tuple[bool, ...]
    witness: Optional[Placement] = None

    def as_dict(self) -> Dict:
        return {
            'dimension': self.dimension,
            'faithful_exists': self.faithful_exists,
            'collapsed_only': self.collapsed_only,
            'witness': None if self.witness is None else [[str(x), str(y)] for x, y in self.witness],
        }


def _edge_values(g: ColoredGraph, basis) -> List[List[Direction]]:
    return [[edge_vector(edge, b) for b in basis] for edge in g.edges]


def _nonzero(values: Sequence[Direction]) -> bool:
    return any(x != 0 or y != 0 for x, y in values)


def generic_point(
    basis: Sequence[Sequence[Fraction]],
    conditions: Sequence,
    witness_base: int,
) -> Optional[List[Fraction]]:
    """
    Integer combination sum_k M^k b_k of the basis at which every condition
    holds, for the first M = witness_base, witness_base + 1, ... that works.

    Each condition is a callable on a flat vector that is non-zero (as a
    polynomial in M) on the span, so at most dimension - 1 values of M fail
    it and the search is bounded.
    """
    if not basis:
        return None
    dimension = len(basis)
    for t in range(len(conditions) * dimension + 1):
        m = witness_base + t
        point = linalg.combine([m ** k for k in range(dimension)], basis)
        if all(condition(point) for condition in conditions):
            return linalg.primitive_integer_vector(point)
    return None


def faithful_witness(g: ColoredGraph, space: RealizationSpace, witness_base: int = 2 ** 16):
    conditions = [lambda v, e=edge: edge_vector(e, v) != (0, 0) for edge in g.edges]
    point = generic_point(space.basis, conditions, witness_base)
    return None if point is None else to_placement(point)


def classify(g: ColoredGraph, d: Sequence[Sequence], witness_base: int = 2 ** 16) -> PairClassification:
    space = realization_space(g, d)
    never_collapsed = tuple(_nonzero(values) for values in _edge_values(g, space.basis))
    faithful = all(never_collapsed)
    witness = faithful_witness(g, space, witness_base) if faithful else None
    return PairClassification(
        dimension=space.dimension,
        faithful_exists=faithful,
        collapsed_only=space.dimension == 1,
        never_collapsed=never_collapsed,
        witness=witness,
    )


def is_special_pair(g: ColoredGraph, d: Sequence[Sequence]) -> bool:
    """d has a faithful realization while perp(d) has only collapsed ones."""
    if not classify(g, d).faithful_exists:
        return False
    return realization_space(g, perp(d)).dimension == 1


def _strong_conditions(n: int):
    conditions = []
    for i in range(n):
        conditions.append(lambda v, i=i: v[2 * i] != 0)
        for j in range(i + 1, n):
            conditions.append(
                lambda v, i=i, j=j: (v[2 * i], v[2 * i + 1]) != (v[2 * j], v[2 * j + 1])
            )
            conditions.append(
                lambda v, i=i, j=j: (v[2 * i], v[2 * i + 1]) != (-v[2 * j], v[2 * j + 1])
            )
    return conditions


def is_strongly_faithful(space: RealizationSpace) -> bool:
    """Some realization has all 2n lifted points pairwise distinct."""
    conditions = _strong_conditions(space.n)
    return all(any(condition(b) for b in space.basis) for condition in conditions)


def strongly_faithful_witness(space: RealizationSpace, witness_base: int = 2 ** 16) -> Optional[Placement]:
    if not is_strongly_faithful(space):
        return None
    point = generic_point(space.basis, _strong_conditions(space.n), witness_base)
    return None if point is None else to_placement(point)


def induced_direction(g: ColoredGraph, d: Sequence[Sequence], edge: int) -> Optional[Direction]:
    """
    Direction that edge inherits from the network on every other edge.

    d holds directions for the edges of g without edge (in edge order).
    The map p -> Phi(gamma) p_j - p_i must have rank one on the realization
    space of g - edge; its image is then the inherited direction. Returns
    None when the direction is not well defined.
    """
    rest = g.without_edge(edge)
    space = realization_space(rest, d)
    values = [edge_vector(g.edges[edge], b) for b in space.basis]
    if linalg.rank([list(v) for v in values], 2) != 1:
        logger.debug("edge %d: image of rank != 1 on a %d-dimensional space", edge, space.dimension)
        return None
    return next(v for v in values if v != (0, 0))
