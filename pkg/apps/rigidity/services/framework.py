"""
Reflection-symmetric bar-joint frameworks.

A placement gives one point per quotient vertex; the lifted copy of vertex
i sits at Phi(1) p_i. Velocities are symmetric in the same way, so the
infinitesimal motions are the vectors v in R^2n with
<Phi(gamma) p_j - p_i, Phi(gamma) v_j - v_i> = 0 on every edge.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Dict, List, Optional, Sequence, Tuple

from apps.directions.services import linalg
from apps.directions.services.network import DirectionAssignment, edge_vector, from_placement
from apps.gain_graphs.graph import ColoredGraph, Placement
from apps.rigidity.exceptions import CollapsedEdgeError
from config.runconfig import RunConfig

logger = logging.getLogger(__name__)


def edge_lengths(g: ColoredGraph, p: Sequence[Sequence]) -> Tuple[Fraction, ...]:
    """Squared length of Phi(gamma) p_j - p_i per edge."""
    flat = from_placement(p)
    lengths = []
    for edge in g.edges:
        dx, dy = edge_vector(edge, flat)
        lengths.append(dx * dx + dy * dy)
    return tuple(lengths)


def rigidity_matrix(g: ColoredGraph, p: Sequence[Sequence]) -> List[List[Fraction]]:
    """
    m x 2n matrix of the symmetric infinitesimal length constraints.

    With D = Phi(gamma) p_j - p_i the row has -D on v_i and Phi(gamma) D on
    v_j; both are added, so a gain-1 loop at (x, y) gets 4x on v_x.
    """
    flat = from_placement(p)
    rows = []
    for edge in g.edges:
        dx, dy = edge_vector(edge, flat)
        sign = -1 if edge.gain else 1
        row = [Fraction(0)] * (2 * g.n)
        i, j = edge.tail, edge.head
        row[2 * i] -= dx
        row[2 * i + 1] -= dy
        row[2 * j] += sign * dx
        row[2 * j + 1] += dy
        rows.append(row)
    return rows


def rigidity_rank(g: ColoredGraph, p: Sequence[Sequence]) -> int:
    return linalg.rank(rigidity_matrix(g, p), 2 * g.n)


def vertical_translation(n: int) -> List[Fraction]:
    return [Fraction(k % 2) for k in range(2 * n)]


@dataclass(frozen=True)
class RigidityCertificate:
    """Rank certificate of a framework; rigid iff rank == 2n - 1."""
    verdict: str
    rank: int
    target: int
    placement: Placement
    trivial_kernel_dim: int = 1

    @property
    def rigid(self) -> bool:
        return self.verdict == 'rigid'

    def as_dict(self) -> Dict:
        return {
            'verdict': self.verdict,
            'rank': self.rank,
            'target': self.target,
            'trivial_kernel_dim': self.trivial_kernel_dim,
            'placement': [[str(x), str(y)] for x, y in self.placement],
        }


def is_infinitesimally_rigid(g: ColoredGraph, p: Sequence[Sequence]) -> RigidityCertificate:
    rows = rigidity_matrix(g, p)
    translation = vertical_translation(g.n)
    # vertical translation is always an infinitesimal motion
    assert all(linalg.dot(row, translation) == 0 for row in rows)
    rank = linalg.rank(rows, 2 * g.n)
    target = 2 * g.n - 1
    verdict = 'rigid' if rank == target else 'flexible'
    placement = tuple((Fraction(x), Fraction(y)) for x, y in p)
    return RigidityCertificate(verdict, rank, target, placement)


def is_minimally_rigid(g: ColoredGraph, p: Sequence[Sequence]) -> bool:
    """Rigid at p, and every single edge deletion drops the rank to 2n - 2."""
    if not is_infinitesimally_rigid(g, p).rigid:
        return False
    target = 2 * g.n - 2
    return all(rigidity_rank(g.without_edge(i), p) == target for i in range(g.m))


def random_placement(n: int, rng: Random, config: RunConfig) -> Placement:
    bound = config.sample_range
    return tuple(
        (Fraction(rng.randint(-bound, bound)), Fraction(rng.randint(-bound, bound)))
        for _ in range(n)
    )


@dataclass(frozen=True)
class GenericRank:
    rank: int
    placement: Placement
    trials: int


def sample_generic_rank(g: ColoredGraph, trials: int, config: RunConfig = None, rng: Random = None) -> GenericRank:
    """Maximum exact rank over sampled integer placements, with the placement reaching it."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    config = config or RunConfig()
    rng = rng or config.rng()
    best: Optional[GenericRank] = None
    for _ in range(trials):
        p = random_placement(g.n, rng, config)
        rank = rigidity_rank(g, p)
        if best is None or rank > best.rank:
            best = GenericRank(rank, p, trials)
        if rank == 2 * g.n - 1:
            break
    return best


def generic_rank(g: ColoredGraph, trials: int = None, config: RunConfig = None, rng: Random = None) -> int:
    config = config or RunConfig()
    return sample_generic_rank(g, trials or config.generic_trials, config, rng).rank


def is_generically_minimally_rigid(g: ColoredGraph, config: RunConfig = None, rng: Random = None) -> bool:
    """Generic rank 2n - 1 with every edge deletion dropping it, at the sampled placement."""
    config = config or RunConfig()
    sample = sample_generic_rank(g, config.generic_trials, config, rng)
    if sample.rank != 2 * g.n - 1:
        return False
    return is_minimally_rigid(g, sample.placement)


def directions_from_points(g: ColoredGraph, p: Sequence[Sequence]) -> DirectionAssignment:
    """
    Edge vectors Phi(gamma) p_j - p_i of a placement.

    Raises:
        CollapsedEdgeError: if some edge vector is zero.
    """
    flat = from_placement(p)
    directions = []
    for index, edge in enumerate(g.edges):
        d = edge_vector(edge, flat)
        if d == (0, 0):
            raise CollapsedEdgeError(index)
        directions.append(d)
    return tuple(directions)


def length_derivatives(
    g: ColoredGraph,
    p: Sequence[Sequence],
    v: Sequence,
    step: Fraction = Fraction(1, 2 ** 10),
) -> Tuple[Fraction, ...]:
    """
    Exact derivative of each squared length along the symmetric velocity v.

    The squared length is quadratic in the step, so the finite difference
    with its quadratic term removed is exact.
    """
    flat = from_placement(p)
    moved = [a + step * b for a, b in zip(flat, v)]
    derivatives = []
    for edge in g.edges:
        before = edge_vector(edge, flat)
        after = edge_vector(edge, moved)
        motion = edge_vector(edge, v)
        quadratic = step * step * (motion[0] ** 2 + motion[1] ** 2)
        change = (after[0] ** 2 + after[1] ** 2) - (before[0] ** 2 + before[1] ** 2)
        derivatives.append((change - quadratic) / step)
    return tuple(derivatives)
