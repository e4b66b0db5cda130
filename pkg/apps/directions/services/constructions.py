"""
Direction assignments with prescribed realization spaces.

* random_directions: generic directions with integer coordinates
* collapse_directions: reflection-(2,2) graphs, only collapsed realizations
* circuit_special_directions: special pairs on Ross-circuits
* special_pair: special pairs on reflection-Laman graphs

Every construction is verified exactly and retried with fresh randomness
(and a smaller perturbation where one is used) up to RunConfig.retry_cap
times.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Dict, List, Optional, Sequence, Tuple

from apps.directions.exceptions import RetriesExhaustedError
from apps.directions.services.network import (
    HORIZONTAL,
    VERTICAL,
    Direction,
    DirectionAssignment,
    classify,
    induced_direction,
    is_special_pair,
    perp,
    realization_space,
)
from apps.gain_graphs.graph import ColoredGraph, EdgeSubset, edge_subset, phi
from apps.sparsity.exceptions import NotReflectionLamanError, NotRossCircuitError
from apps.sparsity.services.counts import Family, is_member, is_ross_circuit
from apps.sparsity.services.decomposition import (
    CircuitDecomposition,
    TreeMapDecomposition,
    decompose_tree_ref11,
    find_ross_circuits,
    map_components,
)
from config.runconfig import RunConfig

logger = logging.getLogger(__name__)


def _setup(config: Optional[RunConfig], rng: Optional[Random]) -> Tuple[RunConfig, Random]:
    config = config or RunConfig()
    return config, rng or config.rng()


def random_direction(rng: Random, config: RunConfig) -> Direction:
    bound = config.sample_range
    while True:
        d = (Fraction(rng.randint(-bound, bound)), Fraction(rng.randint(-bound, bound)))
        if d != (0, 0):
            return d


def slanted_direction(rng: Random, config: RunConfig) -> Direction:
    """A direction that is neither horizontal nor vertical."""
    while True:
        d = random_direction(rng, config)
        if d[0] != 0 and d[1] != 0:
            return d


def random_directions(g: ColoredGraph, config: RunConfig = None, rng: Random = None) -> DirectionAssignment:
    config, rng = _setup(config, rng)
    return tuple(random_direction(rng, config) for _ in range(g.m))


def to_input_frame(decomposition: TreeMapDecomposition, directions: Sequence[Direction]) -> DirectionAssignment:
    """Carry directions from the switched graph back: d_e = Phi(s_tail) d'_e."""
    s = decomposition.switching
    return tuple(
        phi(s[edge.tail], d) for edge, d in zip(decomposition.graph.edges, directions)
    )


def collapse_directions(g: ColoredGraph, config: RunConfig = None, rng: Random = None) -> DirectionAssignment:
    """
    Directions on a reflection-(2,2) graph whose realizations are all collapsed.

    Tree edges share one slanted direction v and map-graph edges are
    vertical (in the switched frame).

    Raises:
        NotReflection22Error: if g is not reflection-(2,2)
        RetriesExhaustedError: if no attempt verifies
    """
    config, rng = _setup(config, rng)
    decomposition = decompose_tree_ref11(g)
    tree = set(decomposition.tree)
    for attempt in range(1, config.retry_cap + 1):
        v = slanted_direction(rng, config)
        switched = [v if i in tree else VERTICAL for i in range(g.m)]
        directions = to_input_frame(decomposition, switched)
        if classify(g, directions, config.witness_base).collapsed_only:
            logger.debug("collapse directions verified on attempt %d", attempt)
            return directions
        logger.warning("collapse directions failed verification (attempt %d)", attempt)
    raise RetriesExhaustedError('collapse_directions', config.retry_cap)


@dataclass(frozen=True)
class CircuitDirections:
    """Special-pair directions on a Ross-circuit and the edge i'j' they were built around."""
    edge: int
    directions: DirectionAssignment
    attempts: int


def special_edges(decomposition: TreeMapDecomposition) -> List[int]:
    """Per map-graph component, the first cycle edge with switched gain 1."""
    recolored = decomposition.recolored
    chosen = []
    for component in map_components(recolored, decomposition.map_part):
        chosen.append(next(i for i in component.cycle if recolored.edges[i].gain))
    return chosen


def _perturb(base: Direction, rng: Random, config: RunConfig, delta: Fraction) -> Direction:
    bound = config.sample_range
    scale = delta * max(abs(base[0]), abs(base[1]))
    return (
        base[0] + scale * Fraction(rng.randint(-bound, bound), bound),
        base[1] + scale * Fraction(rng.randint(-bound, bound), bound),
    )


def circuit_special_directions(g: ColoredGraph, config: RunConfig = None, rng: Random = None) -> CircuitDirections:
    """
    Special pair on a Ross-circuit.

    In the switched frame the tree gets a slanted v and the map-graph gets
    horizontal directions; the chosen edge of every map component after the
    first gets a slightly tilted horizontal. All edges but i'j' (the chosen
    edge of the first component) are then perturbed, and i'j' takes the
    direction induced by the rest. An attempt is accepted when that
    direction is well defined, d has a faithful realization and perp(d) has
    a one-dimensional realization space.

    Raises:
        NotRossCircuitError: if g is not a Ross-circuit
        RetriesExhaustedError: if no attempt verifies
    """
    config, rng = _setup(config, rng)
    if not is_ross_circuit(g):
        raise NotRossCircuitError()
    decomposition = decompose_tree_ref11(g)
    tree = set(decomposition.tree)
    specials = special_edges(decomposition)
    anchor = specials[0]
    delta = config.epsilon
    for attempt in range(1, config.retry_cap + 1):
        v = slanted_direction(rng, config)
        switched: List[Direction] = []
        for i in range(g.m):
            if i in tree:
                switched.append(v)
            elif i in specials[1:]:
                tilt = config.epsilon * Fraction(rng.randint(1, config.sample_range), config.sample_range)
                switched.append((Fraction(1), tilt))
            else:
                switched.append(HORIZONTAL)
        base = to_input_frame(decomposition, switched)
        rest = [_perturb(base[i], rng, config, delta) for i in range(g.m) if i != anchor]
        induced = induced_direction(g, rest, anchor)
        if induced is not None:
            directions = tuple(rest[:anchor]) + (induced,) + tuple(rest[anchor:])
            faithful = classify(g, directions, config.witness_base).faithful_exists
            if faithful and realization_space(g, perp(directions)).dimension == 1:
                logger.debug("circuit special pair on edge %d after %d attempts", anchor, attempt)
                return CircuitDirections(anchor, directions, attempt)
        logger.debug("circuit attempt %d rejected (delta=%s)", attempt, delta)
        delta *= config.shrink
    logger.warning("no circuit special pair within %d attempts", config.retry_cap)
    raise RetriesExhaustedError('circuit_special_directions', config.retry_cap)


@dataclass(frozen=True)
class SpecialPair:
    """
    A special pair on a reflection-Laman graph and how it was assembled.

    swaps holds (extra edge, special edge) per Ross-circuit; basis is the
    greedy Ross-basis after each extra edge was exchanged for the special
    edge of its circuit, so the special edges are exactly the edges outside
    it.
    """
    directions: DirectionAssignment
    circuits: Tuple[EdgeSubset, ...]
    special_edges: Tuple[int, ...]
    swaps: Tuple[Tuple[int, int], ...]
    basis: EdgeSubset
    attempts: int

    def as_dict(self) -> Dict:
        return {
            'directions': [[str(dx), str(dy)] for dx, dy in self.directions],
            'circuits': [list(c) for c in self.circuits],
            'special_edges': list(self.special_edges),
            'swaps': [list(s) for s in self.swaps],
            'basis': list(self.basis),
            'attempts': self.attempts,
        }


def swap_special_edges(
    decomposition: CircuitDecomposition,
    specials: Sequence[int],
) -> Tuple[EdgeSubset, Tuple[Tuple[int, int], ...]]:
    """
    Exchange the extra edge of every circuit for its special edge.

    The extra edge is the one edge of the circuit outside the basis; basis
    plus extra minus any edge of the circuit is again a Ross-basis.
    """
    basis = set(decomposition.basis)
    swaps = []
    for circuit, special in zip(decomposition.circuits, specials):
        extra = next(i for i in circuit if i not in decomposition.basis)
        basis = (basis | {extra}) - {special}
        swaps.append((extra, special))
    return edge_subset(basis), tuple(swaps)


def _contracted_edges(g: ColoredGraph, circuits: Sequence[EdgeSubset]) -> set:
    """Edges that disappear into a vertex of the reduced graph; lone loops stay."""
    contracted = set()
    for circuit in circuits:
        if len(circuit) == 1 and g.edges[circuit[0]].is_loop:
            continue
        contracted.update(circuit)
    return contracted


def reduced_directions(
    g: ColoredGraph,
    decomposition: CircuitDecomposition,
    directions: Sequence[Direction],
    rng: Random,
    config: RunConfig,
) -> DirectionAssignment:
    """
    perp(d) carried to the reduced graph.

    Surviving edges keep perp of their direction in edge order; every new
    gain-1 loop of a contracted circuit gets a random direction.
    """
    contracted = _contracted_edges(g, decomposition.circuits)
    rotated = perp(directions)
    kept = [rotated[i] for i in range(g.m) if i not in contracted]
    loops = decomposition.reduced.m - len(kept)
    return tuple(kept) + tuple(random_direction(rng, config) for _ in range(loops))


def _generic_for_reduced_graph(
    g: ColoredGraph,
    decomposition: CircuitDecomposition,
    directions: Sequence[Direction],
    rng: Random,
    config: RunConfig,
) -> bool:
    """The reduced graph, a reflection-(2,2) graph, only has collapsed realizations."""
    reduced = decomposition.reduced
    return realization_space(reduced, reduced_directions(g, decomposition, directions, rng, config)).dimension == 1


def _generic_for_basis(g: ColoredGraph, basis: EdgeSubset, directions: Sequence[Direction], config: RunConfig) -> bool:
    """The Ross-basis alone has a faithful realization."""
    return classify(g.restrict(basis), [directions[i] for i in basis], config.witness_base).faithful_exists


def special_pair(g: ColoredGraph, config: RunConfig = None, rng: Random = None) -> SpecialPair:
    """
    Special pair on a reflection-Laman graph.

    Every Ross-circuit gets its own circuit special pair, which fixes its
    special edge; the extra edge of the circuit is swapped into the
    Ross-basis in its place. The basis edges outside the circuits get
    random directions. An attempt is kept when perp(d) is generic on the
    reduced graph and d is generic on the swapped basis; the special edges
    then carry directions induced by their circuits, and the assembled d is
    verified with is_special_pair.

    Raises:
        NotReflectionLamanError: if g is not reflection-Laman
        RetriesExhaustedError: if no attempt verifies
    """
    config, rng = _setup(config, rng)
    if not is_member(g, Family.REFLECTION_LAMAN):
        raise NotReflectionLamanError()
    decomposition = find_ross_circuits(g)
    for attempt in range(1, config.retry_cap + 1):
        directions: List[Optional[Direction]] = [None] * g.m
        specials = []
        for circuit in decomposition.circuits:
            sub, _ = g.induced_by_edges(circuit)
            local = circuit_special_directions(sub, config, rng)
            for position, index in enumerate(circuit):
                directions[index] = local.directions[position]
            specials.append(circuit[local.edge])
        basis, swaps = swap_special_edges(decomposition, specials)
        for i in basis:
            if directions[i] is None:
                directions[i] = random_direction(rng, config)
        directions = tuple(directions)

        if not _generic_for_reduced_graph(g, decomposition, directions, rng, config):
            logger.debug("perp directions not generic on the reduced graph (attempt %d)", attempt)
        elif not _generic_for_basis(g, basis, directions, config):
            logger.debug("directions not generic on the Ross-basis %s (attempt %d)", list(basis), attempt)
        elif not is_special_pair(g, directions):
            logger.warning("assembled directions are not a special pair (attempt %d)", attempt)
        else:
            logger.info("special pair found on attempt %d (%d circuits)", attempt, len(specials))
            return SpecialPair(
                directions=directions,
                circuits=decomposition.circuits,
                special_edges=tuple(specials),
                swaps=swaps,
                basis=basis,
                attempts=attempt,
            )
    logger.warning("special pair search exhausted %d attempts", config.retry_cap)
    raise RetriesExhaustedError('special_pair', config.retry_cap)
