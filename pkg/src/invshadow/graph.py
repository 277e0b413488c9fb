"""Delta-transition graphs and level-set dynamics.

The graph has an edge u -> v exactly when d(f(u), v) < delta, so finite
paths are exactly finite delta-pseudo-orbit segments.  Point sets are
bitmasks (bit p = point p); one level step is a union of precomputed
successor masks, which keeps parameter sweeps cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    BackwardOnNonInvertible,
    BadParams,
    LengthMismatch,
    NonpositiveDelta,
)
from .metric import FiniteMetricSpace
from .systems import SystemMap

FORWARD = "forward"
BACKWARD = "backward"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def bits_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


@dataclass(frozen=True)
class TransitionGraph:
    """Successor/predecessor relation of delta-pseudo-orbit steps."""

    system: SystemMap
    delta: float
    succ: tuple[int, ...]
    pred: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.system.n

    def succ_set(self, u: int) -> frozenset[int]:
        return frozenset(iter_bits(self.succ[u]))

    def pred_set(self, u: int) -> frozenset[int]:
        return frozenset(iter_bits(self.pred[u]))

    def image(self, mask: int) -> int:
        out = 0
        succ = self.succ
        for u in iter_bits(mask):
            out |= succ[u]
        return out

    def preimage(self, mask: int) -> int:
        out = 0
        pred = self.pred
        for u in iter_bits(mask):
            out |= pred[u]
        return out


def build_graph(system: SystemMap, delta: float) -> TransitionGraph:
    """O(n^2) edge construction: succ(u) = open ball of radius delta at f(u)."""
    if not delta > 0:
        raise NonpositiveDelta(f"delta must be positive, got {delta}")
    space = system.space
    n = system.n
    succ = [space.ball_mask(system.map_table[u], delta) for u in range(n)]
    pred = [0] * n
    for u in range(n):
        for v in iter_bits(succ[u]):
            pred[v] |= 1 << u
    return TransitionGraph(system, delta, tuple(succ), tuple(pred))


def is_pseudo_orbit(system: SystemMap, seq, delta: float) -> bool:
    """True iff d(f(seq[k]), seq[k+1]) < delta for every consecutive pair."""
    seq = tuple(seq)
    if not seq:
        raise BadParams("empty sequence")
    for p in seq:
        system.space.check_point(p)
    dist = system.space.dist
    table = system.map_table
    return all(dist[table[a]][b] < delta for a, b in zip(seq, seq[1:]))


def shadows(space: FiniteMetricSpace, seq_a, seq_b, eps: float) -> bool:
    """Pointwise strict closeness of two equal-length sequences."""
    seq_a, seq_b = tuple(seq_a), tuple(seq_b)
    if len(seq_a) != len(seq_b):
        raise LengthMismatch(f"lengths {len(seq_a)} != {len(seq_b)}")
    dist = space.dist
    return all(dist[a][b] < eps for a, b in zip(seq_a, seq_b))


@dataclass(frozen=True)
class LevelSequence:
    """Levels L_0, L_1, ... as bitmasks.

    stabilization, when present, is (first_index, cycle_length): the level
    at first_index repeats cycle_length steps later, so the sequence is
    periodic from there on.
    """

    start_mask: int
    direction: str
    levels: tuple[int, ...]
    stabilization: tuple[int, int] | None


def level_sequence(
    graph: TransitionGraph,
    start: Iterable[int],
    direction: str = FORWARD,
    max_k: int | None = None,
) -> LevelSequence:
    """Iterate union-of-successors (or predecessors) from the start set.

    Stops at max_k or at the first repeated level, whichever comes first.
    The backward direction is meaningful only for bi-infinite pseudo-orbits
    and therefore requires a bijective system.
    """
    if direction not in (FORWARD, BACKWARD):
        raise BadParams(f"unknown direction {direction!r}")
    if direction == BACKWARD and not graph.system.bijective:
        raise BackwardOnNonInvertible(
            f"{graph.system.name} is not bijective; backward levels undefined"
        )
    start_points = tuple(start)
    for p in start_points:
        graph.system.space.check_point(p)
    start_mask = mask_of(start_points)
    if start_mask == 0:
        raise BadParams("empty start set")
    step = graph.image if direction == FORWARD else graph.preimage
    cap = max_k if max_k is not None else 4 * graph.n * graph.n
    levels = [start_mask]
    seen = {start_mask: 0}
    stabilization = None
    for k in range(1, cap + 1):
        nxt = step(levels[-1])
        levels.append(nxt)
        if nxt in seen:
            stabilization = (seen[nxt], k - seen[nxt])
            break
        seen[nxt] = k
    return LevelSequence(start_mask, direction, tuple(levels), stabilization)


def reachable_mask(graph: TransitionGraph, start_mask: int, direction: str = FORWARD) -> int:
    step = graph.image if direction == FORWARD else graph.preimage
    acc = start_mask
    while True:
        nxt = acc | step(acc)
        if nxt == acc:
            return acc
        acc = nxt


def reachable_set(graph: TransitionGraph, start: int) -> frozenset[int]:
    """Points on some finite delta-pseudo-orbit segment from start (inclusive)."""
    graph.system.space.check_point(start)
    return frozenset(iter_bits(reachable_mask(graph, 1 << start, FORWARD)))


def is_chain_transitive(graph: TransitionGraph) -> bool:
    """Strong connectivity of the delta-graph (single point counts)."""
    full = (1 << graph.n) - 1
    return (
        reachable_mask(graph, 1, FORWARD) == full
        and reachable_mask(graph, 1, BACKWARD) == full
    )
