"""Breadth-first closure of a seed graph under pluggable move operators.

The search keeps a list of known isomorphism classes (keyed by canonical
form), repeatedly applies every move to every frontier graph, and stops
when no move produces a new class; the result is the smallest iso-closed
set of classes containing the seed.  Move sets are plugins: the
geometric flop rules live elsewhere, so the only shipped move set is the
triple group action, which doubles as a test oracle (the closure of a
rigidly encoded triple has exactly as many classes as the triple's
orbit).

Frontier expansion can run on worker threads; results are merged on the
caller's thread in frontier order, so the final class set is identical
regardless of scheduling.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .errors import BudgetExceededError
from .graphs import LabeledGraph, canonical_graph
from .triples import Triple, canonical, involution, shift

__all__ = [
    "ClosureResult",
    "MOVE_SETS",
    "MoveOperator",
    "closure",
    "decode_triple",
    "encode_triple",
    "encode_triple_class",
]


@dataclass(frozen=True, slots=True)
class MoveOperator:
    """A named, deterministic one-step transition on labelled graphs."""

    name: str
    apply_all: Callable[[LabeledGraph], list[LabeledGraph]]


@dataclass(frozen=True, slots=True)
class ClosureResult:
    """Iso-closed class set reached from the seed.

    ``expansion_steps`` counts candidate graphs produced by move
    applications, including rediscoveries of known classes.
    """

    classes: frozenset[bytes]
    class_count: int
    expansion_steps: int

    def __post_init__(self):
        if self.class_count != len(self.classes):
            raise ValueError("class_count must equal len(classes)")


def closure(
    seed: LabeledGraph,
    moves: list[MoveOperator],
    *,
    max_classes: int | None = None,
    max_steps: int | None = None,
    workers: int = 1,
) -> ClosureResult:
    """Breadth-first fixed point of ``moves`` starting from ``seed``.

    Raises BudgetExceededError when a configured class-count or step
    budget is hit (arbitrary move sets may have infinite closures).
    ``workers > 1`` parallelizes frontier expansion without changing
    the result.
    """
    seen = {canonical_graph(seed)}
    frontier = [seed]
    steps = 0

    def expand(g: LabeledGraph) -> list[tuple[bytes, LabeledGraph]]:
        out = []
        for move in moves:
            for h in move.apply_all(g):
                out.append((canonical_graph(h), h))
        return out

    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while frontier:
            if pool is not None:
                batches = list(pool.map(expand, frontier))
            else:
                batches = [expand(g) for g in frontier]
            next_frontier = []
            for batch in batches:
                for key, h in batch:
                    steps += 1
                    if max_steps is not None and steps > max_steps:
                        raise BudgetExceededError("step", max_steps)
                    if key in seen:
                        continue
                    seen.add(key)
                    if max_classes is not None and len(seen) > max_classes:
                        raise BudgetExceededError("class", max_classes)
                    next_frontier.append(h)
            frontier = next_frontier
    finally:
        if pool is not None:
            pool.shutdown(wait=False)

    return ClosureResult(
        classes=frozenset(seen), class_count=len(seen), expansion_steps=steps
    )


# Triples embed as rigid 3-cycles: node k carries label k, so the only
# self-isomorphism is the identity, and the edge after node k carries the
# k-th component.  Distinct triples therefore encode to distinct classes.


def encode_triple(t: Triple) -> LabeledGraph:
    """Rigid encoding: tuple order is visible to the isomorphism test."""
    a, b, c = t
    return LabeledGraph.build(
        (0, 1, 2), [(0, 1, a), (1, 2, b), (2, 0, c)]
    )


def encode_triple_class(t: Triple) -> LabeledGraph:
    """Orbit-quotient encoding: equivalent triples map to equal graphs."""
    return encode_triple(canonical(t))


def decode_triple(g: LabeledGraph) -> Triple:
    """Inverse of :func:`encode_triple`; raises ValueError off the image."""
    if g.node_labels != (0, 1, 2):
        raise ValueError(f"not a rigid triple encoding: nodes {g.node_labels}")
    by_pair = {(u, v): (label, mult) for (u, v, label, mult) in g.edges}
    if len(by_pair) != 3 or set(by_pair) != {(0, 1), (1, 2), (0, 2)}:
        raise ValueError(f"not a rigid triple encoding: edges {g.edges}")
    if any(mult != 1 for (_, mult) in by_pair.values()):
        raise ValueError("triple encoding edges must have multiplicity 1")
    return Triple(by_pair[(0, 1)][0], by_pair[(1, 2)][0], by_pair[(0, 2)][0])


def _triple_move(transform: Callable[[Triple], Triple]):
    def apply_all(g: LabeledGraph) -> list[LabeledGraph]:
        return [encode_triple(transform(decode_triple(g)))]

    return apply_all


MOVE_SETS: dict[str, list[MoveOperator]] = {
    "none": [],
    "triple_group": [
        MoveOperator(name="shift", apply_all=_triple_move(shift)),
        MoveOperator(name="involution", apply_all=_triple_move(involution)),
    ],
}
