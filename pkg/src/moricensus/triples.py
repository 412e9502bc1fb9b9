"""Order-6 equivalence group acting on integer triples.

The group is generated by a shift ``(a, b, c) -> (b, c, a)`` and an
involution ``(a, b, c) -> (-b, -a, -c)``; together they generate six
transformations isomorphic to S3.  Orbits under this action are the
equivalence classes of regular three-component models, and orbit
lengths feed directly into the maximal-cone census.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

__all__ = [
    "COMPONENT_BOUND",
    "GroupElement",
    "OrbitRecord",
    "Triple",
    "apply",
    "canonical",
    "compose",
    "involution",
    "orbit",
    "shift",
    "stabilizer",
]

# All values occurring in the censuses lie in [-9, 9]; the guard surfaces
# misuse without silent wraparound.
COMPONENT_BOUND = 10**6


@dataclass(frozen=True, order=True, slots=True)
class Triple:
    """Ordered integer 3-tuple labelling a three-component model."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"component {name} must be an int, got {value!r}")
            if abs(value) > COMPONENT_BOUND:
                raise ValueError(
                    f"component {name}={value} outside guarded range "
                    f"[-{COMPONENT_BOUND}, {COMPONENT_BOUND}]"
                )

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b, self.c))

    def abs_multiset(self) -> tuple[int, int, int]:
        """Sorted absolute values; invariant under the whole group."""
        return tuple(sorted((abs(self.a), abs(self.b), abs(self.c))))

    def __repr__(self):
        return f"({self.a}, {self.b}, {self.c})"


class GroupElement(Enum):
    """The six symmetries: words in the shift ``s`` and involution ``i``."""

    E = "e"
    S = "s"
    S2 = "s2"
    I = "i"
    IS = "is"
    IS2 = "is2"


def shift(t: Triple) -> Triple:
    """Left cyclic rotation: (a, b, c) -> (b, c, a)."""
    return Triple(t.b, t.c, t.a)


def involution(t: Triple) -> Triple:
    """Swap the first two components and negate all three."""
    return Triple(-t.b, -t.a, -t.c)


_ACTIONS = {
    GroupElement.E: lambda t: t,
    GroupElement.S: shift,
    GroupElement.S2: lambda t: shift(shift(t)),
    GroupElement.I: involution,
    GroupElement.IS: lambda t: involution(shift(t)),
    GroupElement.IS2: lambda t: involution(shift(shift(t))),
}


def apply(g: GroupElement, t: Triple) -> Triple:
    """Image of ``t`` under the group element ``g``."""
    return _ACTIONS[g](t)


def _build_cayley_table() -> dict[tuple[GroupElement, GroupElement], GroupElement]:
    # The six transformations act faithfully on any triple with distinct
    # absolute values, so a single probe identifies each composition.
    probe = Triple(1, 2, 4)
    images = {apply(g, probe): g for g in GroupElement}
    assert len(images) == 6, "group elements must act distinctly on the probe"
    table = {}
    for g in GroupElement:
        for h in GroupElement:
            table[g, h] = images[apply(g, apply(h, probe))]
    return table


_CAYLEY = _build_cayley_table()


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    """Group product: ``apply(compose(g, h), t) == apply(g, apply(h, t))``."""
    return _CAYLEY[g, h]


@dataclass(frozen=True, slots=True)
class OrbitRecord:
    """Full orbit of a triple with its canonical representative.

    Satisfies orbit-stabilizer: ``len(members) * stabilizer_order == 6``.
    """

    representative: Triple
    members: frozenset[Triple]
    stabilizer_order: int

    def __post_init__(self):
        if len(self.members) * self.stabilizer_order != 6:
            raise ValueError(
                f"orbit-stabilizer violation: |orbit|={len(self.members)} "
                f"stabilizer={self.stabilizer_order}"
            )

    @property
    def length(self) -> int:
        return len(self.members)


def stabilizer(t: Triple) -> tuple[GroupElement, ...]:
    """Group elements fixing ``t``, in enum order."""
    return tuple(g for g in GroupElement if apply(g, t) == t)


def orbit(t: Triple) -> OrbitRecord:
    """Orbit of ``t`` under all six group elements."""
    members = frozenset(apply(g, t) for g in GroupElement)
    return OrbitRecord(
        representative=min(members),
        members=members,
        stabilizer_order=len(stabilizer(t)),
    )


def canonical(t: Triple) -> Triple:
    """Lexicographically smallest member of the orbit of ``t``.

    Idempotent and constant on orbits: the deduplication key for
    equivalence classes.
    """
    return min(apply(g, t) for g in GroupElement)
