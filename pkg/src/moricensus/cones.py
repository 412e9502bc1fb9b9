"""Maximal-cone counts assembled from model censuses via orbit lengths.

Each equivalence class of models contributes as many maximal cones as
its orbit length under the order-6 group; that single aggregation rule
reproduces the three-component count 2657, the two-component count 741,
and the grand total 3398.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .declared import DeclaredEntry
from .errors import (
    ConfigError,
    IncompleteCensusError,
    SymmetryMismatchError,
)
from .families import FamilyId, RegularModel
from .triples import Triple, orbit

__all__ = [
    "CensusReport",
    "EXPECTED_SYMMETRIC_TRIPLES",
    "ModelRecord",
    "Source",
    "build_census_report",
    "p_cone_count",
    "symmetric_p_models",
    "t_cone_count",
    "total_census",
]

P_MODELS_TOTAL = 450
P_REGULAR_TOTAL = 347

# The 12 computed symmetric triples, cross-checked against the source
# census: one fully symmetric, two with cyclic symmetry (orbit length 2),
# nine with an order-2 symmetry (orbit length 3).
EXPECTED_SYMMETRIC_TRIPLES = frozenset(
    Triple(*t)
    for t in [
        (0, 0, 0),
        (1, 1, 1),
        (2, 2, 2),
        (0, 1, -1),
        (0, -1, 1),
        (0, 2, -2),
        (0, -2, 2),
        (3, 0, -3),
        (-3, 0, 3),
        (-4, 0, 4),
        (-5, 0, 5),
        (-6, 0, 6),
    ]
)


class Source(Enum):
    COMPUTED_TRIPLE = "computed"
    DECLARED = "declared"


@dataclass(frozen=True, slots=True)
class ModelRecord:
    """A model census unit carrying its orbit length and symmetry order."""

    source: Source
    family: FamilyId | str
    orbit_length: int
    symmetry_order: int
    triple: Triple | None = None

    def __post_init__(self):
        if self.orbit_length * self.symmetry_order != 6:
            raise ValueError(
                f"orbit-stabilizer violation: {self.orbit_length} x "
                f"{self.symmetry_order} != 6"
            )
        if self.source is Source.COMPUTED_TRIPLE:
            if self.triple is None:
                raise ValueError("computed record needs a triple")
            rec = orbit(self.triple)
            if rec.length != self.orbit_length:
                raise ValueError(
                    f"orbit length {self.orbit_length} does not match "
                    f"|orbit({self.triple})| = {rec.length}"
                )


@dataclass(frozen=True, slots=True)
class ConeTotals:
    """Cone-count fragment of a census report."""

    p_cones: int
    t_cones: int
    total_cones: int


@dataclass(frozen=True, slots=True)
class CensusReport:
    """Reconciliation of computed and declared counts."""

    p_models: int
    t_models: int
    p_symmetric: tuple[ModelRecord, ...]
    p_cones: int
    t_cones: int
    total_cones: int
    findings: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.total_cones != self.p_cones + self.t_cones:
            raise ValueError(
                f"total {self.total_cones} != {self.p_cones} + {self.t_cones}"
            )


def computed_record(model: RegularModel) -> ModelRecord:
    rec = orbit(model.triple)
    return ModelRecord(
        source=Source.COMPUTED_TRIPLE,
        family=model.family,
        orbit_length=rec.length,
        symmetry_order=rec.stabilizer_order,
        triple=model.triple,
    )


def symmetric_p_models(
    regular: list[RegularModel],
    declared_symmetric: list[ModelRecord],
) -> list[ModelRecord]:
    """All symmetric three-component models: 12 computed plus 1 declared.

    Validates the computed symmetric triples against the expected set and
    raises SymmetryMismatchError (carrying the triples found) on any
    difference; raises IncompleteCensusError unless all 347 regular
    models are supplied.
    """
    if len(regular) != P_REGULAR_TOTAL:
        raise IncompleteCensusError(len(regular), P_REGULAR_TOTAL)
    records = [computed_record(m) for m in regular]
    symmetric = [r for r in records if r.symmetry_order > 1]
    found = frozenset(r.triple for r in symmetric)
    if found != EXPECTED_SYMMETRIC_TRIPLES:
        raise SymmetryMismatchError(
            sorted(found), sorted(EXPECTED_SYMMETRIC_TRIPLES)
        )
    symmetric.sort(key=lambda r: (r.orbit_length, r.triple))
    return symmetric + list(declared_symmetric)


def p_cone_count(models: list[ModelRecord]) -> int:
    """Sum of orbit lengths over the full 450-model census."""
    if len(models) != P_MODELS_TOTAL:
        raise IncompleteCensusError(len(models), P_MODELS_TOTAL)
    return sum(m.orbit_length for m in models)


def t_cone_count(t_models: int, t_symmetric: int) -> int:
    """Cones from two-component models: symmetric ones have orbit length 3."""
    if not 0 <= t_symmetric <= t_models:
        raise ValueError(
            f"need 0 <= symmetric <= models, got ({t_models}, {t_symmetric})"
        )
    return (t_models - t_symmetric) * 6 + t_symmetric * 3


def total_census(p: int, t: int) -> ConeTotals:
    return ConeTotals(p_cones=p, t_cones=t, total_cones=p + t)


def _require(entries: dict[str, DeclaredEntry], label: str) -> DeclaredEntry:
    try:
        return entries[label]
    except KeyError:
        raise ConfigError(f"missing required entry {label!r}", field=label) from None


RECORDED_FINDINGS = (
    "two-component cone proof display: 118*6 + 11*3 evaluates to 741, "
    "not the displayed 747; the theorem total 741 is correct",
    "two-component sub-count: the n1,n2 <= -2 case is stated as 36 but the "
    "total 83+1+45=129 uses 45",
    "n1=2 flop sub-cases: the stated ranges give 9+8=17 cases while the "
    "corrected case total is 19; two sub-cases are not restated here",
)


def build_census_report(
    regular: list[RegularModel],
    declared: list[DeclaredEntry],
) -> CensusReport:
    """Assemble the full census from computed models and declared entries.

    Requires entries ``t_models``, ``t_symmetric``, ``p_very_degenerate``
    and ``p_very_degenerate_symmetric``.  Declared very-degenerate models
    default to orbit length 6 apart from the declared symmetric ones
    (orbit length 3).
    """
    by_label = {e.label: e for e in declared}
    t_models = _require(by_label, "t_models").count
    t_symmetric = _require(by_label, "t_symmetric").count
    p_vd = _require(by_label, "p_very_degenerate").count
    p_vd_sym = _require(by_label, "p_very_degenerate_symmetric").count
    if p_vd_sym > p_vd:
        raise ConfigError(
            f"p_very_degenerate_symmetric={p_vd_sym} exceeds "
            f"p_very_degenerate={p_vd}",
            field="p_very_degenerate_symmetric",
        )

    declared_records = [
        ModelRecord(
            source=Source.DECLARED,
            family="very_degenerate",
            orbit_length=6,
            symmetry_order=1,
        )
        for _ in range(p_vd - p_vd_sym)
    ] + [
        ModelRecord(
            source=Source.DECLARED,
            family="very_degenerate",
            orbit_length=3,
            symmetry_order=2,
        )
        for _ in range(p_vd_sym)
    ]
    declared_symmetric = [r for r in declared_records if r.symmetry_order > 1]

    symmetric = symmetric_p_models(regular, declared_symmetric)
    records = [computed_record(m) for m in regular] + declared_records
    p_cones = p_cone_count(records)
    t_cones = t_cone_count(t_models, t_symmetric)
    totals = total_census(p_cones, t_cones)
    return CensusReport(
        p_models=len(records),
        t_models=t_models,
        p_symmetric=tuple(symmetric),
        p_cones=totals.p_cones,
        t_cones=totals.t_cones,
        total_cones=totals.total_cones,
        findings=RECORDED_FINDINGS,
    )
