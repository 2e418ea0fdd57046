"""Design tools: percentile-anchored dimension proposals, grid-search
optimization of a furniture spec against a population, and the fixed
workstation-placement guidance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from .errors import InputError
from .fit import CRITERIA, FitCriterion, criterion_mismatch_by_gender, population_mismatch
from .model import (
    Adjustable,
    DIMENSIONS,
    DimensionValue,
    Fixed,
    FitConfig,
    FurnitureSpec,
    Gender,
    MEASURES,
    PopulationDataset,
)
from .stats import percentile_inc

# The under-table criterion is the only cross-dimension coupling: its lower
# bound moves with the chosen seat height. Seat dimensions are therefore
# optimized first and the table group second, with the seat-height choice
# scored jointly against the under-table candidates.
SEAT_GROUP = ("SH", "SW", "SD", "BH", "BW", "UEB")
TABLE_GROUP = ("STH", "STC", "UTH", "TL", "TD")

_CRITERION_FOR_DIMENSION: Mapping[str, FitCriterion] = {
    c.dimension: c for c in CRITERIA
}


@dataclass(frozen=True)
class PercentileAnchor:
    """A population percentile of one measurement for one gender."""

    measure: str
    gender: Gender
    percentile: float

    def __post_init__(self) -> None:
        if self.measure not in MEASURES:
            raise InputError(f"unknown measurement {self.measure!r}")
        if not (0 < self.percentile < 1):
            raise InputError("anchor percentile must lie in (0, 1)")


@dataclass(frozen=True)
class ConstantAnchor:
    """A literal dimension value; passes through untransformed and unrounded."""

    value: float

    def __post_init__(self) -> None:
        if not (self.value > 0):
            raise InputError("constant anchor must be > 0")


Anchor = Union[PercentileAnchor, ConstantAnchor]


@dataclass(frozen=True)
class ProposalRule:
    """How one furniture dimension is derived from the population.

    A single anchor yields a fixed dimension; a ``(low, high)`` anchor pair
    yields an adjustable range. Percentile anchors are passed through the
    affine transform ``scale * value + offset`` and rounded to the config's
    rounding step; constant anchors are taken literally.
    """

    dimension: str
    anchor: Anchor | tuple[Anchor, Anchor]
    scale: float = 1.0
    offset: float = 0.0

    def __post_init__(self) -> None:
        if self.dimension not in DIMENSIONS:
            raise InputError(f"unknown dimension {self.dimension!r}")
        if not (self.scale > 0):
            raise InputError("rule scale must be > 0")


def _round_to_step(value: float, step: float) -> float:
    return math.floor(value / step + 0.5) * step


def _resolve_anchor(
    rule: ProposalRule, anchor: Anchor, dataset: PopulationDataset, cfg: FitConfig
) -> float:
    if isinstance(anchor, ConstantAnchor):
        return anchor.value
    values = dataset.values(anchor.measure, anchor.gender)
    if not values:
        raise InputError(
            f"rule for {rule.dimension}: no {anchor.gender.label} records for {anchor.measure}"
        )
    value = rule.scale * percentile_inc(values, anchor.percentile) + rule.offset
    return _round_to_step(value, cfg.rounding_step)


def propose_dimensions(
    dataset: PopulationDataset,
    rules: Sequence[ProposalRule],
    cfg: FitConfig | None = None,
    base: FurnitureSpec | None = None,
    name: str = "proposed",
) -> FurnitureSpec:
    """Build a furniture spec from proposal rules.

    Dimensions not covered by a rule are taken from ``base``; with no base,
    every dimension needs a rule. Deterministic and independent of record
    order.
    """
    cfg = cfg or FitConfig()
    dims: dict[str, DimensionValue] = {}
    for rule in rules:
        if rule.dimension in dims:
            raise InputError(f"duplicate rule for dimension {rule.dimension}")
        if isinstance(rule.anchor, tuple):
            lo = _resolve_anchor(rule, rule.anchor[0], dataset, cfg)
            hi = _resolve_anchor(rule, rule.anchor[1], dataset, cfg)
            if not (lo < hi):
                raise InputError(
                    f"rule for {rule.dimension}: range anchors resolve to lo >= hi"
                )
            dims[rule.dimension] = Adjustable(lo, hi)
        else:
            dims[rule.dimension] = Fixed(_resolve_anchor(rule, rule.anchor, dataset, cfg))
    for dimension in DIMENSIONS:
        if dimension not in dims:
            if base is None:
                raise InputError(f"missing dimension {dimension}")
            dims[dimension] = base.dimension(dimension)
    return FurnitureSpec(name=name, **dims)


# --- grid-search optimization ---------------------------------------------------


@dataclass(frozen=True)
class GridRange:
    """Candidate values ``lo, lo + step, ...`` up to ``hi`` for one dimension."""

    lo: float
    hi: float
    step: float

    def __post_init__(self) -> None:
        if not (self.step > 0):
            raise InputError("grid step must be > 0")
        if not (0 < self.lo <= self.hi):
            raise InputError("grid interval must be positive and non-empty")

    def candidates(self) -> list[float]:
        count = int(math.floor((self.hi - self.lo) / self.step + 1e-9)) + 1
        return [self.lo + i * self.step for i in range(count)]


@dataclass(frozen=True)
class OptimizationSpec:
    """Search space and objective weights for :func:`optimize_dimensions`.

    ``grids`` lists the searched dimensions; anything missing falls back to
    ``base``. ``spans`` marks dimensions offered as adjustable: a grid value v
    becomes the range [v, v + span]. ``weights`` maps (criterion id, gender)
    to a non-negative weight; omitted pairs weigh 1.
    """

    grids: Mapping[str, GridRange]
    spans: Mapping[str, float] = field(default_factory=dict)
    weights: Mapping[tuple[str, Gender], float] = field(default_factory=dict)
    base: FurnitureSpec | None = None

    def __post_init__(self) -> None:
        for dimension in self.grids:
            if dimension not in DIMENSIONS:
                raise InputError(f"unknown dimension {dimension!r} in grids")
        for dimension, span in self.spans.items():
            if dimension not in self.grids:
                raise InputError(f"span given for unsearched dimension {dimension!r}")
            if not (span > 0):
                raise InputError("adjustable span must be > 0")
        if self.weights and all(w <= 0 for w in self.weights.values()):
            raise InputError("at least one weight must be positive")
        for weight in self.weights.values():
            if weight < 0:
                raise InputError("weights must be non-negative")


def _as_dimension_value(opt: OptimizationSpec, dimension: str, value: float) -> DimensionValue:
    span = opt.spans.get(dimension)
    if span is None:
        return Fixed(value)
    return Adjustable(value, value + span)


def _weighted_mismatch(
    opt: OptimizationSpec,
    criterion: FitCriterion,
    value: DimensionValue,
    dataset: PopulationDataset,
    cfg: FitConfig,
    seat_height: float,
) -> float:
    per_gender = criterion_mismatch_by_gender(criterion, value, dataset, cfg, seat_height)
    return sum(
        opt.weights.get((criterion.id, gender), 1.0) * pct
        for gender, pct in per_gender.items()
    )


def _fallback(opt: OptimizationSpec, dimension: str) -> DimensionValue:
    if opt.base is None:
        raise InputError(f"missing dimension {dimension}: no grid and no base spec")
    return opt.base.dimension(dimension)


def optimize_dimensions(
    dataset: PopulationDataset,
    opt: OptimizationSpec,
    cfg: FitConfig | None = None,
    name: str = "optimized",
) -> tuple[FurnitureSpec, float]:
    """Pick the grid point minimizing the weighted total mismatch.

    Every criterion constrains exactly one dimension, so dimensions are scored
    independently; the one coupling (seat height inside the under-table bound)
    is handled by scoring each seat-height candidate together with the best
    under-table response to it. The result therefore dominates every candidate
    on the full grid product. Ties break toward the smallest value.
    """
    cfg = cfg or FitConfig()
    if len(dataset) == 0:
        raise InputError("cannot optimize against an empty dataset")

    chosen: dict[str, DimensionValue] = {}

    uth_candidates: list[DimensionValue] | None = None
    if "UTH" in opt.grids:
        uth_candidates = [
            _as_dimension_value(opt, "UTH", v) for v in opt.grids["UTH"].candidates()
        ]
    uth_criterion = _CRITERION_FOR_DIMENSION["UTH"]

    def best_under_table(seat_height: float) -> tuple[float, DimensionValue]:
        """Minimum under-table score attainable at this seat height."""
        candidates = uth_candidates
        if candidates is None:
            candidates = [_fallback(opt, "UTH")]
        best_score = math.inf
        best_value = candidates[0]
        for value in candidates:
            score = _weighted_mismatch(opt, uth_criterion, value, dataset, cfg, seat_height)
            if score < best_score:
                best_score = score
                best_value = value
        return best_score, best_value

    # Stage 1: seat group. Seat height is scored with its under-table
    # consequence folded in; the other seat dimensions are independent.
    for dimension in SEAT_GROUP:
        criterion = _CRITERION_FOR_DIMENSION[dimension]
        if dimension not in opt.grids:
            chosen[dimension] = _fallback(opt, dimension)
            continue
        best_score = math.inf
        best_value: DimensionValue | None = None
        for raw in opt.grids[dimension].candidates():
            value = _as_dimension_value(opt, dimension, raw)
            score = _weighted_mismatch(opt, criterion, value, dataset, cfg, value.minimum)
            if dimension == "SH":
                score += best_under_table(value.minimum)[0]
            if score < best_score:
                best_score = score
                best_value = value
        assert best_value is not None
        chosen[dimension] = best_value

    seat_height = chosen["SH"].minimum

    # Stage 2: table group, with the chosen seat height fixed.
    for dimension in TABLE_GROUP:
        if dimension not in opt.grids:
            chosen[dimension] = _fallback(opt, dimension)
            continue
        if dimension == "UTH":
            chosen[dimension] = best_under_table(seat_height)[1]
            continue
        criterion = _CRITERION_FOR_DIMENSION[dimension]
        best_score = math.inf
        best_value = None
        for raw in opt.grids[dimension].candidates():
            value = _as_dimension_value(opt, dimension, raw)
            score = _weighted_mismatch(opt, criterion, value, dataset, cfg, seat_height)
            if score < best_score:
                best_score = score
                best_value = value
        assert best_value is not None
        chosen[dimension] = best_value

    spec = FurnitureSpec(name=name, **chosen)
    objective = evaluate_objective(dataset, spec, opt, cfg)
    return spec, objective


def evaluate_objective(
    dataset: PopulationDataset,
    spec: FurnitureSpec,
    opt: OptimizationSpec,
    cfg: FitConfig | None = None,
) -> float:
    """Weighted sum of total mismatch percentages of ``spec`` over the dataset."""
    cfg = cfg or FitConfig()
    report = population_mismatch(dataset, spec, cfg)
    return sum(
        opt.weights.get((row.criterion, row.gender), 1.0) * row.mismatch_pct
        for row in report.rows
    )


def evaluate_proposal(
    dataset: PopulationDataset, spec: FurnitureSpec, cfg: FitConfig | None = None
):
    """Mismatch report of a proposed spec; thin alias over the fit engine."""
    return population_mismatch(dataset, spec, cfg)


# --- workstation placement guidance ---------------------------------------------


@dataclass(frozen=True)
class WorkstationGuidelines:
    """Reach-envelope and monitor-placement constants for the desktop layout.

    The keyboard/mouse zone is the frequent-reach envelope on the desktop;
    the monitor sits 500-1000 mm from the eyes at a 15-20 degree viewing
    angle below horizontal.
    """

    keyboard_zone_depth: float = 394.0
    keyboard_zone_length: float = 1194.0
    monitor_distance: tuple[float, float] = (500.0, 1000.0)
    viewing_angle: tuple[float, float] = (15.0, 20.0)


def workstation_guidelines() -> WorkstationGuidelines:
    """The constant placement guidance record."""
    return WorkstationGuidelines()
