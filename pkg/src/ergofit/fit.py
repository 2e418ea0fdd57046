"""Fit criteria: admissible furniture intervals, per-record classification,
and population-level mismatch aggregation.

Each criterion inverts one published seating relation into an admissible
interval for a single furniture dimension as a function of one record's body
measurements. Bounds grow with the body measurements they use, which pins the
direction language used in reports:

* furniture below the lower bound -> the sitter outgrows the furniture,
  reported as a *high* mismatch (the "upper mismatch" column of survey-style
  tables);
* furniture above the upper bound -> the furniture overshoots the sitter,
  reported as a *low* mismatch.

One-sided criteria only distinguish match from mismatch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Mapping

from .errors import InputError
from .model import (
    Adjustable,
    AnthropometricRecord,
    DimensionValue,
    Fixed,
    FitConfig,
    FurnitureSpec,
    Gender,
    PopulationDataset,
)

COS_30 = math.cos(math.radians(30.0))
COS_5 = math.cos(math.radians(5.0))


class FitClass(Enum):
    MATCH = "Match"
    LOW_MISMATCH = "LowMismatch"
    HIGH_MISMATCH = "HighMismatch"
    MISMATCH = "Mismatch"  # one-sided criteria collapse both directions


class Sided(Enum):
    TWO_SIDED = "two-sided"
    ONE_SIDED_MIN = "one-sided-min"
    ONE_SIDED_MAX = "one-sided-max"


# Bound functions receive the record, the config, and the resolved seat
# height (needed only by the under-table criterion). Returning +/-inf marks
# an unbounded side.
BoundFn = Callable[[AnthropometricRecord, FitConfig, float], float]


@dataclass(frozen=True)
class FitCriterion:
    """One furniture dimension's admissible interval rule."""

    id: str
    label: str
    dimension: str
    sided: Sided
    lower: BoundFn
    upper: BoundFn
    strict_lower: bool = False  # equality on the lower bound counts as mismatch

    def interval(
        self, record: AnthropometricRecord, cfg: FitConfig, seat_height: float
    ) -> tuple[float, float]:
        return self.lower(record, cfg, seat_height), self.upper(record, cfg, seat_height)


def _seat_height_lower(r, cfg, _sh):
    return (r.PH + cfg.shoe_allowance) * COS_30


def _seat_height_upper(r, cfg, _sh):
    return (r.PH + cfg.shoe_allowance) * COS_5


def _seat_width_lower(r, cfg, _sh):
    return 1.10 * r.HB


def _seat_width_upper(r, cfg, _sh):
    return 1.30 * r.HB


def _seat_depth_lower(r, cfg, _sh):
    return 0.80 * r.BPL


def _seat_depth_upper(r, cfg, _sh):
    return 0.95 * r.BPL


def _backrest_height_lower(r, cfg, _sh):
    return 0.60 * r.SSH


def _backrest_height_upper(r, cfg, _sh):
    return 0.80 * r.SSH


def _backrest_width_lower(r, cfg, _sh):
    return r.HB


def _headrest_upper(r, cfg, _sh):
    return r.SCH


def _desk_height_lower(r, cfg, _sh):
    return r.SEH


def _desk_height_upper(r, cfg, _sh):
    return r.SEH + 50.0


def _seat_clearance_lower(r, cfg, _sh):
    return r.TT + cfg.clearance_margin


def _under_table_lower(r, cfg, seat_height):
    # 30 mm of leg-posture room on top of the seated thigh, per the relation.
    return seat_height + r.TT + 30.0


def _under_table_upper(r, cfg, _sh):
    return (
        r.SEH
        + (r.PH + cfg.shoe_allowance) * COS_5
        + 0.1483 * r.AL
        - cfg.table_thickness
    )


def _table_length_lower(r, cfg, _sh):
    return r.BKL


def _table_depth_lower(r, cfg, _sh):
    # Elbow room: half the elbow span plus the 20-degree abduction reach term.
    return 0.5 * r.SEB + 0.342 * r.AL + cfg.clearance_margin


def _table_depth_upper(r, cfg, _sh):
    return r.EFL


def _unbounded_low(r, cfg, _sh):
    return -math.inf


def _unbounded_high(r, cfg, _sh):
    return math.inf


#: The eleven criteria, in canonical report order.
CRITERIA: tuple[FitCriterion, ...] = (
    FitCriterion(
        id="SH_PH",
        label="SH against PH",
        dimension="SH",
        sided=Sided.TWO_SIDED,
        lower=_seat_height_lower,
        upper=_seat_height_upper,
    ),
    FitCriterion(
        id="SW_HB",
        label="SW against HB",
        dimension="SW",
        sided=Sided.TWO_SIDED,
        lower=_seat_width_lower,
        upper=_seat_width_upper,
    ),
    FitCriterion(
        id="SD_BPL",
        label="SD against BPL",
        dimension="SD",
        sided=Sided.TWO_SIDED,
        lower=_seat_depth_lower,
        upper=_seat_depth_upper,
    ),
    FitCriterion(
        id="BH_SSH",
        label="BH against SSH",
        dimension="BH",
        sided=Sided.TWO_SIDED,
        lower=_backrest_height_lower,
        upper=_backrest_height_upper,
    ),
    FitCriterion(
        id="BW_HB",
        label="BW against HB",
        dimension="BW",
        sided=Sided.ONE_SIDED_MIN,
        lower=_backrest_width_lower,
        upper=_unbounded_high,
    ),
    FitCriterion(
        id="UEB_SCH",
        label="UEB against SCH",
        dimension="UEB",
        sided=Sided.ONE_SIDED_MAX,
        lower=_unbounded_low,
        upper=_headrest_upper,
    ),
    FitCriterion(
        id="STH_SEH",
        label="STH against SEH",
        dimension="STH",
        sided=Sided.TWO_SIDED,
        lower=_desk_height_lower,
        upper=_desk_height_upper,
    ),
    FitCriterion(
        id="STC_TT",
        label="STC against TT",
        dimension="STC",
        sided=Sided.ONE_SIDED_MIN,
        lower=_seat_clearance_lower,
        upper=_unbounded_high,
        strict_lower=True,
    ),
    FitCriterion(
        id="UTH_combined",
        label="UTH against TT, SEH, PH and AL",
        dimension="UTH",
        sided=Sided.TWO_SIDED,
        lower=_under_table_lower,
        upper=_under_table_upper,
    ),
    FitCriterion(
        id="TL_BKL",
        label="TL against BKL",
        dimension="TL",
        sided=Sided.ONE_SIDED_MIN,
        lower=_table_length_lower,
        upper=_unbounded_high,
    ),
    FitCriterion(
        id="TD_combined",
        label="TD against SEB, AL and EFL",
        dimension="TD",
        sided=Sided.TWO_SIDED,
        lower=_table_depth_lower,
        upper=_table_depth_upper,
    ),
)

CRITERIA_BY_ID: Mapping[str, FitCriterion] = {c.id: c for c in CRITERIA}


def resolve_seat_height(spec: FurnitureSpec) -> float:
    """Seat height setting used by the under-table criterion.

    An adjustable seat is evaluated at its lowest setting: that is the most
    favourable position (it widens the admissible under-table interval) and is
    consistent with intersection semantics for adjustable dimensions.
    """
    value = spec.SH
    if isinstance(value, (Fixed, Adjustable)):
        return value.minimum
    raise InputError("seat height is not resolvable on this spec")


def admissible_interval(
    criterion: FitCriterion,
    record: AnthropometricRecord,
    spec: FurnitureSpec,
    cfg: FitConfig,
) -> tuple[float, float]:
    """Admissible ``criterion.dimension`` interval for one sitter.

    Unbounded sides come back as ``-inf`` / ``+inf``.
    """
    return criterion.interval(record, cfg, resolve_seat_height(spec))


def classify_value(
    criterion: FitCriterion,
    value: DimensionValue,
    record: AnthropometricRecord,
    cfg: FitConfig,
    seat_height: float,
) -> FitClass:
    """Classify one dimension value against one record.

    Fixed values compare directly against the interval; adjustable ranges
    match when they intersect it, and otherwise take the class of the nearer
    violated bound.
    """
    lo, hi = criterion.interval(record, cfg, seat_height)
    a, b = value.minimum, value.maximum

    if criterion.sided is Sided.ONE_SIDED_MIN:
        ok = b > lo if criterion.strict_lower else b >= lo
        return FitClass.MATCH if ok else FitClass.MISMATCH
    if criterion.sided is Sided.ONE_SIDED_MAX:
        return FitClass.MATCH if a <= hi else FitClass.MISMATCH

    if isinstance(value, Fixed):
        if value.value < lo:
            return FitClass.HIGH_MISMATCH
        if value.value > hi:
            return FitClass.LOW_MISMATCH
        return FitClass.MATCH
    if lo <= hi and b >= lo and a <= hi:
        return FitClass.MATCH
    if b < lo:
        return FitClass.HIGH_MISMATCH
    if a > hi:
        return FitClass.LOW_MISMATCH
    # Admissible interval empty (lo > hi) with the range spanning the gap.
    return FitClass.HIGH_MISMATCH


def classify(
    criterion: FitCriterion,
    record: AnthropometricRecord,
    spec: FurnitureSpec,
    cfg: FitConfig,
) -> FitClass:
    """Fit class of ``spec``'s dimension for this criterion and sitter."""
    return classify_value(
        criterion,
        spec.dimension(criterion.dimension),
        record,
        cfg,
        resolve_seat_height(spec),
    )


# --- population aggregation ----------------------------------------------------


@dataclass(frozen=True)
class MismatchRow:
    """Match/mismatch percentages for one criterion and one gender.

    ``low_pct`` / ``high_pct`` are ``None`` on one-sided criteria, whose
    mismatches are direction-free.
    """

    criterion: str
    label: str
    gender: Gender
    n: int
    match_pct: float
    low_pct: float | None
    high_pct: float | None
    mismatch_pct: float


@dataclass(frozen=True)
class MismatchReport:
    """Per-criterion, per-gender fit summary of a spec over a population."""

    spec_name: str
    rows: tuple[MismatchRow, ...]
    counts: Mapping[Gender, int]
    notes: tuple[str, ...] = ()

    def row(self, criterion: str, gender: Gender) -> MismatchRow:
        for row in self.rows:
            if row.criterion == criterion and row.gender is gender:
                return row
        raise InputError(f"no report row for ({criterion}, {gender.label})")


def population_mismatch(
    dataset: PopulationDataset, spec: FurnitureSpec, cfg: FitConfig | None = None
) -> MismatchReport:
    """Tally per-record fit classes into percentages per criterion and gender.

    Genders absent from the dataset are recorded with ``n = 0`` in ``counts``
    and produce no rows.
    """
    cfg = cfg or FitConfig()
    counts = {g: dataset.count(g) for g in Gender}
    if len(dataset) == 0:
        raise InputError("population mismatch of an empty dataset")
    seat_height = resolve_seat_height(spec)
    notes = []
    if isinstance(spec.SH, Adjustable):
        notes.append(
            f"under-table bounds evaluated at the lowest seat setting ({seat_height:g} mm)"
        )
    rows = []
    for criterion in CRITERIA:
        value = spec.dimension(criterion.dimension)
        for gender in (Gender.MALE, Gender.FEMALE):
            n = counts[gender]
            if n == 0:
                continue
            tally = {cls: 0 for cls in FitClass}
            for record in dataset.records:
                if record.gender is not gender:
                    continue
                tally[classify_value(criterion, value, record, cfg, seat_height)] += 1
            match_pct = 100.0 * tally[FitClass.MATCH] / n
            if criterion.sided is Sided.TWO_SIDED:
                low_pct = 100.0 * tally[FitClass.LOW_MISMATCH] / n
                high_pct = 100.0 * tally[FitClass.HIGH_MISMATCH] / n
                mismatch_pct = low_pct + high_pct
            else:
                low_pct = None
                high_pct = None
                mismatch_pct = 100.0 * tally[FitClass.MISMATCH] / n
            rows.append(
                MismatchRow(
                    criterion=criterion.id,
                    label=criterion.label,
                    gender=gender,
                    n=n,
                    match_pct=match_pct,
                    low_pct=low_pct,
                    high_pct=high_pct,
                    mismatch_pct=mismatch_pct,
                )
            )
    return MismatchReport(
        spec_name=spec.name, rows=tuple(rows), counts=counts, notes=tuple(notes)
    )


@dataclass(frozen=True)
class MismatchDelta:
    """Signed change in total mismatch between two reports, in points."""

    criterion: str
    label: str
    gender: Gender
    delta_mismatch_pct: float


def compare_reports(a: MismatchReport, b: MismatchReport) -> tuple[MismatchDelta, ...]:
    """Per-row ``b - a`` deltas of total mismatch percentage.

    Both reports must cover the same (criterion, gender) rows.
    """
    keys_a = [(row.criterion, row.gender) for row in a.rows]
    keys_b = [(row.criterion, row.gender) for row in b.rows]
    if keys_a != keys_b:
        raise InputError("reports cover different criteria or genders")
    deltas = []
    for row_a, row_b in zip(a.rows, b.rows):
        deltas.append(
            MismatchDelta(
                criterion=row_a.criterion,
                label=row_a.label,
                gender=row_a.gender,
                delta_mismatch_pct=row_b.mismatch_pct - row_a.mismatch_pct,
            )
        )
    return tuple(deltas)


def criterion_mismatch_by_gender(
    criterion: FitCriterion,
    value: DimensionValue,
    dataset: PopulationDataset,
    cfg: FitConfig,
    seat_height: float,
) -> dict[Gender, float]:
    """Total mismatch percentage of one candidate dimension value per gender.

    Shared with the design optimizer, which scores candidate grid points one
    dimension at a time.
    """
    result: dict[Gender, float] = {}
    for gender in Gender:
        n = dataset.count(gender)
        if n == 0:
            continue
        mismatched = 0
        for record in dataset.records:
            if record.gender is not gender:
                continue
            if classify_value(criterion, value, record, cfg, seat_height) is not FitClass.MATCH:
                mismatched += 1
        result[gender] = 100.0 * mismatched / n
    return result
