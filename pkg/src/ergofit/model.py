"""Domain model: body-measurement records, furniture specifications, dataset I/O.

All lengths are millimetres throughout the package; there is deliberately no
unit conversion. Every type here is immutable after construction, so values
can be shared freely across threads.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, fields
from enum import Enum
from pathlib import Path
from typing import Mapping, Union

from .errors import DatasetError, InputError

#: Body measurements, in canonical column order.
MEASURES = ("PH", "SEH", "BPL", "BKL", "HB", "SSH", "SEB", "TT", "AL", "EFL", "SCH")

#: Furniture dimensions, in canonical order.
DIMENSIONS = ("SH", "SW", "SD", "BH", "BW", "UEB", "STH", "STC", "UTH", "TL", "TD")

#: Exact CSV header for population datasets.
CSV_COLUMNS = ("id", "gender", "age", "study_year") + MEASURES

# Plausibility ceiling for a single measurement (mm). Wide on purpose: the
# point is to reject corrupted cells, not real extremes.
MEASUREMENT_CEILING = 3000.0

AGE_RANGE = (10, 80)
STUDY_YEAR_RANGE = (1, 4)


class Gender(Enum):
    MALE = "M"
    FEMALE = "F"

    @property
    def label(self) -> str:
        return "Male" if self is Gender.MALE else "Female"

    @classmethod
    def parse(cls, token: str) -> "Gender":
        token = token.strip()
        if token in ("M", "Male", "male"):
            return cls.MALE
        if token in ("F", "Female", "female"):
            return cls.FEMALE
        raise InputError(f"gender must be M or F, got {token!r}")


@dataclass(frozen=True)
class AnthropometricRecord:
    """One participant: identifier, gender, and the eleven seated measurements (mm)."""

    id: str
    gender: Gender
    PH: float
    SEH: float
    BPL: float
    BKL: float
    HB: float
    SSH: float
    SEB: float
    TT: float
    AL: float
    EFL: float
    SCH: float
    age: int | None = None
    study_year: int | None = None

    def measure(self, name: str) -> float:
        if name not in MEASURES:
            raise InputError(f"unknown measurement {name!r}")
        return getattr(self, name)


def validate_record(record: AnthropometricRecord) -> list[str]:
    """Return every invariant violation of ``record``; empty list means valid.

    Total function: never raises, names the offending field and bound in each
    message.
    """
    violations = []
    for name in MEASURES:
        value = getattr(record, name)
        if not (value > 0):
            violations.append(f"{name} must be > 0")
        elif not (value < MEASUREMENT_CEILING):
            violations.append(f"{name} must be < {MEASUREMENT_CEILING:.0f}")
    if not isinstance(record.gender, Gender):
        violations.append("gender must be Male or Female")
    if record.age is not None and not (AGE_RANGE[0] <= record.age <= AGE_RANGE[1]):
        violations.append(f"age outside {AGE_RANGE[0]}-{AGE_RANGE[1]}")
    if record.study_year is not None and not (
        STUDY_YEAR_RANGE[0] <= record.study_year <= STUDY_YEAR_RANGE[1]
    ):
        violations.append(f"study_year outside {STUDY_YEAR_RANGE[0]}-{STUDY_YEAR_RANGE[1]}")
    return violations


@dataclass(frozen=True)
class PopulationDataset:
    """Ordered collection of records with unique ids."""

    records: tuple[AnthropometricRecord, ...]
    source: str = ""

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for record in self.records:
            if record.id in seen:
                raise DatasetError(f"duplicate record id {record.id!r}")
            seen.add(record.id)

    def __len__(self) -> int:
        return len(self.records)

    def count(self, gender: Gender) -> int:
        return sum(1 for r in self.records if r.gender is gender)

    def values(self, measure: str, gender: Gender | None = None) -> list[float]:
        """All values of one measurement, optionally restricted to a gender."""
        if measure not in MEASURES:
            raise InputError(f"unknown measurement {measure!r}")
        return [
            getattr(r, measure)
            for r in self.records
            if gender is None or r.gender is gender
        ]


def filter_by_gender(dataset: PopulationDataset, gender: Gender) -> PopulationDataset:
    """Subset of ``dataset`` with the given gender, original order preserved."""
    kept = tuple(r for r in dataset.records if r.gender is gender)
    return PopulationDataset(records=kept, source=dataset.source)


def required_sample_size(population: int, precision: float) -> int:
    """Minimum sample size n = N / (1 + N e^2), rounded up.

    ``precision`` is the tolerated error fraction e; e = 0 demands a census.
    """
    if population < 1:
        raise InputError("population must be >= 1")
    if not (0 <= precision < 1):
        raise InputError("precision must lie in [0, 1)")
    return math.ceil(population / (1 + population * precision * precision))


# --- dataset CSV I/O ---------------------------------------------------------


def _parse_optional_int(cell: str, column: str, line: int) -> int | None:
    cell = cell.strip()
    if cell == "":
        return None
    try:
        return int(cell)
    except ValueError:
        raise DatasetError(f"line {line}: {column} is not an integer: {cell!r}") from None


def load_dataset(path: str | Path) -> PopulationDataset:
    """Parse a population CSV (columns: ``id,gender,age,study_year,PH,...,SCH``).

    Raises:
        InputError: the file does not exist.
        DatasetError: missing column, non-numeric cell (with line number), or a
            row failing record invariants (all violations listed).
    """
    path = Path(path)
    if not path.exists():
        raise InputError(f"dataset not found: {path}")
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        header = reader.fieldnames or []
        for column in CSV_COLUMNS:
            if column not in header:
                raise DatasetError(f"missing column {column!r} in {path.name}")
        records = []
        for row in reader:
            line = reader.line_num
            record_id = (row["id"] or "").strip()
            if not record_id:
                raise DatasetError(f"line {line}: empty id")
            try:
                gender = Gender.parse(row["gender"] or "")
            except InputError as exc:
                raise DatasetError(f"line {line}: {exc}") from None
            measures = {}
            for name in MEASURES:
                cell = (row[name] or "").strip()
                try:
                    measures[name] = float(cell)
                except ValueError:
                    raise DatasetError(
                        f"line {line}: {name} is not numeric: {cell!r}"
                    ) from None
            record = AnthropometricRecord(
                id=record_id,
                gender=gender,
                age=_parse_optional_int(row["age"] or "", "age", line),
                study_year=_parse_optional_int(row["study_year"] or "", "study_year", line),
                **measures,
            )
            violations = validate_record(record)
            if violations:
                raise DatasetError(f"line {line}: " + "; ".join(violations))
            records.append(record)
    return PopulationDataset(records=tuple(records), source=str(path))


def format_number(value: float) -> str:
    """Shortest decimal text that parses back to exactly ``value``."""
    text = repr(float(value))
    return text


def save_dataset(dataset: PopulationDataset, path: str | Path) -> None:
    """Write ``dataset`` back to CSV; a load/save round trip is lossless."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in dataset.records:
            writer.writerow(
                [
                    r.id,
                    r.gender.value,
                    "" if r.age is None else r.age,
                    "" if r.study_year is None else r.study_year,
                ]
                + [format_number(getattr(r, name)) for name in MEASURES]
            )


# --- furniture specifications ------------------------------------------------


@dataclass(frozen=True)
class Fixed:
    """A furniture dimension manufactured at a single value (mm)."""

    value: float

    def __post_init__(self) -> None:
        if not (self.value > 0):
            raise InputError("fixed dimension must be > 0")

    @property
    def minimum(self) -> float:
        return self.value

    @property
    def maximum(self) -> float:
        return self.value


@dataclass(frozen=True)
class Adjustable:
    """A furniture dimension offered as a settable closed range [lo, hi] (mm)."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (self.lo > 0):
            raise InputError("adjustable range must be > 0")
        if not (self.lo < self.hi):
            raise InputError("adjustable range requires lo < hi")

    @property
    def minimum(self) -> float:
        return self.lo

    @property
    def maximum(self) -> float:
        return self.hi


DimensionValue = Union[Fixed, Adjustable]


@dataclass(frozen=True)
class FurnitureSpec:
    """A complete furniture set: all eleven dimensions, fixed or adjustable."""

    name: str
    SH: DimensionValue
    SW: DimensionValue
    SD: DimensionValue
    BH: DimensionValue
    BW: DimensionValue
    UEB: DimensionValue
    STH: DimensionValue
    STC: DimensionValue
    UTH: DimensionValue
    TL: DimensionValue
    TD: DimensionValue

    def dimension(self, name: str) -> DimensionValue:
        if name not in DIMENSIONS:
            raise InputError(f"unknown dimension {name!r}")
        return getattr(self, name)

    def replace(self, **dims: DimensionValue) -> "FurnitureSpec":
        values = {f.name: getattr(self, f.name) for f in fields(self)}
        values.update(dims)
        return FurnitureSpec(**values)


def _dimension_from_json(name: str, raw: object) -> DimensionValue:
    if isinstance(raw, (int, float)) and not isinstance(raw, bool):
        if raw <= 0:
            raise InputError(f"{name} must be > 0")
        return Fixed(float(raw))
    if isinstance(raw, Mapping):
        try:
            lo = float(raw["lo"])
            hi = float(raw["hi"])
        except (KeyError, TypeError, ValueError):
            raise InputError(f"{name} range needs numeric 'lo' and 'hi'") from None
        if lo <= 0 or hi <= 0:
            raise InputError(f"{name} must be > 0")
        if lo >= hi:
            raise InputError(f"{name} range requires lo < hi")
        return Adjustable(lo, hi)
    raise InputError(f"{name} must be a number or a {{'lo':..,'hi':..}} object")


def spec_from_json(obj: Mapping, default_name: str = "unnamed") -> FurnitureSpec:
    """Build a :class:`FurnitureSpec` from its JSON object form.

    The object is keyed by dimension acronym; adjustable dimensions are encoded
    as ``{"lo": x, "hi": y}``. Raises :class:`InputError` naming the first
    missing or invalid dimension.
    """
    if not isinstance(obj, Mapping):
        raise InputError("furniture spec must be a JSON object")
    dims = {}
    for name in DIMENSIONS:
        if name not in obj:
            raise InputError(f"missing dimension {name}")
        dims[name] = _dimension_from_json(name, obj[name])
    name = obj.get("name", default_name)
    if not isinstance(name, str) or not name:
        raise InputError("spec name must be a non-empty string")
    return FurnitureSpec(name=name, **dims)


def spec_to_json(spec: FurnitureSpec) -> dict:
    obj: dict = {"name": spec.name}
    for name in DIMENSIONS:
        value = spec.dimension(name)
        if isinstance(value, Fixed):
            obj[name] = value.value
        else:
            obj[name] = {"lo": value.lo, "hi": value.hi}
    return obj


def load_spec(path: str | Path) -> FurnitureSpec:
    path = Path(path)
    if not path.exists():
        raise InputError(f"furniture spec not found: {path}")
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path.name}: {exc}") from None
    return spec_from_json(obj, default_name=path.stem)


def save_spec(spec: FurnitureSpec, path: str | Path) -> None:
    Path(path).write_text(json.dumps(spec_to_json(spec), indent=2) + "\n", encoding="utf-8")


# --- analysis configuration ---------------------------------------------------


@dataclass(frozen=True)
class FitConfig:
    """Tunable constants used by the fit criteria and report generation.

    ``shoe_allowance`` is added to popliteal height before the seat-height
    bounds; ``table_thickness`` shrinks the under-table ceiling;
    ``clearance_margin`` is the free-space margin in the thigh and desktop
    criteria. Percentiles are the triple reported in descriptive statistics.
    """

    shoe_allowance: float = 30.0
    table_thickness: float = 30.0
    clearance_margin: float = 20.0
    alpha_level: float = 0.05
    percentiles: tuple[float, float, float] = (0.05, 0.50, 0.95)
    rounding_step: float = 5.0

    def __post_init__(self) -> None:
        for label, value in (
            ("shoe_allowance", self.shoe_allowance),
            ("table_thickness", self.table_thickness),
            ("clearance_margin", self.clearance_margin),
            ("alpha_level", self.alpha_level),
            ("rounding_step", self.rounding_step),
        ):
            if not (value > 0):
                raise InputError(f"{label} must be > 0")
        p = self.percentiles
        if len(p) != 3 or not (0 < p[0] < p[1] < p[2] < 1):
            raise InputError("percentiles must be strictly increasing within (0, 1)")
