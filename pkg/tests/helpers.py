"""Random generators and small builders shared across the test modules."""

from __future__ import annotations

import random

from ergofit.model import (
    Adjustable,
    AnthropometricRecord,
    Fixed,
    FurnitureSpec,
    Gender,
    PopulationDataset,
)

#: Plausible sampling ranges (mm) per measurement.
MEASURE_RANGES = {
    "PH": (370, 490),
    "SEH": (185, 310),
    "BPL": (390, 500),
    "BKL": (470, 550),
    "HB": (320, 395),
    "SSH": (445, 560),
    "SEB": (385, 495),
    "TT": (125, 180),
    "AL": (320, 395),
    "EFL": (380, 475),
    "SCH": (465, 545),
}

#: Plausible value ranges (mm) per furniture dimension.
DIMENSION_RANGES = {
    "SH": (350, 600),
    "SW": (300, 500),
    "SD": (300, 500),
    "BH": (250, 450),
    "BW": (300, 450),
    "UEB": (350, 550),
    "STH": (200, 350),
    "STC": (80, 250),
    "UTH": (500, 750),
    "TL": (400, 600),
    "TD": (350, 800),
}


def random_record(rng: random.Random, record_id: str = "r") -> AnthropometricRecord:
    gender = rng.choice([Gender.MALE, Gender.FEMALE])
    measures = {
        name: round(rng.uniform(*bounds), 2) for name, bounds in MEASURE_RANGES.items()
    }
    return AnthropometricRecord(
        id=record_id, gender=gender, age=rng.randint(17, 30), **measures
    )


def random_spec(rng: random.Random, adjustable_rate: float = 0.3) -> FurnitureSpec:
    dims = {}
    for name, bounds in DIMENSION_RANGES.items():
        value = round(rng.uniform(*bounds), 1)
        if rng.random() < adjustable_rate:
            dims[name] = Adjustable(value, value + round(rng.uniform(10, 120), 1))
        else:
            dims[name] = Fixed(value)
    return FurnitureSpec(name="random", **dims)


def random_population(rng: random.Random, size: int) -> PopulationDataset:
    return PopulationDataset(
        records=tuple(random_record(rng, f"r{i}") for i in range(size))
    )
