from __future__ import annotations

import os
from pathlib import Path

import pytest

from ergofit.model import PopulationDataset, load_dataset
from ergofit.presets import synthetic_dataset

#: Where the measured student dataset is looked for. Reproduction tests skip
#: with a visible marker when it is absent.
DATASET_ENV = "ERGOFIT_DATASET"
DATASET_DEFAULT = Path(__file__).resolve().parent.parent / "data" / "measured_population.csv"


def published_dataset_path() -> Path | None:
    candidate = Path(os.environ.get(DATASET_ENV, DATASET_DEFAULT))
    return candidate if candidate.exists() else None


@pytest.fixture(scope="session")
def published_dataset() -> PopulationDataset | None:
    path = published_dataset_path()
    return load_dataset(path) if path else None


@pytest.fixture(scope="session")
def small_population() -> PopulationDataset:
    return synthetic_dataset(n_male=30, n_female=12, seed=7)


@pytest.fixture(scope="session")
def demo_population() -> PopulationDataset:
    return synthetic_dataset(n_male=120, n_female=40, seed=11)
