"""Bundled reference data: the two surveyed computer-lab furniture sets, the
proposed replacement dimensions, ready-made proposal rulesets, the recorded
percentile-comparison rows driving ``anova --preset``, and a synthetic
population generator for demos and service testing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from .design import (
    Anchor,
    ConstantAnchor,
    GridRange,
    OptimizationSpec,
    PercentileAnchor,
    ProposalRule,
)
from .errors import InputError
from .model import (
    Adjustable,
    AnthropometricRecord,
    Fixed,
    FurnitureSpec,
    Gender,
    MEASURES,
    PopulationDataset,
)

#: Surveyed set with a non-adjustable chair and non-adjustable table.
EXISTING_FIXED = FurnitureSpec(
    name="existing-fixed",
    SH=Fixed(457.2),
    SW=Fixed(393.7),
    SD=Fixed(406.4),
    BH=Fixed(304.8),
    BW=Fixed(355.6),
    UEB=Fixed(406.4),
    STH=Fixed(241.3),
    STC=Fixed(88.9),
    UTH=Fixed(546.1),
    TL=Fixed(482.6),
    TD=Fixed(749.3),
)

#: Surveyed set with an adjustable chair and non-adjustable table.
EXISTING_ADJUSTABLE = FurnitureSpec(
    name="existing-adjustable",
    SH=Adjustable(431.8, 533.4),
    SW=Fixed(457.2),
    SD=Fixed(431.8),
    BH=Fixed(304.8),
    BW=Fixed(393.7),
    UEB=Fixed(406.4),
    STH=Adjustable(228.6, 330.2),
    STC=Adjustable(95.25, 196.85),
    UTH=Fixed(628.65),
    TL=Fixed(457.2),
    TD=Fixed(749.3),
)

# The proposed sets redimension the nine chair/desk parameters; table length
# and depth are governed by the reach-envelope guidance instead, so they carry
# over from the corresponding surveyed set.
PROPOSED_FIXED = FurnitureSpec(
    name="proposed-fixed",
    SH=Fixed(430),
    SW=Fixed(425),
    SD=Fixed(385),
    BH=Fixed(350),
    BW=Fixed(390),
    UEB=Fixed(465),
    STH=Fixed(260),
    STC=Fixed(200),
    UTH=Fixed(645),
    TL=Fixed(482.6),
    TD=Fixed(749.3),
)

PROPOSED_ADJUSTABLE = FurnitureSpec(
    name="proposed-adjustable",
    SH=Adjustable(400, 450),
    SW=Fixed(425),
    SD=Fixed(385),
    BH=Fixed(350),
    BW=Fixed(390),
    UEB=Fixed(465),
    STH=Adjustable(235, 310),
    STC=Adjustable(95.25, 200),
    UTH=Fixed(645),
    TL=Fixed(457.2),
    TD=Fixed(749.3),
)

SPEC_PRESETS: Mapping[str, FurnitureSpec] = {
    spec.name: spec
    for spec in (EXISTING_FIXED, EXISTING_ADJUSTABLE, PROPOSED_FIXED, PROPOSED_ADJUSTABLE)
}


def _constant_rules(spec: FurnitureSpec) -> tuple[ProposalRule, ...]:
    rules = []
    for dimension in ("SH", "SW", "SD", "BH", "BW", "UEB", "STH", "STC", "UTH", "TL", "TD"):
        value = spec.dimension(dimension)
        if isinstance(value, Fixed):
            anchor: Anchor | tuple[Anchor, Anchor] = ConstantAnchor(value.value)
        else:
            anchor = (ConstantAnchor(value.lo), ConstantAnchor(value.hi))
        rules.append(ProposalRule(dimension=dimension, anchor=anchor))
    return tuple(rules)


#: Default rulesets: constant rules reproducing the proposed sets exactly.
RULESET_FIXED = _constant_rules(PROPOSED_FIXED)
RULESET_ADJUSTABLE = _constant_rules(PROPOSED_ADJUSTABLE)

#: The design anchors stated for the proposal, expressed as percentile rules.
#: Kept for transparency and what-if work: resolving these against a
#: population yields anchor-faithful values, which differ from the bundled
#: proposed numbers (those were hand-balanced across genders afterwards).
ANCHOR_RULESET = (
    ProposalRule("SH", PercentileAnchor("PH", Gender.FEMALE, 0.05), offset=30.0),
    ProposalRule("SW", PercentileAnchor("HB", Gender.FEMALE, 0.95)),
    ProposalRule("SD", PercentileAnchor("BPL", Gender.FEMALE, 0.05)),
    ProposalRule("BH", PercentileAnchor("SSH", Gender.FEMALE, 0.05)),
    ProposalRule("BW", PercentileAnchor("SEB", Gender.MALE, 0.95)),
    ProposalRule("UEB", ConstantAnchor(465.0)),
    ProposalRule("STH", PercentileAnchor("SEH", Gender.MALE, 0.05)),
    ProposalRule("STC", ConstantAnchor(200.0)),
    ProposalRule("UTH", ConstantAnchor(645.0)),
)

RULESET_PRESETS: Mapping[str, tuple[ProposalRule, ...]] = {
    "proposed-fixed": RULESET_FIXED,
    "proposed-adjustable": RULESET_ADJUSTABLE,
    "anchors": ANCHOR_RULESET,
}

#: Base spec used to fill dimensions a ruleset leaves open.
RULESET_BASES: Mapping[str, FurnitureSpec] = {
    "proposed-fixed": EXISTING_FIXED,
    "proposed-adjustable": EXISTING_ADJUSTABLE,
    "anchors": EXISTING_FIXED,
}


# --- ruleset JSON --------------------------------------------------------------


def _anchor_from_json(dimension: str, obj) -> Anchor:
    if isinstance(obj, Mapping) and "constant" in obj:
        try:
            return ConstantAnchor(float(obj["constant"]))
        except (TypeError, ValueError):
            raise InputError(f"rule for {dimension}: constant must be numeric") from None
    if isinstance(obj, Mapping) and {"measure", "gender", "percentile"} <= set(obj):
        try:
            return PercentileAnchor(
                measure=str(obj["measure"]),
                gender=Gender.parse(str(obj["gender"])),
                percentile=float(obj["percentile"]),
            )
        except (TypeError, ValueError):
            raise InputError(f"rule for {dimension}: bad percentile anchor") from None
    raise InputError(
        f"rule for {dimension}: anchor must carry 'constant' or "
        "'measure'/'gender'/'percentile'"
    )


def ruleset_from_json(obj) -> tuple[tuple[ProposalRule, ...], FurnitureSpec | None]:
    """Parse a declarative ruleset document.

    Schema::

        {
          "base": "existing-fixed",            # optional preset name
          "rules": [
            {"dimension": "SH", "constant": 430},
            {"dimension": "SH", "range": [{"constant": 400}, {"constant": 450}]},
            {"dimension": "SW",
             "anchor": {"measure": "HB", "gender": "F", "percentile": 0.95},
             "scale": 1.0, "offset": 0.0}
          ]
        }

    Returns the rules plus the resolved base spec (or ``None``).
    """
    if not isinstance(obj, Mapping):
        raise InputError("ruleset must be a JSON object")
    raw_rules = obj.get("rules")
    if not isinstance(raw_rules, Sequence) or isinstance(raw_rules, (str, bytes)):
        raise InputError("ruleset needs a 'rules' array")
    rules = []
    for raw in raw_rules:
        if not isinstance(raw, Mapping) or "dimension" not in raw:
            raise InputError("every rule needs a 'dimension'")
        dimension = str(raw["dimension"])
        scale = float(raw.get("scale", 1.0))
        offset = float(raw.get("offset", 0.0))
        if "range" in raw:
            pair = raw["range"]
            if not isinstance(pair, Sequence) or len(pair) != 2:
                raise InputError(f"rule for {dimension}: range needs two anchors")
            anchor: Anchor | tuple[Anchor, Anchor] = (
                _anchor_from_json(dimension, pair[0]),
                _anchor_from_json(dimension, pair[1]),
            )
        elif "constant" in raw:
            anchor = _anchor_from_json(dimension, raw)
        elif "anchor" in raw:
            anchor = _anchor_from_json(dimension, raw["anchor"])
        else:
            raise InputError(f"rule for {dimension}: needs 'constant', 'anchor' or 'range'")
        rules.append(ProposalRule(dimension=dimension, anchor=anchor, scale=scale, offset=offset))
    base = None
    base_name = obj.get("base")
    if base_name is not None:
        if base_name not in SPEC_PRESETS:
            raise InputError(f"unknown base preset {base_name!r}")
        base = SPEC_PRESETS[base_name]
    return tuple(rules), base


def optimization_from_json(obj) -> OptimizationSpec:
    """Parse an optimization search document.

    Schema::

        {
          "base": "existing-fixed",                   # optional preset name
          "grids": {"SH": {"lo": 400, "hi": 460, "step": 5}, ...},
          "spans": {"SH": 50},                        # searched as [v, v+span]
          "weights": [{"criterion": "SH_PH", "gender": "M", "weight": 2.0}]
        }
    """
    if not isinstance(obj, Mapping):
        raise InputError("optimization config must be a JSON object")
    raw_grids = obj.get("grids")
    if not isinstance(raw_grids, Mapping) or not raw_grids:
        raise InputError("optimization config needs a non-empty 'grids' object")
    grids = {}
    for dimension, grid in raw_grids.items():
        if not isinstance(grid, Mapping):
            raise InputError(f"grid for {dimension} must be an object")
        try:
            grids[str(dimension)] = GridRange(
                lo=float(grid["lo"]), hi=float(grid["hi"]), step=float(grid["step"])
            )
        except (KeyError, TypeError, ValueError):
            raise InputError(
                f"grid for {dimension} needs numeric 'lo', 'hi' and 'step'"
            ) from None
    spans = {}
    for dimension, span in (obj.get("spans") or {}).items():
        try:
            spans[str(dimension)] = float(span)
        except (TypeError, ValueError):
            raise InputError(f"span for {dimension} must be numeric") from None
    weights = {}
    for entry in obj.get("weights") or []:
        if not isinstance(entry, Mapping):
            raise InputError("each weight entry must be an object")
        try:
            key = (str(entry["criterion"]), Gender.parse(str(entry["gender"])))
            weights[key] = float(entry["weight"])
        except (KeyError, TypeError, ValueError):
            raise InputError(
                "weight entries need 'criterion', 'gender' and numeric 'weight'"
            ) from None
    base = None
    base_name = obj.get("base")
    if base_name is not None:
        if base_name not in SPEC_PRESETS:
            raise InputError(f"unknown base preset {base_name!r}")
        base = SPEC_PRESETS[base_name]
    return OptimizationSpec(grids=grids, spans=spans, weights=weights, base=base)


# --- percentile-comparison fixtures for the ANOVA command -----------------------


@dataclass(frozen=True)
class PercentileComparison:
    """Observed body-measure percentile triple vs a furniture reference triple."""

    label: str
    gender: Gender
    observed: tuple[float, float, float]
    expected: tuple[float, float, float]


def _rows(*entries) -> tuple[PercentileComparison, ...]:
    return tuple(PercentileComparison(*entry) for entry in entries)


_M = Gender.MALE
_F = Gender.FEMALE

#: Comparison rows for the non-adjustable furniture set.
COMPARISONS_FIXED = _rows(
    ("SH vs PH", _M, (422.65, 444.96, 466.49), (443.79, 457.2, 470.61)),
    ("SH vs PH", _F, (395.17, 414.58, 438.4), (443.79, 457.2, 470.61)),
    ("SW vs HB", _M, (335.31, 350.23, 365.34), (376.98, 393.7, 410.42)),
    ("SW vs HB", _F, (353.28, 367.24, 379.45), (375.97, 393.7, 411.43)),
    ("SD vs BPL", _M, (422.91, 454.1, 483.72), (388.67, 406.4, 424.13)),
    ("SD vs BPL", _F, (412.78, 448.24, 470.99), (388.67, 406.4, 424.13)),
    ("BH vs SSH", _M, (488.6, 512.03, 539.42), (294.62, 304.8, 314.98)),
    ("BH vs SSH", _F, (467.05, 488.85, 509.16), (294.62, 304.8, 314.98)),
    ("BW vs HB", _M, (335.31, 350.23, 365.34), (346.88, 355.6, 364.32)),
    ("BW vs HB", _F, (353.28, 367.24, 379.45), (346.88, 355.6, 364.32)),
    ("UEB vs SCH", _M, (495.19, 511.42, 528.01), (392.32, 406.4, 420.48)),
    ("UEB vs SCH", _F, (475.12, 493.8, 510.12), (392.32, 406.4, 420.48)),
    ("STH vs SEH", _M, (205.99, 235.05, 261.23), (230.81, 241.3, 251.79)),
    ("STH vs SEH", _F, (200.65, 230.26, 257.61), (230.81, 241.3, 251.79)),
    ("STC vs TT", _M, (143.46, 155.99, 168.68), (80.32, 88.9, 97.48)),
    ("STC vs TT", _F, (129.33, 144.58, 161.45), (80.32, 88.9, 97.48)),
    ("TL vs BKL", _M, (505.0, 522.23, 536.1), (473.68, 482.6, 491.52)),
    ("TL vs BKL", _F, (489.25, 509.05, 529.86), (473.68, 482.6, 491.52)),
)

#: Comparison rows for the adjustable-chair set; range dimensions are tested
#: at both limits.
COMPARISONS_ADJUSTABLE = _rows(
    ("SH (lowest limit) vs PH", _M, (422.65, 444.96, 466.49), (410.21, 431.8, 453.39)),
    ("SH (lowest limit) vs PH", _F, (395.17, 414.58, 438.4), (410.21, 431.8, 453.39)),
    ("SH (highest limit) vs PH", _M, (422.65, 444.96, 466.49), (506.73, 533.4, 560.07)),
    ("SH (highest limit) vs PH", _F, (395.17, 414.58, 438.4), (506.73, 533.4, 560.07)),
    ("SW vs HB", _M, (335.31, 350.23, 365.34), (434.34, 457.2, 480.06)),
    ("SW vs HB", _F, (353.28, 367.24, 379.45), (434.34, 457.2, 480.06)),
    ("SD vs BPL", _M, (422.91, 454.1, 483.72), (410.21, 431.8, 453.39)),
    ("SD vs BPL", _F, (412.78, 448.24, 470.99), (410.21, 431.8, 453.39)),
    ("BH vs SSH", _M, (488.6, 512.03, 539.42), (289.56, 304.8, 320.04)),
    ("BH vs SSH", _F, (467.05, 488.85, 509.16), (289.56, 304.8, 320.04)),
    ("BW vs HB", _M, (335.31, 350.23, 365.34), (374.02, 393.7, 413.39)),
    ("BW vs HB", _F, (353.28, 367.24, 379.45), (374.02, 393.7, 413.39)),
    ("UEB vs SCH", _M, (495.19, 511.42, 528.01), (386.08, 406.4, 426.72)),
    ("UEB vs SCH", _F, (475.12, 493.8, 510.12), (386.08, 406.4, 426.72)),
    ("STH (lowest limit) vs SEH", _M, (205.99, 235.05, 261.23), (217.17, 228.6, 240.03)),
    ("STH (lowest limit) vs SEH", _F, (200.65, 230.26, 257.61), (217.17, 228.6, 240.03)),
    ("STH (highest limit) vs SEH", _M, (205.99, 235.05, 261.23), (313.69, 330.2, 346.71)),
    ("STH (highest limit) vs SEH", _F, (200.65, 230.26, 257.61), (313.69, 330.2, 346.71)),
    ("STC (lowest limit) vs TT", _M, (143.46, 155.99, 168.68), (90.49, 95.25, 100.01)),
    ("STC (lowest limit) vs TT", _F, (129.33, 144.58, 161.45), (90.49, 95.25, 100.01)),
    ("STC (highest limit) vs TT", _M, (143.46, 155.99, 168.68), (187.01, 196.85, 206.69)),
    ("STC (highest limit) vs TT", _F, (129.33, 144.58, 161.45), (187.01, 196.85, 206.69)),
    ("TL vs BKL", _M, (505.0, 522.23, 536.1), (434.34, 457.2, 480.06)),
    ("TL vs BKL", _F, (489.25, 509.05, 529.86), (434.34, 457.2, 480.06)),
)

COMPARISON_PRESETS: Mapping[str, tuple[PercentileComparison, ...]] = {
    "existing-fixed": COMPARISONS_FIXED,
    "existing-adjustable": COMPARISONS_ADJUSTABLE,
}


# --- synthetic population --------------------------------------------------------

#: Per-gender (mean, sd) in mm for each measurement, taken from an
#: engineering-student cohort. Used only to fabricate demo populations.
POPULATION_PARAMETERS: Mapping[Gender, Mapping[str, tuple[float, float]]] = {
    Gender.MALE: {
        "PH": (444.37, 13.37),
        "SEH": (234.7, 16.73),
        "BPL": (454.03, 18.17),
        "BKL": (521.47, 9.54),
        "HB": (350.53, 9.4),
        "SSH": (511.78, 14.9),
        "SEB": (447.47, 15.36),
        "TT": (156.14, 7.76),
        "AL": (364.1, 10.77),
        "EFL": (450.46, 7.67),
        "SCH": (511.7, 10.22),
    },
    Gender.FEMALE: {
        "PH": (415.1, 13.5),
        "SEH": (231.3, 16.7),
        "BPL": (447.2, 17.3),
        "BKL": (509.0, 13.7),
        "HB": (366.2, 8.5),
        "SSH": (488.0, 13.3),
        "SEB": (422.9, 17.2),
        "TT": (145.1, 9.7),
        "AL": (342.4, 9.6),
        "EFL": (406.9, 9.5),
        "SCH": (493.6, 10.8),
    },
}


def synthetic_dataset(
    n_male: int = 300, n_female: int = 80, seed: int = 0
) -> PopulationDataset:
    """Fabricate a plausible population by Gaussian sampling per measurement.

    Deterministic for a given seed. Intended for demos, dashboards, and tests
    that need a population but not the measured one.
    """
    rng = random.Random(seed)
    records = []
    for gender, count, prefix in ((Gender.MALE, n_male, "M"), (Gender.FEMALE, n_female, "F")):
        params = POPULATION_PARAMETERS[gender]
        for i in range(count):
            measures = {
                name: round(max(1.0, rng.gauss(*params[name])), 2) for name in MEASURES
            }
            records.append(
                AnthropometricRecord(
                    id=f"{prefix}{i + 1:03d}",
                    gender=gender,
                    age=rng.randint(18, 25),
                    study_year=rng.randint(1, 4),
                    **measures,
                )
            )
    return PopulationDataset(records=tuple(records), source=f"synthetic(seed={seed})")
