"""Output rendering shared by the CLI and the HTTP service.

Machine formats (CSV, JSON) carry full precision and are byte-deterministic;
human tables round to two decimals and mirror the column layout of classic
mismatch-survey tables so they can be eyeballed against printed reports.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Mapping, Sequence

from .design import WorkstationGuidelines
from .fit import MismatchDelta, MismatchReport
from .model import FitConfig, Gender, MEASURES, PopulationDataset, format_number
from .stats import AnovaResult, CorrelationMatrix, DescriptiveStats, describe, histogram


def _csv_text(rows: Sequence[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format_number(value)
    return str(value)


def json_text(payload: object) -> str:
    return json.dumps(payload, indent=2) + "\n"


def table_text(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """Column-aligned plain-text table."""
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    def line(cells: Sequence[str]) -> str:
        return "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(cells)).rstrip()
    rule = "  ".join("-" * w for w in widths)
    return "\n".join([line(headers), rule] + [line(row) for row in rows]) + "\n"


def _pct(value: float | None) -> str:
    return "-" if value is None else f"{value:.2f}"


# --- descriptive statistics -----------------------------------------------------


def describe_rows(
    dataset: PopulationDataset, cfg: FitConfig | None = None
) -> list[tuple[str, Gender, DescriptiveStats]]:
    """One row per (measurement, gender) present in the dataset.

    A gender with a single record still gets a row; its sample standard
    deviation is undefined and left empty.
    """
    cfg = cfg or FitConfig()
    rows = []
    for measure in MEASURES:
        for gender in (Gender.MALE, Gender.FEMALE):
            values = dataset.values(measure, gender)
            if len(values) >= 2:
                rows.append((measure, gender, describe(values, cfg.percentiles)))
            elif len(values) == 1:
                only = values[0]
                rows.append(
                    (
                        measure,
                        gender,
                        DescriptiveStats(
                            n=1, min=only, max=only, mean=only, sd=None,
                            p5=only, p50=only, p95=only,
                        ),
                    )
                )
    return rows


def describe_csv(rows: Sequence[tuple[str, Gender, DescriptiveStats]]) -> str:
    out: list[Sequence[object]] = [
        ("measure", "gender", "n", "min", "max", "mean", "sd", "p5", "p50", "p95")
    ]
    for measure, gender, stats in rows:
        out.append(
            (
                measure,
                gender.label,
                stats.n,
                _cell(stats.min),
                _cell(stats.max),
                _cell(stats.mean),
                _cell(stats.sd),
                _cell(stats.p5),
                _cell(stats.p50),
                _cell(stats.p95),
            )
        )
    return _csv_text(out)


def describe_json(rows: Sequence[tuple[str, Gender, DescriptiveStats]]) -> dict:
    return {
        "measures": [
            {
                "measure": measure,
                "gender": gender.label,
                "n": stats.n,
                "min": stats.min,
                "max": stats.max,
                "mean": stats.mean,
                "sd": stats.sd,
                "p5": stats.p5,
                "p50": stats.p50,
                "p95": stats.p95,
            }
            for measure, gender, stats in rows
        ]
    }


def describe_table(rows: Sequence[tuple[str, Gender, DescriptiveStats]]) -> str:
    body = [
        (
            measure,
            gender.label,
            str(stats.n),
            f"{stats.min:.2f}",
            f"{stats.max:.2f}",
            f"{stats.mean:.2f}",
            "-" if stats.sd is None else f"{stats.sd:.2f}",
            f"{stats.p5:.2f}",
            f"{stats.p50:.2f}",
            f"{stats.p95:.2f}",
        )
        for measure, gender, stats in rows
    ]
    return table_text(
        ("Measure", "Gender", "n", "Min", "Max", "Mean", "SD", "5th", "50th", "95th"),
        body,
    )


# --- mismatch reports -----------------------------------------------------------


def mismatch_csv(report: MismatchReport) -> str:
    out: list[Sequence[object]] = [
        ("criterion", "gender", "match_pct", "low_pct", "high_pct", "total_mismatch_pct")
    ]
    for row in report.rows:
        out.append(
            (
                row.criterion,
                row.gender.label,
                _cell(row.match_pct),
                _cell(row.low_pct),
                _cell(row.high_pct),
                _cell(row.mismatch_pct),
            )
        )
    return _csv_text(out)


def mismatch_json(report: MismatchReport) -> dict:
    return {
        "spec": report.spec_name,
        "counts": {gender.label: n for gender, n in report.counts.items()},
        "notes": list(report.notes),
        "rows": [
            {
                "criterion": row.criterion,
                "label": row.label,
                "gender": row.gender.label,
                "n": row.n,
                "match_pct": row.match_pct,
                "low_pct": row.low_pct,
                "high_pct": row.high_pct,
                "total_mismatch_pct": row.mismatch_pct,
            }
            for row in report.rows
        ],
    }


def mismatch_table(report: MismatchReport) -> str:
    body = [
        (
            row.label,
            row.gender.label,
            _pct(row.match_pct),
            _pct(row.low_pct),
            _pct(row.high_pct),
            _pct(row.mismatch_pct),
        )
        for row in report.rows
    ]
    table = table_text(
        (
            "Dimensions and anthropometry",
            "Gender",
            "Match (%)",
            "Lower mismatch (%)",
            "Upper mismatch (%)",
            "Total mismatch (%)",
        ),
        body,
    )
    header = f"Spec: {report.spec_name}\n"
    notes = "".join(f"note: {note}\n" for note in report.notes)
    return header + table + notes


def deltas_csv(deltas: Sequence[MismatchDelta]) -> str:
    out: list[Sequence[object]] = [("criterion", "gender", "delta_total_mismatch_pct")]
    for delta in deltas:
        out.append((delta.criterion, delta.gender.label, _cell(delta.delta_mismatch_pct)))
    return _csv_text(out)


def deltas_json(deltas: Sequence[MismatchDelta]) -> dict:
    return {
        "rows": [
            {
                "criterion": delta.criterion,
                "label": delta.label,
                "gender": delta.gender.label,
                "delta_total_mismatch_pct": delta.delta_mismatch_pct,
            }
            for delta in deltas
        ]
    }


def deltas_table(deltas: Sequence[MismatchDelta]) -> str:
    body = [
        (delta.label, delta.gender.label, f"{delta.delta_mismatch_pct:+.2f}")
        for delta in deltas
    ]
    return table_text(("Dimensions and anthropometry", "Gender", "Change (pts)"), body)


# --- ANOVA ----------------------------------------------------------------------


def anova_csv(rows: Sequence[tuple[str, Gender, AnovaResult]]) -> str:
    out: list[Sequence[object]] = [
        ("label", "gender", "f_value", "df_between", "df_within", "p_value", "decision")
    ]
    for label, gender, result in rows:
        out.append(
            (
                label,
                gender.label,
                _cell(result.f_value),
                result.df_between,
                result.df_within,
                _cell(result.p_value),
                result.decision.value,
            )
        )
    return _csv_text(out)


def anova_json(rows: Sequence[tuple[str, Gender, AnovaResult]]) -> dict:
    return {
        "rows": [
            {
                "label": label,
                "gender": gender.label,
                "f_value": result.f_value,
                "df_between": result.df_between,
                "df_within": result.df_within,
                "p_value": result.p_value,
                "alpha": result.alpha,
                "decision": result.decision.value,
            }
            for label, gender, result in rows
        ]
    }


def anova_table(rows: Sequence[tuple[str, Gender, AnovaResult]]) -> str:
    body = [
        (
            label,
            gender.label,
            f"{result.f_value:.3f}",
            f"{result.df_between}/{result.df_within}",
            f"{result.p_value:.3f}",
            result.decision.value,
        )
        for label, gender, result in rows
    ]
    return table_text(("Comparison", "Gender", "F-value", "df", "p-value", "Decision"), body)


# --- correlation ----------------------------------------------------------------


def correlation_csv(matrix: CorrelationMatrix) -> str:
    out: list[Sequence[object]] = [("measure",) + matrix.labels]
    for label, row in zip(matrix.labels, matrix.values):
        out.append((label,) + tuple(_cell(v) for v in row))
    return _csv_text(out)


def correlation_json(matrix: CorrelationMatrix) -> dict:
    return {"labels": list(matrix.labels), "values": [list(row) for row in matrix.values]}


def correlation_table(matrix: CorrelationMatrix) -> str:
    body = [
        (label,) + tuple(f"{v:.2f}" for v in row)
        for label, row in zip(matrix.labels, matrix.values)
    ]
    return table_text(("",) + matrix.labels, body)


# --- histograms -----------------------------------------------------------------


def histogram_rows(
    dataset: PopulationDataset,
    bin_count: int,
    measures: Sequence[str] | None = None,
    genders: Sequence[Gender] | None = None,
) -> list[tuple[str, Gender, list[tuple[float, float, int]]]]:
    rows = []
    for measure in measures or MEASURES:
        for gender in genders or (Gender.MALE, Gender.FEMALE):
            values = dataset.values(measure, gender)
            if values:
                rows.append((measure, gender, histogram(values, bin_count)))
    return rows


def histogram_csv(rows: Sequence[tuple[str, Gender, list[tuple[float, float, int]]]]) -> str:
    out: list[Sequence[object]] = [("measure", "gender", "bin_lower", "bin_upper", "count")]
    for measure, gender, bins in rows:
        for lower, upper, count in bins:
            out.append((measure, gender.label, _cell(lower), _cell(upper), count))
    return _csv_text(out)


def histogram_json(rows: Sequence[tuple[str, Gender, list[tuple[float, float, int]]]]) -> dict:
    return {
        "rows": [
            {
                "measure": measure,
                "gender": gender.label,
                "bins": [
                    {"lower": lower, "upper": upper, "count": count}
                    for lower, upper, count in bins
                ],
            }
            for measure, gender, bins in rows
        ]
    }


def histogram_table(rows: Sequence[tuple[str, Gender, list[tuple[float, float, int]]]]) -> str:
    body = []
    for measure, gender, bins in rows:
        for lower, upper, count in bins:
            body.append(
                (measure, gender.label, f"{lower:.2f}", f"{upper:.2f}", str(count))
            )
    return table_text(("Measure", "Gender", "From", "To", "Count"), body)


# --- guidelines and specs ---------------------------------------------------------


def guidelines_json(g: WorkstationGuidelines) -> dict:
    return {
        "keyboard_zone_depth_mm": g.keyboard_zone_depth,
        "keyboard_zone_length_mm": g.keyboard_zone_length,
        "monitor_distance_mm": list(g.monitor_distance),
        "viewing_angle_deg": list(g.viewing_angle),
    }


def guidelines_csv(g: WorkstationGuidelines) -> str:
    out: list[Sequence[object]] = [("setting", "value")]
    out.append(("keyboard_zone_depth_mm", _cell(g.keyboard_zone_depth)))
    out.append(("keyboard_zone_length_mm", _cell(g.keyboard_zone_length)))
    out.append(("monitor_distance_min_mm", _cell(g.monitor_distance[0])))
    out.append(("monitor_distance_max_mm", _cell(g.monitor_distance[1])))
    out.append(("viewing_angle_min_deg", _cell(g.viewing_angle[0])))
    out.append(("viewing_angle_max_deg", _cell(g.viewing_angle[1])))
    return _csv_text(out)


def guidelines_table(g: WorkstationGuidelines) -> str:
    body = [
        ("Keyboard/mouse zone depth", f"{g.keyboard_zone_depth:.0f} mm"),
        ("Keyboard/mouse zone length", f"{g.keyboard_zone_length:.0f} mm"),
        (
            "Monitor distance",
            f"{g.monitor_distance[0]:.0f}-{g.monitor_distance[1]:.0f} mm",
        ),
        (
            "Viewing angle below horizontal",
            f"{g.viewing_angle[0]:.0f}-{g.viewing_angle[1]:.0f} deg",
        ),
    ]
    return table_text(("Guideline", "Value"), body)


def counts_json(dataset: PopulationDataset) -> Mapping[str, int]:
    return {gender.label: dataset.count(gender) for gender in Gender}
