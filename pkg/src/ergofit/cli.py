"""Command-line interface for batch analysis and report emission.

Exit codes: 0 success, 1 analysis error (data admitted but unusable),
2 input error (missing files, malformed rows, bad arguments).
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from . import render
from .design import optimize_dimensions, propose_dimensions, workstation_guidelines
from .errors import AnalysisError, ErgofitError, InputError
from .fit import compare_reports, population_mismatch
from .model import (
    FitConfig,
    FurnitureSpec,
    Gender,
    load_dataset,
    load_spec,
    spec_to_json,
)
from .presets import (
    COMPARISON_PRESETS,
    RULESET_BASES,
    RULESET_PRESETS,
    SPEC_PRESETS,
    optimization_from_json,
    ruleset_from_json,
)
from .stats import AnovaResult, correlation_matrix, one_way_anova

EXIT_ANALYSIS = 1
EXIT_INPUT = 2

FORMAT_CHOICE = click.Choice(["table", "csv", "json"])
FORMAT_EXTENSION = {"table": "txt", "csv": "csv", "json": "json"}


def handle_errors(fn):
    """Map toolkit errors onto the documented exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except AnalysisError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_ANALYSIS)
        except (InputError, ErgofitError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INPUT)

    return wrapper


def _emit(text: str, out_dir: str | None, filename: str) -> None:
    if out_dir is None:
        click.echo(text, nl=False)
        return
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    target = directory / filename
    target.write_text(text, encoding="utf-8")
    click.echo(f"wrote {target}")


def _render(fmt: str, table_fn, csv_fn, json_fn) -> str:
    if fmt == "table":
        return table_fn()
    if fmt == "csv":
        return csv_fn()
    return render.json_text(json_fn())


def _load_spec_arg(token: str) -> FurnitureSpec:
    if token in SPEC_PRESETS:
        return SPEC_PRESETS[token]
    return load_spec(token)


def _fit_config(shoe_allowance: float | None, alpha: float | None) -> FitConfig:
    overrides = {}
    if shoe_allowance is not None:
        overrides["shoe_allowance"] = shoe_allowance
    if alpha is not None:
        overrides["alpha_level"] = alpha
    return FitConfig(**overrides)


def _read_json(path: str):
    p = Path(path)
    if not p.exists():
        raise InputError(f"file not found: {p}")
    try:
        return json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {p.name}: {exc}") from None


@click.group()
def main() -> None:
    """Anthropometric fit analysis for computer-lab furniture."""


@main.command()
@click.option("--dataset", required=True, help="Population CSV path.")
@click.option("--format", "fmt", type=FORMAT_CHOICE, default="table", show_default=True)
@click.option("--out", type=click.Path(), default=None, help="Write output files here.")
@handle_errors
def describe(dataset: str, fmt: str, out: str | None) -> None:
    """Descriptive statistics per measurement per gender."""
    data = load_dataset(dataset)
    rows = render.describe_rows(data)
    text = _render(
        fmt,
        lambda: render.describe_table(rows),
        lambda: render.describe_csv(rows),
        lambda: render.describe_json(rows),
    )
    _emit(text, out, f"describe.{FORMAT_EXTENSION[fmt]}")


@main.command()
@click.option("--dataset", required=True, help="Population CSV path.")
@click.option(
    "--spec",
    "specs",
    required=True,
    multiple=True,
    help="Furniture spec JSON path or preset name; repeat to compare two.",
)
@click.option("--format", "fmt", type=FORMAT_CHOICE, default="table", show_default=True)
@click.option("--out", type=click.Path(), default=None)
@click.option("--shoe-allowance", type=float, default=None, help="Shoe allowance in mm.")
@click.option("--alpha", type=float, default=None, help="Significance level.")
@handle_errors
def mismatch(
    dataset: str,
    specs: tuple[str, ...],
    fmt: str,
    out: str | None,
    shoe_allowance: float | None,
    alpha: float | None,
) -> None:
    """Match/mismatch report of one or two furniture specs over a population."""
    if len(specs) > 2:
        raise InputError("give at most two --spec values")
    data = load_dataset(dataset)
    cfg = _fit_config(shoe_allowance, alpha)
    reports = [population_mismatch(data, _load_spec_arg(token), cfg) for token in specs]
    for report in reports:
        text = _render(
            fmt,
            lambda r=report: render.mismatch_table(r),
            lambda r=report: render.mismatch_csv(r),
            lambda r=report: render.mismatch_json(r),
        )
        _emit(text, out, f"mismatch_{report.spec_name}.{FORMAT_EXTENSION[fmt]}")
    if len(reports) == 2:
        deltas = compare_reports(reports[0], reports[1])
        text = _render(
            fmt,
            lambda: render.deltas_table(deltas),
            lambda: render.deltas_csv(deltas),
            lambda: render.deltas_json(deltas),
        )
        _emit(text, out, f"delta.{FORMAT_EXTENSION[fmt]}")


@main.command()
@click.option("--groups", "groups_path", default=None, help="JSON file of labelled groups.")
@click.option(
    "--preset",
    type=click.Choice(sorted(COMPARISON_PRESETS)),
    default=None,
    help="Run the bundled percentile-comparison rows for a surveyed set.",
)
@click.option("--alpha", type=float, default=0.05, show_default=True)
@click.option("--format", "fmt", type=FORMAT_CHOICE, default="table", show_default=True)
@click.option("--out", type=click.Path(), default=None)
@handle_errors
def anova(
    groups_path: str | None, preset: str | None, alpha: float, fmt: str, out: str | None
) -> None:
    """One-way ANOVA over labelled groups (F, p, accept/reject)."""
    rows: list[tuple[str, Gender, AnovaResult]] = []
    if preset is not None:
        for comparison in COMPARISON_PRESETS[preset]:
            result = one_way_anova([comparison.observed, comparison.expected], alpha)
            rows.append((comparison.label, comparison.gender, result))
    elif groups_path is not None:
        payload = _read_json(groups_path)
        entries = payload.get("rows") if isinstance(payload, dict) else None
        if not isinstance(entries, list):
            raise InputError("groups file needs a top-level 'rows' array")
        for entry in entries:
            if not isinstance(entry, dict) or "groups" not in entry:
                raise InputError("each row needs 'label', 'gender' and 'groups'")
            label = str(entry.get("label", "row"))
            gender = Gender.parse(str(entry.get("gender", "M")))
            groups = entry["groups"]
            if not isinstance(groups, list) or len(groups) < 2:
                raise InputError(f"row {label!r}: needs at least 2 groups")
            try:
                parsed = [[float(x) for x in group] for group in groups]
            except (TypeError, ValueError):
                raise InputError(f"row {label!r}: groups must be numeric lists") from None
            rows.append((label, gender, one_way_anova(parsed, alpha)))
    else:
        raise InputError("give --groups FILE or --preset NAME")
    text = _render(
        fmt,
        lambda: render.anova_table(rows),
        lambda: render.anova_csv(rows),
        lambda: render.anova_json(rows),
    )
    _emit(text, out, f"anova.{FORMAT_EXTENSION[fmt]}")


@main.command()
@click.option("--dataset", required=True, help="Population CSV path.")
@click.option(
    "--rules",
    default="proposed-fixed",
    show_default=True,
    help="Ruleset JSON path or preset name.",
)
@click.option("--name", default="proposed", show_default=True, help="Name of the new spec.")
@click.option("--format", "fmt", type=FORMAT_CHOICE, default="json", show_default=True)
@click.option("--out", type=click.Path(), default=None)
@handle_errors
def propose(dataset: str, rules: str, name: str, fmt: str, out: str | None) -> None:
    """Derive a furniture spec from proposal rules."""
    data = load_dataset(dataset)
    if rules in RULESET_PRESETS:
        ruleset = RULESET_PRESETS[rules]
        base = RULESET_BASES[rules]
    else:
        ruleset, base = ruleset_from_json(_read_json(rules))
    spec = propose_dimensions(data, ruleset, base=base, name=name)
    payload = spec_to_json(spec)
    if fmt == "table":
        body = [
            (dim, render.format_number(v) if isinstance(v, (int, float)) else f"{v['lo']:g} - {v['hi']:g}")
            for dim, v in payload.items()
            if dim != "name"
        ]
        text = f"Spec: {spec.name}\n" + render.table_text(("Dimension", "Value (mm)"), body)
    elif fmt == "csv":
        csv_rows: list[tuple[str, str]] = [("dimension", "value")]
        for dim, v in payload.items():
            if dim == "name":
                continue
            cell = (
                render.format_number(v)
                if isinstance(v, (int, float))
                else f"{render.format_number(v['lo'])} - {render.format_number(v['hi'])}"
            )
            csv_rows.append((dim, cell))
        text = "\n".join(",".join(row) for row in csv_rows) + "\n"
    else:
        text = render.json_text(payload)
    _emit(text, out, f"propose_{spec.name}.{FORMAT_EXTENSION[fmt]}")


@main.command()
@click.option("--dataset", required=True, help="Population CSV path.")
@click.option("--config", "config_path", required=True, help="Optimization config JSON.")
@click.option("--name", default="optimized", show_default=True)
@click.option("--out", type=click.Path(), default=None)
@handle_errors
def optimize(dataset: str, config_path: str, name: str, out: str | None) -> None:
    """Grid-search dimensions minimizing weighted total mismatch."""
    data = load_dataset(dataset)
    opt = optimization_from_json(_read_json(config_path))
    spec, objective = optimize_dimensions(data, opt, name=name)
    payload = {"objective": objective, "spec": spec_to_json(spec)}
    _emit(render.json_text(payload), out, f"optimize_{name}.json")


@main.command()
@click.option("--format", "fmt", type=FORMAT_CHOICE, default="table", show_default=True)
@click.option("--out", type=click.Path(), default=None)
@handle_errors
def guidelines(fmt: str, out: str | None) -> None:
    """Workstation placement constants (reach envelope, monitor position)."""
    g = workstation_guidelines()
    text = _render(
        fmt,
        lambda: render.guidelines_table(g),
        lambda: render.guidelines_csv(g),
        lambda: render.guidelines_json(g),
    )
    _emit(text, out, f"guidelines.{FORMAT_EXTENSION[fmt]}")


@main.command()
@click.option("--dataset", required=True, help="Population CSV path.")
@click.option("--bins", type=int, default=20, show_default=True)
@click.option("--measure", "measures", multiple=True, help="Restrict to these measurements.")
@click.option("--gender", type=click.Choice(["M", "F"]), default=None)
@click.option("--format", "fmt", type=FORMAT_CHOICE, default="csv", show_default=True)
@click.option("--out", type=click.Path(), default=None)
@handle_errors
def histogram(
    dataset: str,
    bins: int,
    measures: tuple[str, ...],
    gender: str | None,
    fmt: str,
    out: str | None,
) -> None:
    """Equal-width bin tables per measurement per gender (plot data)."""
    data = load_dataset(dataset)
    genders = [Gender.parse(gender)] if gender else None
    rows = render.histogram_rows(data, bins, measures or None, genders)
    text = _render(
        fmt,
        lambda: render.histogram_table(rows),
        lambda: render.histogram_csv(rows),
        lambda: render.histogram_json(rows),
    )
    _emit(text, out, f"histogram.{FORMAT_EXTENSION[fmt]}")


@main.command()
@click.option("--dataset", required=True, help="Population CSV path.")
@click.option("--format", "fmt", type=FORMAT_CHOICE, default="table", show_default=True)
@click.option("--out", type=click.Path(), default=None)
@handle_errors
def correlation(dataset: str, fmt: str, out: str | None) -> None:
    """Spearman correlation matrix over all eleven measurements."""
    data = load_dataset(dataset)
    matrix = correlation_matrix(data)
    text = _render(
        fmt,
        lambda: render.correlation_table(matrix),
        lambda: render.correlation_csv(matrix),
        lambda: render.correlation_json(matrix),
    )
    _emit(text, out, f"correlation.{FORMAT_EXTENSION[fmt]}")


@main.command()
@click.option("--dataset", required=True, help="Population CSV path.")
@click.option("--port", type=click.IntRange(1, 65535), default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option(
    "--ui-dir",
    type=click.Path(),
    default=None,
    help="Serve this directory as the dashboard at /.",
)
@click.option("--shoe-allowance", type=float, default=None)
@click.option("--alpha", type=float, default=None)
@handle_errors
def serve(
    dataset: str,
    port: int,
    host: str,
    ui_dir: str | None,
    shoe_allowance: float | None,
    alpha: float | None,
) -> None:
    """Run the what-if HTTP service (dataset loaded once, read-only)."""
    import uvicorn

    from .service import create_app

    data = load_dataset(dataset)
    cfg = _fit_config(shoe_allowance, alpha)
    app = create_app(data, cfg, ui_dir=ui_dir)
    click.echo(f"serving {len(data)} records on http://{host}:{port}")
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
