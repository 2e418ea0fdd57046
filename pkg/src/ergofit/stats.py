"""Descriptive statistics, rank correlation, one-way ANOVA, and friends.

Everything here is a pure function over plain sequences, so the fit engine,
the design tools, and the interfaces all share one numerical code path.

Two conventions are load-bearing and deliberately spreadsheet-compatible:

* percentiles use inclusive linear interpolation (rank ``1 + p (n - 1)`` on
  the sorted data, interpolating between neighbours), and
* standard deviations are sample standard deviations (``n - 1`` denominator).
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import (
    AnalysisError,
    DegenerateVarianceError,
    InputError,
    UndefinedCorrelationError,
)
from .model import MEASURES, PopulationDataset


def percentile_inc(values: Sequence[float], p: float) -> float:
    """Inclusive-interpolation percentile of ``values`` at fraction ``p``.

    ``p = 0`` gives the minimum, ``p = 1`` the maximum; in between the result
    interpolates linearly at rank ``1 + p (n - 1)`` of the sorted data.
    """
    if len(values) == 0:
        raise InputError("percentile of an empty sequence")
    if not (0 <= p <= 1):
        raise InputError("percentile fraction must lie in [0, 1]")
    data = sorted(float(v) for v in values)
    rank = p * (len(data) - 1)
    lower = math.floor(rank)
    frac = rank - lower
    if frac == 0:
        return data[lower]
    return data[lower] + frac * (data[lower + 1] - data[lower])


@dataclass(frozen=True)
class DescriptiveStats:
    """Summary of one measurement: count, extremes, moments, percentile triple.

    ``sd`` is the sample standard deviation and therefore ``None`` when only
    one observation exists.
    """

    n: int
    min: float
    max: float
    mean: float
    sd: float | None
    p5: float
    p50: float
    p95: float


def describe(
    values: Sequence[float],
    percentiles: tuple[float, float, float] = (0.05, 0.50, 0.95),
) -> DescriptiveStats:
    """Descriptive statistics of ``values`` (requires at least two points)."""
    if len(values) < 2:
        raise InputError("describe requires at least 2 values")
    data = [float(v) for v in values]
    return DescriptiveStats(
        n=len(data),
        min=min(data),
        max=max(data),
        mean=statistics.fmean(data),
        sd=statistics.stdev(data),
        p5=percentile_inc(data, percentiles[0]),
        p50=percentile_inc(data, percentiles[1]),
        p95=percentile_inc(data, percentiles[2]),
    )


def _average_ranks(values: Sequence[float]) -> list[float]:
    """1-based ranks; runs of equal values share their mean rank."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    start = 0
    while start < len(order):
        stop = start
        while stop + 1 < len(order) and values[order[stop + 1]] == values[order[start]]:
            stop += 1
        mean_rank = (start + stop) / 2 + 1
        for k in range(start, stop + 1):
            ranks[order[k]] = mean_rank
        start = stop + 1
    return ranks


def spearman(x: Sequence[float], y: Sequence[float]) -> float:
    """Spearman rank correlation with average ranks for ties.

    Computed as the product-moment correlation of the two rank vectors, which
    reduces to ``1 - 6 sum(d^2) / (n (n^2 - 1))`` when there are no ties.
    """
    if len(x) != len(y):
        raise InputError("spearman requires equal-length inputs")
    if len(x) < 3:
        raise InputError("spearman requires at least 3 pairs")
    rx = _average_ranks(x)
    ry = _average_ranks(y)
    mx = statistics.fmean(rx)
    my = statistics.fmean(ry)
    dx = [r - mx for r in rx]
    dy = [r - my for r in ry]
    sxx = sum(d * d for d in dx)
    syy = sum(d * d for d in dy)
    if sxx == 0 or syy == 0:
        raise UndefinedCorrelationError("rank correlation undefined for a constant input")
    return sum(a * b for a, b in zip(dx, dy)) / math.sqrt(sxx * syy)


@dataclass(frozen=True)
class CorrelationMatrix:
    """Symmetric matrix of pairwise rank correlations with unit diagonal."""

    labels: tuple[str, ...]
    values: tuple[tuple[float, ...], ...]

    def get(self, a: str, b: str) -> float:
        return self.values[self.labels.index(a)][self.labels.index(b)]


def correlation_matrix(
    dataset: PopulationDataset, measures: Sequence[str] = MEASURES
) -> CorrelationMatrix:
    """Pairwise Spearman correlation over all records (genders combined)."""
    if len(dataset) == 0:
        raise InputError("correlation matrix of an empty dataset")
    columns = {m: dataset.values(m) for m in measures}
    size = len(measures)
    grid = [[1.0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            try:
                rho = spearman(columns[measures[i]], columns[measures[j]])
            except AnalysisError as exc:
                raise UndefinedCorrelationError(
                    f"({measures[i]}, {measures[j]}): {exc}"
                ) from None
            grid[i][j] = rho
            grid[j][i] = rho
    return CorrelationMatrix(
        labels=tuple(measures), values=tuple(tuple(row) for row in grid)
    )


class Decision(Enum):
    ACCEPT = "Accept"
    REJECT = "Reject"


@dataclass(frozen=True)
class AnovaResult:
    """Outcome of a one-way ANOVA at significance level ``alpha``."""

    f_value: float
    df_between: int
    df_within: int
    p_value: float
    alpha: float
    decision: Decision


def one_way_anova(groups: Sequence[Sequence[float]], alpha: float = 0.05) -> AnovaResult:
    """Fixed-effects one-way ANOVA over two or more groups.

    F is the between-group mean square over the within-group mean square; the
    p-value is the upper tail of F(k - 1, n - k). The null is rejected when
    p <= alpha.
    """
    if len(groups) < 2:
        raise InputError("one-way ANOVA needs at least 2 groups")
    if any(len(g) == 0 for g in groups):
        raise InputError("one-way ANOVA groups must be non-empty")
    if not (0 < alpha < 1):
        raise InputError("alpha must lie in (0, 1)")
    k = len(groups)
    n_total = sum(len(g) for g in groups)
    df_between = k - 1
    df_within = n_total - k
    if df_within < 1:
        raise InputError("one-way ANOVA needs more observations than groups")

    means = [statistics.fmean(g) for g in groups]
    grand = sum(sum(g) for g in groups) / n_total
    ss_between = sum(len(g) * (m - grand) ** 2 for g, m in zip(groups, means))
    ss_within = sum(
        (x - m) ** 2 for g, m in zip(groups, means) for x in g
    )

    if ss_within == 0:
        if ss_between > 0:
            raise DegenerateVarianceError(
                "zero within-group variance with distinct group means"
            )
        f_value, p_value = 0.0, 1.0
    else:
        f_value = (ss_between / df_between) / (ss_within / df_within)
        p_value = f_sf(f_value, df_between, df_within)

    decision = Decision.REJECT if p_value <= alpha else Decision.ACCEPT
    return AnovaResult(
        f_value=f_value,
        df_between=df_between,
        df_within=df_within,
        p_value=p_value,
        alpha=alpha,
        decision=decision,
    )


# --- F-distribution tail -------------------------------------------------------
#
# P(X > F) for X ~ F(d1, d2) equals I_x(d2/2, d1/2) at x = d2 / (d2 + d1 F),
# where I is the regularized incomplete beta function. The continued-fraction
# evaluation below converges to well under 1e-8 absolute error for the degree
# ranges this package uses.

_BETA_MAX_ITER = 400
_BETA_EPS = 1e-15
_BETA_FPMIN = 1e-300


def _beta_continued_fraction(a: float, b: float, x: float) -> float:
    # Modified Lentz evaluation of the continued fraction for I_x(a, b).
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _BETA_FPMIN:
        d = _BETA_FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _BETA_MAX_ITER + 1):
        m2 = 2 * m
        numerator = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + numerator * d
        if abs(d) < _BETA_FPMIN:
            d = _BETA_FPMIN
        c = 1.0 + numerator / c
        if abs(c) < _BETA_FPMIN:
            c = _BETA_FPMIN
        d = 1.0 / d
        h *= d * c
        numerator = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + numerator * d
        if abs(d) < _BETA_FPMIN:
            d = _BETA_FPMIN
        c = 1.0 + numerator / c
        if abs(c) < _BETA_FPMIN:
            c = _BETA_FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETA_EPS:
            return h
    raise AnalysisError("incomplete beta continued fraction did not converge")


def regularized_incomplete_beta(x: float, a: float, b: float) -> float:
    """I_x(a, b), the regularized incomplete beta function."""
    if a <= 0 or b <= 0:
        raise InputError("incomplete beta parameters must be positive")
    if x <= 0:
        return 0.0
    if x >= 1:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    # Use the symmetry I_x(a,b) = 1 - I_{1-x}(b,a) on the side that converges fast.
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_continued_fraction(a, b, x) / a
    return 1.0 - front * _beta_continued_fraction(b, a, 1.0 - x) / b


def f_sf(f_value: float, df1: int, df2: int) -> float:
    """Upper-tail probability P(X > f_value) for X ~ F(df1, df2)."""
    if df1 < 1 or df2 < 1:
        raise InputError("degrees of freedom must be positive")
    if f_value < 0:
        raise InputError("F statistic must be non-negative")
    if f_value == 0:
        return 1.0
    x = df2 / (df2 + df1 * f_value)
    return regularized_incomplete_beta(x, df2 / 2.0, df1 / 2.0)


def cronbach_alpha(items: Sequence[Sequence[float]]) -> float:
    """Cronbach's alpha of an item-response matrix (rows = respondents).

    alpha = k / (k - 1) * (1 - sum of item variances / total-score variance),
    with sample variances throughout.
    """
    if len(items) < 2:
        raise InputError("cronbach_alpha needs at least 2 respondents")
    width = len(items[0])
    if width < 2:
        raise InputError("cronbach_alpha needs at least 2 items")
    if any(len(row) != width for row in items):
        raise InputError("item-response matrix must be rectangular")
    columns = [[row[j] for row in items] for j in range(width)]
    item_variance = sum(statistics.variance(col) for col in columns)
    totals = [sum(row) for row in items]
    total_variance = statistics.variance(totals)
    if total_variance == 0:
        raise DegenerateVarianceError("total-score variance is zero")
    return width / (width - 1) * (1 - item_variance / total_variance)


def histogram(
    values: Sequence[float], bin_count: int
) -> list[tuple[float, float, int]]:
    """Equal-width binning of ``values`` into ``bin_count`` bins over [min, max].

    Returns ``(lower_edge, upper_edge, count)`` triples; the maximum value is
    assigned to the last bin, and counts always sum to ``len(values)``. A
    constant input collapses to a single bin.
    """
    if len(values) == 0:
        raise InputError("histogram of an empty sequence")
    if bin_count < 1:
        raise InputError("bin count must be >= 1")
    lo = min(values)
    hi = max(values)
    if lo == hi:
        return [(lo, hi, len(values))]
    width = (hi - lo) / bin_count
    counts = [0] * bin_count
    for v in values:
        index = min(int((v - lo) / width), bin_count - 1)
        counts[index] += 1
    bins = []
    for i in range(bin_count):
        upper = hi if i == bin_count - 1 else lo + (i + 1) * width
        bins.append((lo + i * width, upper, counts[i]))
    return bins
