"""Anthropometric fit analysis and dimensioning toolkit for computer-lab furniture.

The package turns a measured student population into actionable furniture
numbers: descriptive statistics and rank correlations of eleven seated body
measurements, eleven published fit criteria inverted into admissible furniture
intervals, population-level match/mismatch reports for fixed and adjustable
furniture, one-way ANOVA comparisons, and percentile-anchored proposal and
grid-search design tools. A CLI and a small read-only HTTP service expose the
same core.
"""

from .errors import (
    AnalysisError,
    DatasetError,
    DegenerateVarianceError,
    ErgofitError,
    InputError,
    UndefinedCorrelationError,
)
from .fit import (
    CRITERIA,
    CRITERIA_BY_ID,
    FitClass,
    FitCriterion,
    MismatchReport,
    MismatchRow,
    Sided,
    admissible_interval,
    classify,
    compare_reports,
    population_mismatch,
)
from .model import (
    Adjustable,
    AnthropometricRecord,
    DIMENSIONS,
    DimensionValue,
    Fixed,
    FitConfig,
    FurnitureSpec,
    Gender,
    MEASURES,
    PopulationDataset,
    filter_by_gender,
    load_dataset,
    load_spec,
    required_sample_size,
    save_dataset,
    save_spec,
    spec_from_json,
    spec_to_json,
    validate_record,
)
from .design import (
    ConstantAnchor,
    GridRange,
    OptimizationSpec,
    PercentileAnchor,
    ProposalRule,
    WorkstationGuidelines,
    evaluate_proposal,
    optimize_dimensions,
    propose_dimensions,
    workstation_guidelines,
)
from .stats import (
    AnovaResult,
    CorrelationMatrix,
    Decision,
    DescriptiveStats,
    correlation_matrix,
    cronbach_alpha,
    describe,
    f_sf,
    histogram,
    one_way_anova,
    percentile_inc,
    spearman,
)

__version__ = "0.1.0"
