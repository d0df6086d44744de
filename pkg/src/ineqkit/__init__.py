"""Inequality measures for non-negative size distributions.

Micro-data measures (Lorenz curve, Gini, quantile shares), welfare indices
(Atkinson, generalized entropy), a bounded composite index combining a Gini
value with a tail-gap term, plus panel ingestion, ranking comparison, and
time-series reporting over published country indicators.
"""

from .composite import (
    DEFAULT_WEIGHT,
    CompositeResult,
    alternative_index,
    b_over_t_from_t_over_b,
    calibrate_alpha,
    composite,
    generalized_composite,
    h_transform,
    mean_alpha,
)
from .errors import (
    ArityError,
    CalibrationDomainError,
    DegenerateSampleError,
    DivisionByZeroShareError,
    DomainError,
    EmptyInputError,
    IneqError,
    JoinError,
    NotFoundError,
    SchemaError,
    ZeroIncomeError,
)
from .micro import (
    IncomeSample,
    LorenzCurve,
    QuantileShares,
    bottom_share,
    gini,
    lorenz_curve,
    palma_ratio,
    ratio_b_over_t,
    top_share,
)
from .panel import (
    CountryYearRecord,
    Panel,
    RowDiagnostic,
    SchemaConfig,
    Source,
    parse_panel,
    ratio_of,
    serialize_panel,
    slice_panel,
    t_over_b_of,
)
from .ranking import (
    Indicator,
    RankComparison,
    RankEntry,
    RankTable,
    SeriesPoint,
    compare_rankings,
    rank,
    rank_values,
    round_half_away,
    series,
)
from .welfare import atkinson, ge_index, ge_zero, theil

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_WEIGHT",
    "CompositeResult",
    "alternative_index",
    "b_over_t_from_t_over_b",
    "calibrate_alpha",
    "composite",
    "generalized_composite",
    "h_transform",
    "mean_alpha",
    "ArityError",
    "CalibrationDomainError",
    "DegenerateSampleError",
    "DivisionByZeroShareError",
    "DomainError",
    "EmptyInputError",
    "IneqError",
    "JoinError",
    "NotFoundError",
    "SchemaError",
    "ZeroIncomeError",
    "IncomeSample",
    "LorenzCurve",
    "QuantileShares",
    "bottom_share",
    "gini",
    "lorenz_curve",
    "palma_ratio",
    "ratio_b_over_t",
    "top_share",
    "CountryYearRecord",
    "Panel",
    "RowDiagnostic",
    "SchemaConfig",
    "Source",
    "parse_panel",
    "ratio_of",
    "serialize_panel",
    "slice_panel",
    "t_over_b_of",
    "Indicator",
    "RankComparison",
    "RankEntry",
    "RankTable",
    "SeriesPoint",
    "compare_rankings",
    "rank",
    "rank_values",
    "round_half_away",
    "series",
    "atkinson",
    "ge_index",
    "ge_zero",
    "theil",
    "__version__",
]
