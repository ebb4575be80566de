"""Slack-based DEA: efficiency scores, global reference sets and returns to scale."""

from ._core import (  # noqa: F401
    DataError,
    Dataset,
    GrsResult,
    InterceptBounds,
    MinimumFace,
    RamResult,
    Regime,
    RtsClass,
    RtsClassification,
    SolverError,
    Tolerances,
    WeightScheme,
    classify_rts,
    compute_ranges,
    efficient_set,
    evaluate,
    identify_grs,
    intercept_bounds,
    max_support_solution,
    minimum_face,
    oracle_grs,
    parse_dataset,
    report,
    rts_of_dmu,
)

__all__ = [name for name in dir() if not name.startswith("_")]
