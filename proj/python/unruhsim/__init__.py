"""GHZ-state quantumness under Unruh mode mixing and amplitude damping."""

from ._core import (
    BETA_MAX,
    DEFAULT_ALPHA,
    ConfigError,
    CoverageError,
    LabelError,
    ParameterError,
    StructureError,
    boundary,
    closed_form,
    coherence_l1,
    gte,
    gtn,
    measures,
    scenarios,
    state,
    sum_rules,
    sweep,
)

__all__ = [
    "BETA_MAX",
    "DEFAULT_ALPHA",
    "ConfigError",
    "CoverageError",
    "LabelError",
    "ParameterError",
    "StructureError",
    "boundary",
    "closed_form",
    "coherence_l1",
    "gte",
    "gtn",
    "measures",
    "scenarios",
    "state",
    "sum_rules",
    "sweep",
]
