"""GDoF closed forms and AP-ZF Monte Carlo for the two-user MISO BC with distributed CSIT."""

import json as _json

from ._dcsit import (
    ConfigError,
    InsufficientPoints,
    PowerInfeasible,
    ValidationError,
    centralized_gdof,
    distributed_gdof,
    estimate_slope,
    fit_exponent,
    genie_outer_bound,
    scheme_layout,
)
from . import _dcsit

__all__ = [
    "ConfigError",
    "InsufficientPoints",
    "PowerInfeasible",
    "ValidationError",
    "centralized_gdof",
    "distributed_gdof",
    "estimate_slope",
    "fit_exponent",
    "genie_outer_bound",
    "scheme_layout",
    "simulate_point",
    "sweep",
    "validate",
]


def _text(config):
    return config if isinstance(config, str) else _json.dumps(config)


def simulate_point(config, scheme, snr_db, workers=1):
    """Mean sum rate and its standard error at one SNR. `config` is a dict or JSON text."""
    return _dcsit.simulate_point(_text(config), scheme, snr_db, workers)


def sweep(config, workers=1):
    """Full sweep; returns {"curves", "csv", "summary"} with the summary parsed."""
    out = _dcsit.sweep(_text(config), workers)
    out["summary"] = _json.loads(out["summary"])
    return out


def validate(config):
    """List of (check name, passed, detail)."""
    return _dcsit.validate(_text(config))
