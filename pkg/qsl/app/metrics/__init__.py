"""Metrics and metric collectors."""

from .metrics import (
    dump_metrics,
    eta_estimate,
    input_epochs_total,
    latest,
    r1_checks_total,
    rounds_total,
    sessions_total,
    trials_duration_seconds,
)

__all__ = [
    "dump_metrics",
    "eta_estimate",
    "input_epochs_total",
    "latest",
    "r1_checks_total",
    "rounds_total",
    "sessions_total",
    "trials_duration_seconds",
]
