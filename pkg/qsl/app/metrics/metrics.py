"""Prometheus metrics collected while simulating sessions."""

from prometheus_client import (
    REGISTRY,
    Counter,
    Histogram,
    disable_created_metrics,
    generate_latest,
    write_to_textfile,
)

disable_created_metrics()  # type: ignore [no-untyped-call]

sessions_total = Counter(
    "qsl_sessions_total", "Simulated sessions by terminal status", ["status"]
)

rounds_total = Counter("qsl_rounds_total", "Protocol rounds by kind", ["kind"])

r1_checks_total = Counter(
    "qsl_r1_checks_total", "Evaluations of the test-mismatch abort rule", ["decision"]
)

input_epochs_total = Counter(
    "qsl_input_epochs_total", "Freshness epochs started because test inputs ran out"
)

eta_estimate = Histogram(
    "qsl_eta_estimate",
    "Contamination estimates of finished sessions",
    buckets=(0.0, 0.025, 0.05, 0.075, 0.1, 0.125, 1 / 6, 0.2, 0.25, 0.3, 0.4, 0.5, 1.0),
)

trials_duration_seconds = Histogram(
    "qsl_trials_duration_seconds", "Duration of experiment commands", ["command"]
)


def latest() -> bytes:
    """Return the metrics in the text exposition format."""
    return generate_latest()


def dump_metrics(path: str) -> None:
    """Write the metrics in the text exposition format to a file."""
    write_to_textfile(path, REGISTRY)
