"""Application-level models and metrics."""
