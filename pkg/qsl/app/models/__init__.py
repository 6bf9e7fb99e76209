"""Configuration and report models."""
