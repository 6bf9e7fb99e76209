"""Unit tests for the bounds package."""
