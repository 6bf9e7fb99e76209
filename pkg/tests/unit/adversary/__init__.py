"""Unit tests for the adversary package."""
