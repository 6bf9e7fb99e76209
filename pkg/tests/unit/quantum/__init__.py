"""Unit tests for the quantum package."""
