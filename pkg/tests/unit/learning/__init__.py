"""Unit tests for the learning package."""
