"""Unit tests for the protocol package."""
