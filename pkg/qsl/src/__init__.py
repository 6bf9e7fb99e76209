"""Simulation sources."""
