"""Minimal quantum state algebra: states, gates, measurement and cloning."""
