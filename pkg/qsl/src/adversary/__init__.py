"""Eavesdropper strategies and contamination analysis."""
