"""Closed-form sample complexity bounds."""
