"""Init of tests/unit/app."""
