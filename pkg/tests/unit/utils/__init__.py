"""Test cases for utility classes and functions from qsl/utils/."""
