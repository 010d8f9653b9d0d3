"""Computation in free left, right, and two-sided adequate monoids."""

__version__ = "0.1.0"
