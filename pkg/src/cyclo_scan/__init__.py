"""Irregular-prime scanning and finite-level SL2 congruence checks."""

__version__ = "0.1.0"
