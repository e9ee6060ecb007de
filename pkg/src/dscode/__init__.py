"""Quantum data-syndrome codes: construction, enumerators, bounds and simulation."""

__version__ = "0.1.0"
