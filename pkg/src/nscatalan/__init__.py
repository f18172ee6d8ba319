"""Exact nonsymmetric Catalan functions, DARK crystals and katabolism."""

__version__ = "0.1.0"
