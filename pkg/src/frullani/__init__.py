"""Closed-form evaluation and numerical verification of Frullani-type integrals."""

__version__ = "0.1.0"
