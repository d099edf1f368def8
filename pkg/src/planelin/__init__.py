"""Exact computations with polynomial automorphisms of the affine plane."""

__version__ = "0.1.0"
