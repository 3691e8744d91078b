"""Triangular folding curves (terdragon-type) on the lattice Z[w]."""

__version__ = "0.1.0"
