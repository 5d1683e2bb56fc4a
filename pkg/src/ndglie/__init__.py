"""Exact Lie-theoretic computations for almost complex structures in dimension 6
whose Nijenhuis tensor is non-degenerate."""

__version__ = "0.1.0"
