"""Graded-ring computations for even surfaces with K^2=8, p_g=4, q=0."""

__version__ = "0.1.0"
