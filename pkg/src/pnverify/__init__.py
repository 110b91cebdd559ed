"""Exact numerics for projective normality of K-trivial fourfolds and hyperkaehler varieties."""

__version__ = "0.1.0"
