"""Exact computer algebra for homotopes of graph algebras."""

__version__ = "0.1.0"
