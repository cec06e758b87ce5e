"""Exact computation in partition algebras and their monoid bases."""

__version__ = "0.1.0"
