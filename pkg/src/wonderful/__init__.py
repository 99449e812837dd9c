"""Exact combinatorics and symbolic verification for wonderful varieties."""

__version__ = "0.1.0"
