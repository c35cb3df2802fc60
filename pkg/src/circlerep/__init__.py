"""Representations of the oligomorphic group of the circle, by computation."""

__version__ = "0.1.0"
