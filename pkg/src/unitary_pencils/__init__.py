"""Moments of determinants of random unitary pencils."""

__version__ = "0.1.0"
