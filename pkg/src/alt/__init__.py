"""Readability analysis for Brazilian Portuguese text."""

__version__ = "0.1.0"
