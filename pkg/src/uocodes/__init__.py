"""Exact certification of universally optimal codes in Hamming space."""

__version__ = "0.1.0"
