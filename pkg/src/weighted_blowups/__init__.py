"""Weighted blow-ups: exact charts, nests and verification for weighted building sets."""

__version__ = "0.1.0"
