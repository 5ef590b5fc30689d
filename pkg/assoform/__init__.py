"""Exact associated forms, catalecticant varieties and the Aronhold invariant."""

__version__ = "0.1.0"
