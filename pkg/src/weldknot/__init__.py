"""Invariants, moves and Tube-level certificates for welded knots."""

from .codec import GaussCode, GaussSymbol, Symmetry, canonical, parse, symmetry

__version__ = "0.1.0"

__all__ = ["GaussCode", "GaussSymbol", "Symmetry", "canonical", "parse", "symmetry"]
