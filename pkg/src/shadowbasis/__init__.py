"""Colored permutation groups: Viennot shadows, shadow-monomial bases and Hilbert series."""

__version__ = "0.1.0"
