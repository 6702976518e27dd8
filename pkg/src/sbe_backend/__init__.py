"""Supercritical biharmonic toolkit: exponents, spectrum, shooting and branch diagnostics."""

__version__ = "0.1.0"
