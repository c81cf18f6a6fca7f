"""Exact resolvents and Monte Carlo Galois-group censuses for random integer polynomials."""

__version__ = "0.1.0"
