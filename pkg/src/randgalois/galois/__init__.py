"""Finite-field factorization, Frobenius sampling and the Galois verdict engine."""
