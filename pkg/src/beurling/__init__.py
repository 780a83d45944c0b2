"""Computations around Beurling-Fourier algebras on SU(n) and tori."""

__version__ = "0.1.0"
