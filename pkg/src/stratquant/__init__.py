"""Exact desk-scale computations for singular reduction and Fock quantization."""

__version__ = "0.1.0"
