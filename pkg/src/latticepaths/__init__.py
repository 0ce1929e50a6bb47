"""Exact lattice-path enumeration: closed-form counts, determinant and
Pfaffian evaluations, continued fractions and kernel-method generating
functions, all cross-checked against a brute-force path oracle."""

__version__ = "0.1.0"
