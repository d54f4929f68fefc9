"""Divided differences for the Weyl groups of types A, B and D.

Exact polynomial arithmetic over Z[1/2], signed permutations, orthogonal
Schubert polynomials, Q-tilde / P-tilde polynomials and vertex operators on
symmetric functions.
"""

__version__ = "0.1.0"
