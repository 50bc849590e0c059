"""Shared helpers for the test suite."""

import random

from liemat import ExtensionField, Matrix, PrimeField, Rationals
from liemat.sampling import random_invertible, random_matrix

Q = Rationals()
GF2 = PrimeField(2)
GF5 = PrimeField(5)
GF7 = PrimeField(7)
GF4 = ExtensionField(2, 2)
GF9 = ExtensionField(3, 2)


def rng_for(*key) -> random.Random:
    """Stable per-case seed derived from a readable key."""
    return random.Random("/".join(str(k) for k in key))


def mat(field, rows) -> Matrix:
    return Matrix(field, rows)


__all__ = [
    "GF2",
    "GF4",
    "GF5",
    "GF7",
    "GF9",
    "Q",
    "mat",
    "random_invertible",
    "random_matrix",
    "rng_for",
]
