"""Seeded random matrices for property tests and the self-test command.

Everything takes an explicit ``random.Random`` so corpora are reproducible
across machines; nothing here touches the global RNG state.
"""

from __future__ import annotations

from typing import Callable

from .errors import SingularMatrix
from .fields import Field, Rationals
from .matrices import Matrix


def random_matrix(
    field: Field,
    nrows: int,
    ncols: int | None = None,
    rng=None,
    entry: Callable | None = None,
) -> Matrix:
    """Random matrix with entries from ``entry(rng)`` (default: the
    field's own sampler)."""
    if rng is None:
        raise ValueError("pass a seeded random.Random")
    ncols = nrows if ncols is None else ncols
    if entry is None:
        entry = field.random_scalar
    return Matrix._make(
        field, tuple(tuple(field.coerce(entry(rng)) for _ in range(ncols)) for _ in range(nrows))
    )


def _small_int_entry(field: Field):
    """Integer-valued entries keep rational eliminations cheap."""
    if isinstance(field, Rationals):
        return lambda rng: field.from_int(rng.randint(-9, 9))
    return field.random_scalar


def random_invertible(field: Field, n: int, rng) -> Matrix:
    """Rejection-sample an invertible matrix (almost always first try)."""
    entry = _small_int_entry(field)
    while True:
        m = random_matrix(field, n, n, rng, entry)
        try:
            m.inverse()
        except SingularMatrix:
            continue
        return m
