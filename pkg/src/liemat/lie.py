"""Commutator brackets, left-normed products, and subalgebra closure.

The closure engine computes the smallest subspace containing a generator
set that is closed under the chosen product (commutator bracket or plain
matrix product) by a worklist sweep: every element added in the previous
sweep is combined with all generators and all current basis elements, and
new directions are spanned in.  Dimension is bounded by n^2, so the sweep
count is too.  A final full-pairs pass certifies the fixpoint.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal, Sequence

from .errors import DimensionMismatch, EmptySequence, MixedShapes
from .matrices import Matrix
from .subspaces import SpanBuilder, Subspace, preimage


def bracket(x: Matrix, y: Matrix) -> Matrix:
    """The commutator [x, y] = xy - yx."""
    if not x.is_square:
        raise DimensionMismatch("brackets need square matrices")
    return x * y - y * x


def left_normed(xs: Sequence[Matrix]) -> Matrix:
    """[x1, x2, ..., xm] nested to the left: [[..[[x1,x2],x3]..], xm]."""
    if not xs:
        raise EmptySequence("left-normed product of an empty sequence")
    acc = xs[0]
    for x in xs[1:]:
        acc = bracket(acc, x)
    return acc


ProductKind = Literal["lie", "associative"]


@dataclass(frozen=True)
class ClosureResult:
    subspace: Subspace
    rounds: int
    product_kind: ProductKind


def closure(generators: Sequence[Matrix], kind: ProductKind = "lie") -> ClosureResult:
    """Smallest subspace containing the generators and closed under the
    product.

    The associative kind does *not* adjoin the identity: if a generator
    set is supposed to produce 1, that must emerge from the products.
    """
    gens = list(generators)
    if not gens:
        raise MixedShapes("closure needs at least one generator")
    field = gens[0].field
    n = gens[0].nrows
    if any(not g.is_square for g in gens):
        raise DimensionMismatch("closure needs square matrices")
    if any(g.field != field or g.nrows != n for g in gens):
        raise MixedShapes("generators do not share one ambient space")
    if kind not in ("lie", "associative"):
        raise ValueError(f"unknown product kind {kind!r}")

    builder = SpanBuilder(field, n * n)
    basis: list[Matrix] = []  # independent representatives, insertion order
    for g in gens:
        if builder.insert(g.vectorize()):
            basis.append(g)

    full_dim = n * n
    rounds = 0
    frontier_start = 0
    while frontier_start < len(basis) and builder.dim < full_dim:
        rounds += 1
        frontier_end = len(basis)
        for u in basis[frontier_start:frontier_end]:
            for v in itertools.chain(gens, basis[:frontier_end]):
                for prod in _products(u, v, kind):
                    if builder.insert(prod.vectorize()):
                        basis.append(prod)
        if len(basis) == frontier_end:
            break
        frontier_start = frontier_end

    subspace = Subspace(field, (n, n), builder.sorted_rows())
    _certify_closed(subspace, basis, kind)
    return ClosureResult(subspace=subspace, rounds=rounds, product_kind=kind)


def _products(u: Matrix, v: Matrix, kind: ProductKind):
    if kind == "lie":
        yield bracket(u, v)
    else:
        yield u * v
        yield v * u


def _certify_closed(subspace: Subspace, basis: list[Matrix], kind: ProductKind) -> None:
    """Re-check the fixpoint on every basis pair.

    Trivial when the subspace is the whole matrix space.  A failure here
    would mean the worklist logic is broken, hence the hard error.
    """
    if subspace.is_full:
        return
    for i, u in enumerate(basis):
        start = i + 1 if kind == "lie" else 0  # brackets are antisymmetric
        for v in basis[start:]:
            for prod in _products(u, v, kind):
                if not subspace.contains_vec(prod.vectorize()):
                    raise AssertionError("closure fixpoint certification failed")


def leibniz_expansion_check(r: Matrix, s: Matrix, xs: Sequence[Matrix]) -> bool:
    """Executable witness for the product expansion of a left-normed bracket:

        [rs, x1, ..., xk] = sum over complementary increasing index sets
                            (I, J) of [r, x_I] * [s, x_J],

    with the empty bracket read as the element itself.  This is an algebra
    identity, so the check must come back True on any inputs; it exists so
    tests can exercise the expansion term by term.
    """
    if not xs:
        raise EmptySequence("expansion needs at least one argument")
    k = len(xs)
    lhs = left_normed([r * s, *xs])
    rhs = None
    for mask in range(2**k):
        left_args = [r] + [xs[i] for i in range(k) if mask >> i & 1]
        right_args = [s] + [xs[i] for i in range(k) if not mask >> i & 1]
        term = left_normed(left_args) * left_normed(right_args)
        rhs = term if rhs is None else rhs + term
    return lhs == rhs


def centralizer_intersection_check(generators: Sequence[Matrix]) -> tuple[Subspace, bool]:
    """Intersection of the centralizers of the given matrices, and whether
    that intersection is exactly the scalar matrices *because* the
    generators generate the full matrix algebra associatively.

    The second component is False whenever the generators fail to generate
    (then nothing is claimed about the intersection).
    """
    gens = list(generators)
    if not gens:
        raise MixedShapes("need at least one matrix")
    field = gens[0].field
    n = gens[0].nrows
    if any(g.field != field or not g.is_square or g.nrows != n for g in gens):
        raise MixedShapes("matrices do not share one ambient space")
    ambient = Subspace.full(field, (n, n))
    zero = Subspace.zero(field, (n, n))
    inter = ambient
    for g in gens:
        images = [bracket(b, g) for b in inter.basis]
        inter = preimage(inter.basis, images, zero)
    generates = closure(gens, "associative").subspace.is_full
    scalars = Subspace.span([Matrix.identity(field, n)])
    return inter, generates and inter == scalars
