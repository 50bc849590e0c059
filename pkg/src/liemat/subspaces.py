"""Canonical subspaces of matrix (or column-vector) spaces.

A subspace is stored as the unique reduced row-echelon basis of the
row-major vectorizations of its elements, so equality of subspaces is
structural equality of bases and every construction is reproducible
bit-for-bit regardless of generator order.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import MixedShapes
from .fields import Field
from .matrices import Matrix, _kernel_from_rref, _rref_in_place


class SpanBuilder:
    """Incrementally maintained RREF span of raw vectors.

    ``insert`` reduces a vector against the current rows, and on growth
    normalizes it and back-substitutes into the existing rows, so the row
    set stays a reduced echelon basis at all times (rows are kept indexed
    by pivot column; sort by pivot to read the canonical basis off).
    """

    def __init__(self, field: Field, length: int):
        self.field = field
        self.length = length
        self.rows: list[list] = []
        self.pivots: list[int] = []  # pivots[i] is the pivot column of rows[i]

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: list) -> list:
        F = self.field
        is_zero = F.is_zero
        submul = F.vec_submul
        for row, p in zip(self.rows, self.pivots):
            c = vec[p]
            if not is_zero(c):
                vec = submul(vec, c, row)
        return vec

    def contains(self, vec: Sequence) -> bool:
        F = self.field
        return all(F.is_zero(a) for a in self._reduce(list(vec)))

    def insert(self, vec: Sequence) -> bool:
        """Add a vector to the span; True if the dimension grew."""
        F = self.field
        v = self._reduce(list(vec))
        pivot = None
        for i, a in enumerate(v):
            if not F.is_zero(a):
                pivot = i
                break
        if pivot is None:
            return False
        if v[pivot] != F.one:
            v = F.vec_scale(v, F.inv(v[pivot]))
        for i, row in enumerate(self.rows):
            c = row[pivot]
            if not F.is_zero(c):
                self.rows[i] = F.vec_submul(row, c, v)
        self.rows.append(v)
        self.pivots.append(pivot)
        return True

    def sorted_rows(self) -> tuple[tuple, ...]:
        order = sorted(range(len(self.rows)), key=lambda i: self.pivots[i])
        return tuple(tuple(self.rows[i]) for i in order)


class Subspace:
    """A linear subspace of the matrices of one shape over one field."""

    __slots__ = ("field", "shape", "rows", "_basis_cache", "_pivots_cache")

    def __init__(self, field: Field, shape: tuple[int, int], rows: tuple[tuple, ...]):
        self.field = field
        self.shape = shape
        self.rows = rows
        self._basis_cache = None
        self._pivots_cache = None

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def span(
        generators: Iterable[Matrix],
        *,
        field: Field | None = None,
        shape: tuple[int, int] | None = None,
    ) -> "Subspace":
        """Smallest subspace containing the generators.

        ``field``/``shape`` fix the ambient space when the generator list
        may be empty.
        """
        gens = list(generators)
        if gens:
            if field is not None and field != gens[0].field:
                raise MixedShapes("explicit field conflicts with the generators")
            if shape is not None and shape != (gens[0].nrows, gens[0].ncols):
                raise MixedShapes("explicit shape conflicts with the generators")
            field = gens[0].field
            shape = (gens[0].nrows, gens[0].ncols)
        elif field is None or shape is None:
            raise MixedShapes("empty span needs an explicit ambient space")
        builder = SpanBuilder(field, shape[0] * shape[1])
        for g in gens:
            if g.field != field or (g.nrows, g.ncols) != shape:
                raise MixedShapes(
                    f"generator {g.nrows}x{g.ncols}/{g.field!r} in ambient "
                    f"{shape}/{field!r}"
                )
            builder.insert(g.vectorize())
        return Subspace(field, shape, builder.sorted_rows())

    @staticmethod
    def zero(field: Field, shape: tuple[int, int]) -> "Subspace":
        return Subspace(field, shape, ())

    @staticmethod
    def full(field: Field, shape: tuple[int, int]) -> "Subspace":
        n = shape[0] * shape[1]
        z, o = field.zero, field.one
        rows = tuple(
            tuple(o if j == i else z for j in range(n)) for i in range(n)
        )
        return Subspace(field, shape, rows)

    # -- inspection -------------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def ambient_dim(self) -> int:
        return self.shape[0] * self.shape[1]

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    @property
    def basis(self) -> list[Matrix]:
        if self._basis_cache is None:
            r, c = self.shape
            self._basis_cache = [
                Matrix.from_vector(self.field, r, c, row) for row in self.rows
            ]
        return self._basis_cache

    def _check_ambient(self, other: "Subspace") -> None:
        if self.field != other.field or self.shape != other.shape:
            raise MixedShapes(f"{self.shape}/{self.field!r} vs {other.shape}/{other.field!r}")

    @property
    def pivots(self) -> tuple[int, ...]:
        if self._pivots_cache is None:
            self._pivots_cache = tuple(
                _leading_index(row, self.field) for row in self.rows
            )
        return self._pivots_cache

    def contains_vec(self, vec: Sequence) -> bool:
        F = self.field
        is_zero = F.is_zero
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if not is_zero(c):
                v = F.vec_submul(v, c, row)
        return all(is_zero(a) for a in v)

    def contains(self, x: Matrix) -> bool:
        if x.field != self.field or (x.nrows, x.ncols) != self.shape:
            raise MixedShapes("element shape does not match the ambient space")
        return self.contains_vec(x.vectorize())

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains_vec(row) for row in other.rows)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.shape, self.rows))

    def __repr__(self):
        return f"<subspace dim {self.dim} of {self.shape[0]}x{self.shape[1]} over {self.field!r}>"

    # -- lattice operations -------------------------------------------------------

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        builder = SpanBuilder(self.field, self.ambient_dim)
        for row in self.rows:
            builder.insert(row)
        for row in other.rows:
            builder.insert(row)
        return Subspace(self.field, self.shape, builder.sorted_rows())

    __or__ = sum

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: row-reduce [[U, U], [W, 0]]; rows whose left half
        vanished carry a basis of the intersection in their right half."""
        self._check_ambient(other)
        F = self.field
        n = self.ambient_dim
        z = F.zero
        stacked = [list(u) + list(u) for u in self.rows]
        stacked += [list(w) + [z] * n for w in other.rows]
        if not stacked:
            return Subspace.zero(F, self.shape)
        _rref_in_place(stacked, F)
        builder = SpanBuilder(F, n)
        for row in stacked:
            if all(F.is_zero(a) for a in row[:n]):
                builder.insert(row[n:])
        return Subspace(F, self.shape, builder.sorted_rows())

    __and__ = intersect


def _leading_index(row: Sequence, field: Field) -> int:
    for i, a in enumerate(row):
        if not field.is_zero(a):
            return i
    raise AssertionError("zero row stored in a subspace basis")


def kernel(x: Matrix) -> Subspace:
    """The right kernel {v : Xv = 0} as a subspace of column vectors."""
    return Subspace.span(
        x.kernel_vectors(), field=x.field, shape=(x.ncols, 1)
    )


def preimage(
    domain_basis: Sequence[Matrix],
    images: Sequence[Matrix],
    target: Subspace,
) -> Subspace:
    """{v in span(domain_basis) : L(v) in target} for the linear map L
    sending domain_basis[i] to images[i].

    One kernel computation on the stacked system: coefficients c over the
    domain basis and t over the target basis with
    sum c_i vec(images[i]) - sum t_j b_j = 0.
    """
    if len(domain_basis) != len(images):
        raise MixedShapes("domain basis and image list differ in length")
    if not domain_basis:
        dom_field, dom_shape = target.field, target.shape
        return Subspace.zero(dom_field, dom_shape)
    F = domain_basis[0].field
    dom_shape = (domain_basis[0].nrows, domain_basis[0].ncols)
    for m in domain_basis:
        if m.field != F or (m.nrows, m.ncols) != dom_shape:
            raise MixedShapes("mixed shapes in domain basis")
    for m in images:
        if m.field != target.field or (m.nrows, m.ncols) != target.shape:
            raise MixedShapes("image outside the target's ambient space")
    if target.is_full:
        return Subspace.span(domain_basis)
    r = len(domain_basis)
    img_vecs = [m.vectorize() for m in images]
    n_out = target.ambient_dim
    neg = F.neg
    rows = []
    for row_idx in range(n_out):
        row = [img_vecs[i][row_idx] for i in range(r)]
        row += [neg(b[row_idx]) for b in target.rows]
        rows.append(row)
    pivots = _rref_in_place(rows, F)
    sols = _kernel_from_rref(rows, pivots, r + target.dim, F)
    out = []
    for sol in sols:
        acc = None
        for c, basis_elt in zip(sol[:r], domain_basis):
            if F.is_zero(c):
                continue
            term = basis_elt.scale(c)
            acc = term if acc is None else acc + term
        if acc is not None and not acc.is_zero():
            out.append(acc)
    return Subspace.span(out, field=F, shape=dom_shape)
