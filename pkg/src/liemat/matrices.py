"""Dense exact matrices over one field, with the eliminations the rest of
the package is built on: reduced row-echelon form, kernels, inverses, and
the standard generator matrices (units, shift, cyclic permutation) plus the
symplectic involution.

Entries are stored as raw field values in nested tuples; a matrix never
mutates after construction.  Matrix units use the 1-based mathematical
convention ``E(i, j)``; plain element access is 0-based Python.
"""

from __future__ import annotations

from typing import Sequence

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    IndexOutOfRange,
    OddDimension,
    SingularMatrix,
)
from .fields import Field, FieldAutomorphism, Scalar


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field: Field, rows: Sequence[Sequence]):
        data = tuple(tuple(field.coerce(v) for v in row) for row in rows)
        if not data or not data[0]:
            raise DimensionMismatch("matrices must have positive dimensions")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise DimensionMismatch("ragged rows")
        self.field = field
        self.nrows = len(data)
        self.ncols = width
        self.entries = data

    @classmethod
    def _make(cls, field: Field, data: tuple) -> "Matrix":
        """Internal fast path: data is already a tuple-of-tuples of raws."""
        m = object.__new__(cls)
        m.field = field
        m.nrows = len(data)
        m.ncols = len(data[0])
        m.entries = data
        return m

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zeros(field: Field, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        z = field.zero
        return Matrix._make(field, tuple((z,) * ncols for _ in range(nrows)))

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return Matrix._make(
            field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))
        )

    @staticmethod
    def from_vector(field: Field, nrows: int, ncols: int, vec: Sequence) -> "Matrix":
        vec = tuple(vec)
        if len(vec) != nrows * ncols:
            raise DimensionMismatch(
                f"vector of length {len(vec)} cannot fill {nrows}x{ncols}"
            )
        return Matrix._make(
            field,
            tuple(vec[r * ncols : (r + 1) * ncols] for r in range(nrows)),
        )

    # -- basics ---------------------------------------------------------------

    def _check_same_space(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatch(
                f"{self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}"
            )

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, key) -> Scalar:
        i, j = key
        return Scalar(self.field, self.entries[i][j])

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_space(other)
        add = self.field.add
        return Matrix._make(
            self.field,
            tuple(
                tuple(add(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_space(other)
        sub = self.field.sub
        return Matrix._make(
            self.field,
            tuple(
                tuple(sub(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix._make(
            self.field, tuple(tuple(neg(a) for a in row) for row in self.entries)
        )

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        mul = self.field.mul
        return Matrix._make(
            self.field, tuple(tuple(mul(c, a) for a in row) for row in self.entries)
        )

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.field != other.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            if self.ncols != other.nrows:
                raise DimensionMismatch(
                    f"{self.nrows}x{self.ncols} times {other.nrows}x{other.ncols}"
                )
            dot = self.field.dot
            cols = tuple(zip(*other.entries))
            return Matrix._make(
                self.field,
                tuple(tuple(dot(row, col) for col in cols) for row in self.entries),
            )
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int) -> "Matrix":
        if not self.is_square:
            raise DimensionMismatch("powers need a square matrix")
        if e < 0:
            raise ValueError("negative powers are not supported; invert first")
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        fmt = self.field.format_scalar
        rows = "; ".join(" ".join(fmt(a) for a in row) for row in self.entries)
        return f"<{self.nrows}x{self.ncols} over {self.field!r}: {rows}>"

    def is_zero(self) -> bool:
        z = self.field.is_zero
        return all(z(a) for row in self.entries for a in row)

    # -- shape-level operations ------------------------------------------------

    def transpose(self) -> "Matrix":
        return Matrix._make(self.field, tuple(zip(*self.entries)))

    def trace(self) -> Scalar:
        return Scalar(self.field, self.trace_raw())

    def trace_raw(self):
        if not self.is_square:
            raise DimensionMismatch("trace needs a square matrix")
        add = self.field.add
        acc = self.field.zero
        for i in range(self.nrows):
            acc = add(acc, self.entries[i][i])
        return acc

    def vectorize(self) -> tuple:
        """Row-major flattening; the single vectorization convention
        shared by subspaces, closures, and centralizers."""
        return tuple(a for row in self.entries for a in row)

    def map_entries(self, f: FieldAutomorphism) -> "Matrix":
        apply = f.apply
        F = self.field
        return Matrix._make(
            F, tuple(tuple(apply(F, a) for a in row) for row in self.entries)
        )

    def column(self, j: int) -> "Matrix":
        """Column j (0-based) as an n-by-1 matrix."""
        return Matrix._make(self.field, tuple((row[j],) for row in self.entries))

    # -- eliminations -----------------------------------------------------------

    def rref(self) -> tuple["Matrix", int, list[int]]:
        """Reduced row-echelon form, rank, and 0-based pivot columns."""
        rows = [list(r) for r in self.entries]
        pivots = _rref_in_place(rows, self.field)
        R = Matrix._make(self.field, tuple(tuple(r) for r in rows))
        return R, len(pivots), pivots

    def kernel_vectors(self) -> list["Matrix"]:
        """Basis of the right kernel as column vectors.

        Deterministic parametric form: one vector per free column in
        increasing order, with that free variable set to 1.
        """
        rows = [list(r) for r in self.entries]
        pivots = _rref_in_place(rows, self.field)
        return [
            Matrix._make(self.field, tuple((v,) for v in vec))
            for vec in _kernel_from_rref(rows, pivots, self.ncols, self.field)
        ]

    def rank(self) -> int:
        rows = [list(r) for r in self.entries]
        return len(_rref_in_place(rows, self.field))

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise DimensionMismatch("inverse needs a square matrix")
        F = self.field
        n = self.nrows
        z, o = F.zero, F.one
        aug = [
            list(self.entries[i]) + [o if j == i else z for j in range(n)]
            for i in range(n)
        ]
        pivots = _rref_in_place(aug, F)
        if pivots != list(range(n)):
            raise SingularMatrix(f"rank {len(pivots)} < {n}")
        inv = Matrix._make(F, tuple(tuple(row[n:]) for row in aug))
        if (self * inv) != Matrix.identity(F, n):
            raise AssertionError("inverse verification failed")
        return inv


def _rref_in_place(rows: list[list], field: Field) -> list[int]:
    """Full Gauss-Jordan on a list of raw-valued rows; returns pivot cols.

    Pivot choice is the first nonzero entry scanning top to bottom, which
    is deterministic and all that exact arithmetic needs.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    is_zero = field.is_zero
    inv = field.inv
    vec_scale = field.vec_scale
    vec_submul = field.vec_submul
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if not is_zero(rows[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        lead = rows[r][c]
        if lead != field.one:
            rows[r] = vec_scale(rows[r], inv(lead))
        for i in range(nrows):
            if i != r and not is_zero(rows[i][c]):
                rows[i] = vec_submul(rows[i], rows[i][c], rows[r])
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _kernel_from_rref(rows: list[list], pivots: list[int], ncols: int, field: Field) -> list[list]:
    free_cols = [c for c in range(ncols) if c not in pivots]
    z, o = field.zero, field.one
    neg = field.neg
    out = []
    for f in free_cols:
        vec = [z] * ncols
        vec[f] = o
        for r, pc in enumerate(pivots):
            vec[pc] = neg(rows[r][f])
        out.append(vec)
    return out


# ---------------------------------------------------------------------------
# standard generators
# ---------------------------------------------------------------------------

def matrix_unit(field: Field, n: int, i: int, j: int) -> Matrix:
    """E(i, j): a single 1 at row i, column j (1-based)."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange(f"unit index ({i},{j}) outside [1,{n}]")
    z, o = field.zero, field.one
    return Matrix._make(
        field,
        tuple(
            tuple(o if (r == i - 1 and c == j - 1) else z for c in range(n))
            for r in range(n)
        ),
    )


def upper_shift(field: Field, n: int) -> Matrix:
    """The superdiagonal shift E(1,2) + E(2,3) + ... + E(n-1,n)."""
    z, o = field.zero, field.one
    return Matrix._make(
        field,
        tuple(tuple(o if c == r + 1 else z for c in range(n)) for r in range(n)),
    )


def cyclic_permutation(field: Field, n: int) -> Matrix:
    """The full-cycle permutation matrix: upper shift plus E(n,1)."""
    z, o = field.zero, field.one
    return Matrix._make(
        field,
        tuple(
            tuple(o if (c == r + 1 or (r == n - 1 and c == 0)) else z for c in range(n))
            for r in range(n)
        ),
    )


def basis_unit_vector(field: Field, n: int, i: int) -> Matrix:
    """e_i as an n-by-1 column (1-based)."""
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"index {i} outside [1,{n}]")
    z, o = field.zero, field.one
    return Matrix._make(field, tuple((o if r == i - 1 else z,) for r in range(n)))


def symplectic_involution(x: Matrix) -> Matrix:
    """The standard symplectic involution on 2m-by-2m matrices.

    In m-by-m blocks it sends [[U, P], [Q, V]] to
    [[V^T, -P^T], [-Q^T, U^T]]; it is an anti-automorphism of order two.
    """
    if not x.is_square:
        raise DimensionMismatch("symplectic involution needs a square matrix")
    n = x.nrows
    if n % 2:
        raise OddDimension(f"size {n} is odd")
    m = n // 2
    e = x.entries
    neg = x.field.neg
    rows = []
    for r in range(m):
        # row r of [V^T | -P^T]: V^T[r][c] = V[c][r] = e[m+c][m+r]
        rows.append(
            tuple(e[m + c][m + r] for c in range(m))
            + tuple(neg(e[c][m + r]) for c in range(m))
        )
    for r in range(m):
        # row r of [-Q^T | U^T]: Q^T[r][c] = Q[c][r] = e[m+c][r]
        rows.append(
            tuple(neg(e[m + c][r]) for c in range(m))
            + tuple(e[c][r] for c in range(m))
        )
    return Matrix._make(x.field, tuple(rows))


def scalar_multiple_of_identity(x: Matrix):
    """Return the raw scalar c with x = c*I, or None if x is not scalar."""
    if not x.is_square:
        return None
    F = x.field
    c = x.entries[0][0]
    for i in range(x.nrows):
        row = x.entries[i]
        for j in range(x.ncols):
            if i == j:
                if row[j] != c:
                    return None
            elif not F.is_zero(row[j]):
                return None
    return c
