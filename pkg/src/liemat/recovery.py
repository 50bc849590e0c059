"""Constructive recovery of conjugating matrices.

An additive map on the n-by-n matrices is represented by the images of
the n^2 matrix units, optionally together with an entrywise field
automorphism twist (for maps that are only semilinear over the field).

For a genuine automorphism the conjugator is rebuilt, Skolem-Noether
style, from just two images: with M = phi(S)^(n-1) phi(E_{n,1}) and a a
nonzero kernel vector of I - M,

    A = [ M a | phi(S)^(n-2) phi(E_{n,1}) a | ... | phi(E_{n,1}) a ],

and then phi(X) = A X A^(-1) throughout.  Anti-automorphisms run the same
pipeline on the transposed generators S^T and E_{1,n} and conjugate X^T.
Since S, E_{n,1}, S^T, E_{1,n} have only 0/1 entries, an entrywise twist
is invisible on the inputs and the construction carries over verbatim.

Every recovery re-verifies the conjugation formula on all n^2 units; the
``verified`` flag is never assumed.  Conjugators are unique only up to a
nonzero scalar.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable, Literal

from .errors import (
    CharacteristicDividesN,
    DimensionMismatch,
    FieldMismatch,
    MixedShapes,
    NotAnAntiAutomorphism,
    NotAnAutomorphism,
    NotAnAutomorphismImagePair,
    NotATwistedAntiAutomorphism,
    NotATwistedAutomorphism,
    NotDecomposable,
    ResidualNotScalar,
    SingularMatrix,
)
from .fields import Field, FieldAutomorphism, Scalar
from .matrices import Matrix, matrix_unit, scalar_multiple_of_identity, upper_shift

SCALAR_CLASS_NOTE = "any nonzero scalar multiple of the conjugator verifies identically"


class AlgebraMap:
    """An additive map on n-by-n matrices, given by its unit images.

    The map acts as X |-> sum f(x_ij) * images[i,j] where f is the twist
    (identity unless the map is semilinear).  Nothing structural beyond
    additivity is assumed; multiplicativity and friends are classified or
    verified, never taken on faith.
    """

    __slots__ = ("n", "field", "images", "twist")

    def __init__(
        self,
        n: int,
        field: Field,
        images: tuple[Matrix, ...],
        twist: FieldAutomorphism | None = None,
    ):
        if len(images) != n * n:
            raise MixedShapes(f"expected {n * n} unit images, got {len(images)}")
        for m in images:
            if m.field != field:
                raise FieldMismatch("image field differs from the map's field")
            if m.nrows != n or m.ncols != n:
                raise DimensionMismatch("image is not n-by-n")
        self.n = n
        self.field = field
        self.images = images
        self.twist = twist if twist is not None else FieldAutomorphism.identity()

    @staticmethod
    def from_function(
        n: int,
        field: Field,
        fn: Callable[[Matrix], Matrix],
        twist: FieldAutomorphism | None = None,
    ) -> "AlgebraMap":
        images = tuple(
            fn(matrix_unit(field, n, i, j))
            for i in range(1, n + 1)
            for j in range(1, n + 1)
        )
        return AlgebraMap(n, field, images, twist)

    def image(self, i: int, j: int) -> Matrix:
        """The image of E(i, j), 1-based."""
        return self.images[(i - 1) * self.n + (j - 1)]

    def apply(self, x: Matrix) -> Matrix:
        if x.field != self.field or x.nrows != self.n or x.ncols != self.n:
            raise MixedShapes("argument does not match the map's ambient space")
        F = self.field
        n = self.n
        twist = self.twist
        acc = [[F.zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                c = twist.apply(F, x.entries[i][j])
                if F.is_zero(c):
                    continue
                img = self.images[i * n + j].entries
                for r in range(n):
                    acc_r = acc[r]
                    img_r = img[r]
                    for s in range(n):
                        v = img_r[s]
                        if not F.is_zero(v):
                            acc_r[s] = F.add(acc_r[s], F.mul(c, v))
        return Matrix._make(F, tuple(tuple(row) for row in acc))

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraMap)
            and self.n == other.n
            and self.field == other.field
            and self.twist == other.twist
            and self.images == other.images
        )

    def __repr__(self):
        return f"<map on {self.n}x{self.n} over {self.field!r}, twist={self.twist.kind}>"


def conjugation_map(
    b: Matrix, twist: FieldAutomorphism | None = None
) -> AlgebraMap:
    """X |-> B X_f B^(-1) as an AlgebraMap (ring automorphism)."""
    b_inv = b.inverse()
    n = b.nrows
    images = tuple(
        _conjugate_unit(b, b_inv, i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    )
    return AlgebraMap(n, b.field, images, twist)


def transpose_conjugation_map(
    b: Matrix, twist: FieldAutomorphism | None = None
) -> AlgebraMap:
    """X |-> B X_f^T B^(-1) as an AlgebraMap (ring anti-automorphism)."""
    b_inv = b.inverse()
    n = b.nrows
    images = tuple(
        _conjugate_unit(b, b_inv, j, i)  # E(i,j)^T = E(j,i)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    )
    return AlgebraMap(n, b.field, images, twist)


@dataclass(frozen=True)
class RecoveryResult:
    conjugator: Matrix
    kernel_vector: Matrix
    verified: bool
    scalar_class: str = SCALAR_CLASS_NOTE


def _conjugate_unit(a: Matrix, a_inv: Matrix, i: int, j: int) -> Matrix:
    """A E(i,j) A^(-1) as the outer product of A's column i with A^(-1)'s
    row j (1-based); avoids two full matrix products per unit."""
    F = a.field
    col = [row[i - 1] for row in a.entries]
    rw = a_inv.entries[j - 1]
    mul = F.mul
    return Matrix._make(F, tuple(tuple(mul(c, r) for r in rw) for c in col))


def conjugator_from_images(
    phi_s: Matrix, phi_en1: Matrix, n: int
) -> RecoveryResult:
    """Rebuild a conjugator from the images of the shift S and of E(n,1).

    Fails with NotAnAutomorphismImagePair when I - phi(S)^(n-1) phi(E_{n,1})
    has full rank or the assembled matrix is singular; either way the
    inputs cannot be generator images of an automorphism.  ``verified``
    reports whether conjugation reproduces the two inputs themselves.
    """
    if phi_s.nrows != n or phi_s.ncols != n:
        raise DimensionMismatch("phi(S) is not n-by-n")
    if phi_en1.nrows != n or phi_en1.ncols != n:
        raise DimensionMismatch("phi(E(n,1)) is not n-by-n")
    if phi_s.field != phi_en1.field:
        raise FieldMismatch("images live over different fields")
    field = phi_s.field
    m = (phi_s ** (n - 1)) * phi_en1
    eye = Matrix.identity(field, n)
    kernel_basis = (eye - m).kernel_vectors()
    if not kernel_basis:
        raise NotAnAutomorphismImagePair("I - phi(S)^(n-1) phi(E(n,1)) is invertible")
    a_vec = kernel_basis[0]
    columns = [phi_en1 * a_vec]
    for _ in range(n - 1):
        columns.append(phi_s * columns[-1])
    columns.reverse()  # highest power first
    conjugator = Matrix._make(
        field,
        tuple(tuple(col.entries[r][0] for col in columns) for r in range(n)),
    )
    try:
        conj_inv = conjugator.inverse()
    except SingularMatrix as exc:
        raise NotAnAutomorphismImagePair("assembled conjugator is singular") from exc
    s = upper_shift(field, n)
    en1 = matrix_unit(field, n, n, 1)
    verified = (
        conjugator * s * conj_inv == phi_s
        and conjugator * en1 * conj_inv == phi_en1
    )
    return RecoveryResult(conjugator=conjugator, kernel_vector=a_vec, verified=verified)


def _extract_shift_image(m: AlgebraMap, transposed: bool) -> Matrix:
    """phi(S) = sum of the images of the superdiagonal units, or phi(S^T)
    from the subdiagonal ones."""
    n = m.n
    acc = None
    for i in range(1, n):
        term = m.image(i + 1, i) if transposed else m.image(i, i + 1)
        acc = term if acc is None else acc + term
    if acc is None:  # n == 1: empty sum
        acc = Matrix.zeros(m.field, n)
    return acc


def _verify_all_units(
    m: AlgebraMap, conjugator: Matrix, conj_inv: Matrix, transposed: bool
) -> bool:
    """Does A E(i,j) A^(-1) (or A E(j,i) A^(-1) for anti-maps) reproduce
    every unit image?  The twist never shows: units have 0/1 entries."""
    n = m.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            src = (j, i) if transposed else (i, j)
            if _conjugate_unit(conjugator, conj_inv, *src) != m.image(i, j):
                return False
    return True


def _recover(
    m: AlgebraMap,
    transposed: bool,
    pair_error,
    verify_error,
) -> RecoveryResult:
    n = m.n
    if transposed:
        phi_gen_shift = _extract_shift_image(m, transposed=True)
        phi_gen_unit = m.image(1, n)
    else:
        phi_gen_shift = _extract_shift_image(m, transposed=False)
        phi_gen_unit = m.image(n, 1)
    try:
        result = conjugator_from_images(phi_gen_shift, phi_gen_unit, n)
    except NotAnAutomorphismImagePair as exc:
        raise pair_error(str(exc)) from exc
    conjugator = result.conjugator
    conj_inv = conjugator.inverse()
    if not _verify_all_units(m, conjugator, conj_inv, transposed):
        raise verify_error("conjugation does not reproduce all unit images")
    return RecoveryResult(
        conjugator=conjugator, kernel_vector=result.kernel_vector, verified=True
    )


def recover_automorphism(m: AlgebraMap) -> RecoveryResult:
    """Conjugator for a map expected to be an (untwisted) automorphism."""
    if not m.twist.is_identity_kind:
        raise NotAnAutomorphism(
            "map carries a twist; use recover_twisted_automorphism"
        )
    return _recover(m, False, NotAnAutomorphism, NotAnAutomorphism)


def recover_twisted_automorphism(m: AlgebraMap) -> RecoveryResult:
    """Conjugator for a twisted (semilinear) ring automorphism.

    The pipeline is identical to the untwisted one: the generator images
    and the unit verification only ever see 0/1-entried matrices, on which
    the twist acts trivially.
    """
    return _recover(m, False, NotATwistedAutomorphism, NotATwistedAutomorphism)


def recover_antiautomorphism(m: AlgebraMap) -> RecoveryResult:
    """Conjugator A with phi(X) = A X^T A^(-1) for an anti-automorphism."""
    if not m.twist.is_identity_kind:
        raise NotAnAntiAutomorphism(
            "map carries a twist; use recover_twisted_antiautomorphism"
        )
    return _recover(m, True, NotAnAntiAutomorphism, NotAnAntiAutomorphism)


def recover_twisted_antiautomorphism(m: AlgebraMap) -> RecoveryResult:
    """Conjugator for a twisted anti-automorphism, phi(X) = A X_f^T A^(-1)."""
    return _recover(m, True, NotATwistedAntiAutomorphism, NotATwistedAntiAutomorphism)


# ---------------------------------------------------------------------------
# classification and Lie-automorphism decomposition
# ---------------------------------------------------------------------------

MapKind = Literal["automorphism", "anti-automorphism", "lie-automorphism"]


def _is_bijective(m: AlgebraMap) -> bool:
    rows = tuple(img.vectorize() for img in m.images)
    return Matrix._make(m.field, rows).rank() == m.n * m.n


def classify_map(m: AlgebraMap) -> MapKind | None:
    """The strongest structure the unit-image table satisfies.

    Checks multiplicativity, anti-multiplicativity, and bracket
    preservation on all pairs of matrix units (0/1 entries, so the twist
    is irrelevant), plus bijectivity.  Returns None when even brackets are
    not preserved or the map is not bijective.
    """
    if not _is_bijective(m):
        return None
    n = m.n
    zero = Matrix.zeros(m.field, n)
    mult = True
    anti = True
    lie = True
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            pij = m.image(i, j)
            for k in range(1, n + 1):
                for l in range(1, n + 1):
                    pkl = m.image(k, l)
                    # E(i,j) E(k,l) = E(i,l) if j == k else 0
                    prod_img = m.image(i, l) if j == k else zero
                    rev_img = m.image(k, j) if l == i else zero
                    ab = pij * pkl
                    ba = pkl * pij
                    if mult and ab != prod_img:
                        mult = False
                    if anti and ba != prod_img:
                        anti = False
                    if lie and ab - ba != prod_img - rev_img:
                        lie = False
                    if not (mult or anti or lie):
                        return None
    if mult:
        return "automorphism"
    if anti:
        return "anti-automorphism"
    if lie:
        return "lie-automorphism"
    return None


@dataclass(frozen=True)
class LieDecomposition:
    """psi = sigma + tau, with sigma conjugation-shaped and tau = c * tr.

    ``sigma_kind`` records whether sigma is an automorphism or the
    negative of an anti-automorphism; ``sigma_conjugator`` is the
    recovered conjugating matrix for sigma (for the negative kind, for
    -sigma); ``residual_zero`` certifies that the reassembled
    sigma + c*tr(.)*I reproduces psi on every matrix unit.
    """

    sigma_kind: Literal["automorphism", "negative-anti-automorphism"]
    sigma_conjugator: Matrix
    tau_coefficient: Scalar
    residual_zero: bool
    n: int
    field: Field
    twist: FieldAutomorphism

    def sigma_map(self) -> AlgebraMap:
        """sigma reassembled from its conjugator."""
        if self.sigma_kind == "automorphism":
            return conjugation_map(self.sigma_conjugator, self.twist)
        anti = transpose_conjugation_map(self.sigma_conjugator, self.twist)
        images = tuple(-img for img in anti.images)
        return AlgebraMap(self.n, self.field, images, self.twist)


def _warn_classification_hypotheses(m: AlgebraMap) -> None:
    n, F = m.n, m.field
    if n >= 3 and F.order is not None and F.order < 2 ** (n - 1):
        warnings.warn(
            f"field order {F.order} is below 2^(n-1) = {2 ** (n - 1)}; the "
            "two-form description of bracket-preserving maps is not "
            "guaranteed, proceeding since verification is self-certifying",
            stacklevel=3,
        )
    if n == 2 and F.characteristic == 2:
        warnings.warn(
            "characteristic 2 with n = 2 is outside the guaranteed range; "
            "proceeding since verification is self-certifying",
            stacklevel=3,
        )


def decompose_lie_automorphism(m: AlgebraMap) -> LieDecomposition:
    """Split a bracket-preserving bijection as sigma + c*tr(.)*I.

    The trace of psi(E(1,1)) determines c for each shape of sigma
    (conjugation has trace-1 unit images; negated transpose-conjugation
    trace -1), so both candidates are tried in a fixed order and fully
    verified; a candidate only survives if the recovered conjugator
    reproduces psi exactly.
    """
    n, F = m.n, m.field
    if F.characteristic and n % F.characteristic == 0:
        raise CharacteristicDividesN(
            f"characteristic {F.characteristic} divides n = {n}"
        )
    kind = classify_map(m)
    if kind is None:
        raise NotDecomposable("map does not preserve brackets or is not bijective")
    _warn_classification_hypotheses(m)
    if not m.twist.is_identity_kind:
        warnings.warn(
            "the residual trace functional inherits the map's twist; it is "
            "linear only up to that field automorphism",
            stacklevel=2,
        )
    eye = Matrix.identity(F, n)
    n_inv = F.inv(F.from_int(n))
    trace_e11 = m.image(1, 1).trace_raw()
    for eps, sigma_kind in ((F.one, "automorphism"), (F.neg(F.one), "negative-anti-automorphism")):
        c = F.mul(F.sub(trace_e11, eps), n_inv)
        # sigma's unit images: psi(E(i,j)) - c * delta_ij * I
        sigma_images = list(m.images)
        if not F.is_zero(c):
            shift = eye.scale(c)
            for i in range(n):
                sigma_images[i * n + i] = sigma_images[i * n + i] - shift
        try:
            if sigma_kind == "automorphism":
                candidate = AlgebraMap(n, F, tuple(sigma_images), m.twist)
                rec = (
                    recover_automorphism(candidate)
                    if m.twist.is_identity_kind
                    else recover_twisted_automorphism(candidate)
                )
            else:
                negated = tuple(-img for img in sigma_images)
                candidate = AlgebraMap(n, F, negated, m.twist)
                rec = (
                    recover_antiautomorphism(candidate)
                    if m.twist.is_identity_kind
                    else recover_twisted_antiautomorphism(candidate)
                )
        except (
            NotAnAutomorphism,
            NotAnAutomorphismImagePair,
            NotATwistedAutomorphism,
            NotAnAntiAutomorphism,
            NotATwistedAntiAutomorphism,
        ):
            continue
        decomposition = LieDecomposition(
            sigma_kind=sigma_kind,
            sigma_conjugator=rec.conjugator,
            tau_coefficient=Scalar(F, c),
            residual_zero=False,
            n=n,
            field=F,
            twist=m.twist,
        )
        sigma = decomposition.sigma_map()
        residual_zero = all(
            m.image(i, j)
            == sigma.image(i, j) + (eye.scale(c) if i == j else Matrix.zeros(F, n))
            for i in range(1, n + 1)
            for j in range(1, n + 1)
        )
        if residual_zero:
            return LieDecomposition(
                sigma_kind=sigma_kind,
                sigma_conjugator=rec.conjugator,
                tau_coefficient=Scalar(F, c),
                residual_zero=True,
                n=n,
                field=F,
                twist=m.twist,
            )
    raise NotDecomposable("neither decomposition branch verified")


def residual_trace_form_check(m: AlgebraMap, sigma: AlgebraMap) -> bool:
    """Check the trace shape of the residual functional tau = psi - sigma.

    Each unit residual psi(E(i,j)) - sigma(E(i,j)) must be a scalar
    multiple of the identity (ResidualNotScalar otherwise); the check
    returns whether those scalars vanish off the diagonal and agree on it,
    i.e. tau(X) depends on X only through tr(X).
    """
    if (m.n, m.field) != (sigma.n, sigma.field):
        raise MixedShapes("psi and sigma live on different ambient spaces")
    F = m.field
    tau = {}
    for i in range(1, m.n + 1):
        for j in range(1, m.n + 1):
            res = m.image(i, j) - sigma.image(i, j)
            c = scalar_multiple_of_identity(res)
            if c is None:
                raise ResidualNotScalar(
                    f"residual at unit ({i},{j}) is not a scalar multiple of I"
                )
            tau[i, j] = c
    ok_off = all(
        F.is_zero(tau[i, j])
        for i in range(1, m.n + 1)
        for j in range(1, m.n + 1)
        if i != j
    )
    ok_diag = all(tau[i, i] == tau[1, 1] for i in range(1, m.n + 1))
    return ok_off and ok_diag
