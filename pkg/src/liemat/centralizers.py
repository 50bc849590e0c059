"""Lie centralizer chains, nilpotency indices, and dimension bounds.

The k-th Lie centralizer of a set H of matrices is

    L_k(H) = { r : [r, x1, ..., xk] = 0 for all choices of x_i in H },

using left-normed brackets.  The levels ascend, stabilize at some index
t bounded by the ambient dimension, and their union (the omega level)
equals the stabilized level.  H may be given either as a finite set of
matrices or as a subspace; in the subspace case the brackets are
multilinear in each slot, so quantifying over a basis is exact.

Levels are computed iteratively: r lies in L_{k+1}(H) exactly when every
[r, h] lies in L_k(H), so each level is a fold of linear preimages under
the maps r -> [r, h].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import (
    EnumerationTooLarge,
    InvalidComposition,
    MixedShapes,
    PreconditionViolated,
)
from .lie import bracket, closure, left_normed
from .matrices import Matrix, matrix_unit
from .subspaces import Subspace, preimage

SubsetLike = Union[Sequence[Matrix], Subspace]


def _members(H: SubsetLike) -> list[Matrix]:
    """Matrices to quantify over: the elements of a finite set, or a basis
    of a subspace (sufficient by multilinearity of the bracket)."""
    if isinstance(H, Subspace):
        return H.basis
    mats = list(H)
    if not mats:
        raise MixedShapes("H must contain at least one matrix")
    return mats


def _ambient_of(mats: Sequence[Matrix]):
    field = mats[0].field
    n = mats[0].nrows
    for m in mats:
        if m.field != field or not m.is_square or m.nrows != n:
            raise MixedShapes("H does not live in one square matrix space")
    return field, n


def _restrict_by_ad(domain: Subspace, h: Matrix, target: Subspace) -> Subspace:
    """{v in domain : [v, h] in target}; one kernel call."""
    basis = domain.basis
    images = [bracket(b, h) for b in basis]
    return preimage(basis, images, target)


def _next_level(members: Sequence[Matrix], full: Subspace, prev: Subspace | None) -> Subspace:
    """prev=None computes L_1; otherwise the level above prev."""
    target = prev if prev is not None else Subspace.zero(full.field, full.shape)
    level = full
    for h in members:
        level = _restrict_by_ad(level, h, target)
    return level


def _levels_until(members, field, n, upto: int) -> tuple[list[Subspace], int | None]:
    """Levels L_1..: stops after the first repeat or after `upto` levels.

    Returns (levels, t) where t is the 1-based stabilization index if the
    repeat was reached (levels then ends with L_{t+1} = L_t).
    """
    full = Subspace.full(field, (n, n))
    levels = [_next_level(members, full, None)]
    while len(levels) < upto:
        nxt = _next_level(members, full, levels[-1])
        levels.append(nxt)
        if nxt == levels[-2]:
            return levels, len(levels) - 1
    return levels, None


def centralizer_step(H: SubsetLike, target: Subspace) -> Subspace:
    """One chain iteration: {r : [r, h] in target for every h in H}.

    Feeding a level back in computes the level above it; useful for
    checking persistence past the stabilization point directly.
    """
    members = _members(H)
    field, n = _ambient_of(members)
    return _next_level(members, Subspace.full(field, (n, n)), target)


def lie_centralizer(H: SubsetLike, k: int) -> Subspace:
    """The k-th Lie centralizer of H."""
    if k < 1:
        raise ValueError("centralizer index must be at least 1")
    members = _members(H)
    field, n = _ambient_of(members)
    levels, t = _levels_until(members, field, n, k)
    return levels[min(k, len(levels)) - 1]


@dataclass(frozen=True)
class CentralizerChain:
    """The ascending centralizer levels with their stabilization data.

    ``levels[i]`` is L_{i+1}(H); the list runs through the first repeated
    level, so ``levels[t] == levels[t-1]`` witnesses stabilization at the
    1-based index ``stabilization_index = t``.
    """

    levels: tuple[Subspace, ...]
    stabilization_index: int
    omega: Subspace

    def level(self, k: int) -> Subspace:
        """L_k(H) for any k >= 1 (constant from the stabilization on)."""
        if k < 1:
            raise ValueError("centralizer index must be at least 1")
        return self.levels[min(k, len(self.levels)) - 1]


def centralizer_chain(H: SubsetLike, max_k: int | None = None) -> CentralizerChain:
    """Compute levels until two consecutive ones coincide.

    Stabilization is guaranteed no later than the ambient dimension n^2,
    which is the default cap.
    """
    members = _members(H)
    field, n = _ambient_of(members)
    cap = (n * n if max_k is None else max_k) + 1
    levels, t = _levels_until(members, field, n, cap)
    if t is None:
        raise ValueError(
            f"no stabilization within max_k={cap - 1} levels; "
            f"the chain is guaranteed to stabilize by n^2 = {n * n}"
        )
    return CentralizerChain(
        levels=tuple(levels), stabilization_index=t, omega=levels[t - 1]
    )


def permuted_insertion_check(r: Matrix, xs: Sequence[Matrix], j: int) -> bool:
    """Evaluate [x1, ..., xj, r, x_{j+1}, ..., xk] directly and report
    whether it vanishes.

    Requires r in L_k({distinct elements of xs}) first -- membership in
    the k-th centralizer of any superset implies that -- and raises
    PreconditionViolated otherwise.  Under the precondition the result is
    always True; the operation exists as an executable witness.
    """
    k = len(xs)
    if not 1 <= j <= k:
        raise ValueError(f"insertion position {j} outside [1, {k}]")
    distinct: list[Matrix] = []
    for x in xs:
        if x not in distinct:
            distinct.append(x)
    if not lie_centralizer(distinct, k).contains(r):
        raise PreconditionViolated(f"r is not in the {k}-th Lie centralizer")
    value = left_normed([*xs[:j], r, *xs[j:]])
    return value.is_zero()


def centralizer_product_check(
    H: SubsetLike,
    p: int,
    q: int,
    samples: int | None = None,
    rng=None,
) -> bool:
    """Check that products of L_p(H) and L_q(H) land in L_{p+q-1}(H).

    Exhaustive over basis pairs by default, which settles the statement
    for the whole subspaces by bilinearity; ``samples`` switches to that
    many random pairs of subspace elements (for larger ambients).
    """
    if p < 1 or q < 1:
        raise ValueError("levels must be at least 1")
    members = _members(H)
    field, n = _ambient_of(members)
    levels, _ = _levels_until(members, field, n, p + q - 1)

    def level(k: int) -> Subspace:
        return levels[min(k, len(levels)) - 1]

    lp, lq, target = level(p), level(q), level(p + q - 1)
    if samples is None:
        pairs = itertools.product(lp.basis, lq.basis)
    else:
        if rng is None:
            raise ValueError("sampled mode needs an rng")

        def _random_element(space: Subspace) -> Matrix:
            acc = Matrix.zeros(field, n)
            for b in space.basis:
                acc = acc + b.scale(field.random_scalar(rng))
            return acc

        pairs = (
            (_random_element(lp), _random_element(lq)) for _ in range(samples)
        )
    return all(target.contains(r * s) for r, s in pairs)


_HEREDITARY_PROPS = {
    "D": "D",
    "distinct": "D",
    "L": "L",
    "independent": "L",
}

ENUMERATION_GUARD = 10**6


def hereditary_centralizer(H: Sequence[Matrix], k: int, prop: str) -> Subspace:
    """Centralizer quantified only over k-tuples from a finite H that
    satisfy a hereditary property: pairwise-distinct entries ("D") or
    linear independence of the tuple ("L").

    These properties are not multilinear, so there is no basis reduction:
    the tuples are enumerated directly, guarded against blowup.  With no
    admissible tuple the quantification is vacuous and the full ambient
    space is returned.
    """
    if isinstance(H, Subspace):
        raise TypeError("hereditary centralizers are defined for finite sets only")
    try:
        prop = _HEREDITARY_PROPS[prop]
    except KeyError:
        raise ValueError(f"unknown hereditary property {prop!r}") from None
    if k < 1:
        raise ValueError("centralizer index must be at least 1")
    members = _members(H)
    field, n = _ambient_of(members)
    if len(members) ** k > ENUMERATION_GUARD:
        raise EnumerationTooLarge(
            f"{len(members)}^{k} tuples exceed the guard of {ENUMERATION_GUARD}"
        )

    def admissible(tup: tuple[Matrix, ...]) -> bool:
        if prop == "D":
            return all(
                tup[i] != tup[j] for i in range(k) for j in range(i + 1, k)
            )
        stacked = Matrix._make(field, tuple(x.vectorize() for x in tup))
        return stacked.rank() == k

    space = Subspace.full(field, (n, n))
    zero = Subspace.zero(field, (n, n))
    for tup in itertools.product(members, repeat=k):
        if not admissible(tup):
            continue
        basis = space.basis
        images = [left_normed([b, *tup]) for b in basis]
        space = preimage(basis, images, zero)
    return space


# ---------------------------------------------------------------------------
# nilpotency reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundComparison:
    """Recorded (never asserted) comparison against the dimension bounds."""

    ambient_size: int
    dim: int
    measured_index: int | None
    index_dim_bound: int | None
    conjectured_bound: int
    within_index_bound: bool | None
    within_conjectured_bound: bool | None


@dataclass(frozen=True)
class NilpotencyReport:
    subject: SubsetLike
    is_lie_nilpotent: bool
    index: int | None
    is_omega_lie_nilpotent: bool
    dim: int
    chain: CentralizerChain
    bound_comparison: BoundComparison


def nilpotency_report(subject: SubsetLike) -> NilpotencyReport:
    """Least k with H contained in L_k(H), if any.

    The search is complete: levels stabilize by the ambient dimension d,
    and containment in the omega level coincides with Lie-nilpotency of
    some index <= d, so "not found by stabilization" means "not
    Lie-nilpotent".
    """
    members = _members(subject)
    field, n = _ambient_of(members)
    chain = centralizer_chain(subject)
    index: int | None = None
    for k in range(1, chain.stabilization_index + 1):
        if all(chain.levels[k - 1].contains(m) for m in members):
            index = k
            break
    is_omega = all(chain.omega.contains(m) for m in members)
    if (index is not None) != is_omega:
        raise AssertionError("omega-nilpotency must coincide with bounded index")
    if isinstance(subject, Subspace):
        dim = subject.dim
    else:
        dim = Subspace.span(members).dim
    g_bound = (
        nilpotent_subalgebra_dim_bound(n, index) if index is not None else None
    )
    conj = conjectured_dim_bound(n)
    bounds = BoundComparison(
        ambient_size=n,
        dim=dim,
        measured_index=index,
        index_dim_bound=g_bound,
        conjectured_bound=conj,
        within_index_bound=(dim <= g_bound) if g_bound is not None else None,
        within_conjectured_bound=(dim <= conj) if is_omega else None,
    )
    return NilpotencyReport(
        subject=subject,
        is_lie_nilpotent=index is not None,
        index=index,
        is_omega_lie_nilpotent=is_omega,
        dim=dim,
        chain=chain,
        bound_comparison=bounds,
    )


# ---------------------------------------------------------------------------
# dimension bounds and the extremal construction
# ---------------------------------------------------------------------------

def nilpotent_subalgebra_dim_bound(n: int, k: int) -> int:
    """Sharp upper bound for the dimension of a Lie-nilpotent subalgebra
    of index k inside the n-by-n matrices:

        (n^2 - (k+1-r) q^2 - r (q+1)^2) / 2 + 1,   n = (k+1) q + r.

    Equals the maximum of (n^2 - sum of part squares)/2 + 1 over all
    splittings of n into k+1 nonnegative parts (the balanced splitting
    maximizes).
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    q, r = divmod(n, k + 1)
    num = n * n - (k + 1 - r) * q * q - r * (q + 1) * (q + 1)
    if num % 2:
        raise AssertionError("bound numerator must be even")
    return num // 2 + 1


def conjectured_dim_bound(n: int) -> int:
    """Conjectural cap 1 + (n^2 - n)/2 for omega-Lie-nilpotent sub-Lie-
    algebras; recorded as evidence only, never asserted as a theorem."""
    if n < 1:
        raise ValueError("need n >= 1")
    return 1 + (n * n - n) // 2


def balanced_parts(n: int, pieces: int) -> tuple[int, ...]:
    """n split into `pieces` nearly equal positive parts (zeros dropped)."""
    if n < 1 or pieces < 1:
        raise ValueError("need n >= 1 and pieces >= 1")
    q, r = divmod(n, pieces)
    parts = (q + 1,) * r + (q,) * (pieces - r)
    return tuple(p for p in parts if p > 0)


def extremal_block_algebra(n: int, parts: Sequence[int], field=None) -> Subspace:
    """Scalar multiples of the identity plus all strictly-upper-block
    matrix units for the given diagonal block sizes.

    This realizes the dimension (n^2 - sum of part squares)/2 + 1 that the
    closed-form bound predicts for the matching index.
    """
    from .fields import Rationals

    parts = tuple(parts)
    if not parts or any((not isinstance(p, int)) or p < 1 for p in parts) or sum(parts) != n:
        raise InvalidComposition(f"{parts!r} is not a positive composition of {n}")
    if field is None:
        field = Rationals()
    gens = [Matrix.identity(field, n)]
    starts = [0]
    for p in parts:
        starts.append(starts[-1] + p)
    for bi in range(len(parts)):
        for bj in range(bi + 1, len(parts)):
            for a in range(starts[bi], starts[bi + 1]):
                for b in range(starts[bj], starts[bj + 1]):
                    gens.append(matrix_unit(field, n, a + 1, b + 1))
    return Subspace.span(gens)


# ---------------------------------------------------------------------------
# recorded-evidence probes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClosureIndexProbe:
    """Observed data for one subspace V: its own nilpotency index, and the
    dimension and index of the associative subalgebra V generates.

    Whether the generated subalgebra's index admits a bound f(k, d) is an
    open question; these records are evidence, not a claim.
    """

    ambient_dim: int
    subspace_dim: int
    subspace_index: int | None
    closure_dim: int
    closure_index: int | None


def associative_closure_probe(V: Subspace) -> ClosureIndexProbe:
    base = nilpotency_report(V)
    generated = closure(V.basis, "associative").subspace
    gen_report = nilpotency_report(generated)
    return ClosureIndexProbe(
        ambient_dim=V.ambient_dim,
        subspace_dim=V.dim,
        subspace_index=base.index,
        closure_dim=generated.dim,
        closure_index=gen_report.index,
    )


def bounds_table(max_n: int) -> list[tuple[int, int, int, int]]:
    """Rows (n, k, index-k dimension bound, conjectured omega bound)."""
    return [
        (n, k, nilpotent_subalgebra_dim_bound(n, k), conjectured_dim_bound(n))
        for n in range(1, max_n + 1)
        for k in range(1, n + 1)
    ]
