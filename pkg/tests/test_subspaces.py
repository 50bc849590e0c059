"""Subspace lattice: canonical spans, membership, sum/intersection, preimage."""

import itertools

import pytest

from liemat import Matrix, Subspace, bracket, kernel, matrix_unit, preimage
from liemat.errors import MixedShapes

from support import GF5, Q, mat, random_matrix, rng_for


def E(n, i, j, field=Q):
    return matrix_unit(field, n, i, j)


def diag_space():
    return Subspace.span([E(2, 1, 1), E(2, 2, 2)])


def test_span_examples():
    empty = Subspace.span([], field=Q, shape=(2, 2))
    assert empty.dim == 0 and empty == Subspace.zero(Q, (2, 2))
    dependent = Subspace.span([E(2, 1, 2), E(2, 1, 2).scale(2)])
    assert dependent.dim == 1
    assert diag_space().dim == 2
    assert diag_space().contains(mat(Q, [[3, 0], [0, -7]]))
    assert not diag_space().contains(E(2, 1, 2))


def test_span_needs_ambient_when_empty():
    with pytest.raises(MixedShapes):
        Subspace.span([])


def test_span_rejects_mixed_shapes():
    with pytest.raises(MixedShapes):
        Subspace.span([E(2, 1, 1), E(3, 1, 1)])
    with pytest.raises(MixedShapes):
        Subspace.span([E(2, 1, 1)], field=GF5, shape=(2, 2))
    with pytest.raises(MixedShapes):
        Subspace.span([E(2, 1, 1)], field=Q, shape=(3, 3))


def test_canonicality_under_permutation_and_rescaling():
    rng = rng_for("canonical")
    gens = [random_matrix(Q, 2, 3, rng) for _ in range(4)]
    reference = Subspace.span(gens)
    for perm in itertools.permutations(range(4)):
        assert Subspace.span([gens[i] for i in perm]) == reference
    scaled = [g.scale("3/2") for g in gens]
    assert Subspace.span(scaled) == reference


def test_contains_every_generator():
    rng = rng_for("contains")
    gens = [random_matrix(GF5, 3, 3, rng) for _ in range(5)]
    space = Subspace.span(gens)
    assert all(space.contains(g) for g in gens)


def test_lattice_examples():
    diag = diag_space()
    assert diag.intersect(diag) == diag
    swap_plus_identity = Subspace.span(
        [mat(Q, [[0, 1], [1, 0]]), Matrix.identity(Q, 2)]
    )
    # diagonals meet span{swap, I} exactly in the scalars
    inter = diag.intersect(swap_plus_identity)
    assert inter == Subspace.span([Matrix.identity(Q, 2)])
    assert Subspace.span([E(2, 1, 1)]).sum(Subspace.span([E(2, 2, 2)])) == diag


def test_dimension_formula_on_random_pairs():
    for field in (Q, GF5):
        rng = rng_for("dim-formula", repr(field))
        for _ in range(25):
            s = Subspace.span(
                [random_matrix(field, 2, 2, rng) for _ in range(rng.randint(1, 3))]
            )
            t = Subspace.span(
                [random_matrix(field, 2, 2, rng) for _ in range(rng.randint(1, 3))]
            )
            assert s.dim + t.dim == s.sum(t).dim + s.intersect(t).dim


def test_sum_and_intersection_bounds():
    rng = rng_for("lattice-bounds")
    s = Subspace.span([random_matrix(GF5, 2, 2, rng) for _ in range(2)])
    t = Subspace.span([random_matrix(GF5, 2, 2, rng) for _ in range(2)])
    union = s.sum(t)
    meet = s.intersect(t)
    assert union.contains_subspace(s) and union.contains_subspace(t)
    assert s.contains_subspace(meet) and t.contains_subspace(meet)


def test_kernel_is_canonical_subspace():
    k = kernel(mat(Q, [[1, 2], [2, 4]]))
    assert k.shape == (2, 1) and k.dim == 1
    assert k.contains(mat(Q, [[-2], [1]]))


def test_preimage_examples():
    units = [E(2, i, j) for i in (1, 2) for j in (1, 2)]
    full = Subspace.full(Q, (2, 2))
    zero = Subspace.zero(Q, (2, 2))
    e11 = E(2, 1, 1)
    ad_images = [bracket(u, e11) for u in units]
    # target the full space: no constraint at all
    assert preimage(units, ad_images, full) == full
    # identity map: preimage of T is T itself (domain = full)
    diag = diag_space()
    assert preimage(units, units, diag) == diag
    # ad(E11) into zero: the diagonal matrices
    assert preimage(units, ad_images, zero) == diag


def test_preimage_respects_restricted_domain():
    # domain = span{E12}: [E12, E11] = -E12 is never diagonal except 0
    dom = [E(2, 1, 2)]
    images = [bracket(E(2, 1, 2), E(2, 1, 1))]
    out = preimage(dom, images, Subspace.zero(Q, (2, 2)))
    assert out.dim == 0


def test_subspace_json_identity_independent_of_generator_presentation():
    rng = rng_for("presentation")
    gens = [random_matrix(Q, 2, 2, rng) for _ in range(3)]
    s1 = Subspace.span(gens)
    s2 = Subspace.span(gens + [gens[0] + gens[1]])
    assert s1 == s2 and hash(s1) == hash(s2)
