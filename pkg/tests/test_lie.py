"""Brackets, left-normed products, closure engine, expansion identity."""

import pytest
from hypothesis import given, strategies as st

from liemat import (
    Matrix,
    Subspace,
    bracket,
    centralizer_intersection_check,
    closure,
    cyclic_permutation,
    left_normed,
    leibniz_expansion_check,
    matrix_unit,
    upper_shift,
)
from liemat.errors import EmptySequence, MixedShapes

from support import GF5, GF7, Q, random_matrix, rng_for


def E(n, i, j, field=Q):
    return matrix_unit(field, n, i, j)


def test_bracket_examples():
    n = 4
    p = cyclic_permutation(Q, n)
    assert bracket(E(n, 1, 1), p) == E(n, 1, 2) - E(n, n, 1)
    x = random_matrix(Q, 3, 3, rng_for("self-bracket"))
    assert bracket(x, x).is_zero()
    for i, j in [(2, 3), (3, 2)]:
        assert bracket(E(3, i, 1), E(3, 1, j)) == E(3, i, j)


_gf5_matrices = st.builds(
    lambda entries: Matrix(GF5, [entries[:3], entries[3:6], entries[6:]]),
    st.lists(st.integers(0, 4), min_size=9, max_size=9),
)


@given(_gf5_matrices, _gf5_matrices, _gf5_matrices, st.integers(0, 4))
def test_bracket_bilinear_and_antisymmetric(x, y, z, c):
    assert bracket(x, y) == -bracket(y, x)
    assert bracket(x + y.scale(c), z) == bracket(x, z) + bracket(y, z).scale(c)


def test_jacobi_identity():
    for field in (Q, GF5):
        rng = rng_for("jacobi", repr(field))
        for _ in range(30):
            x, y, z = (random_matrix(field, 3, 3, rng) for _ in range(3))
            total = (
                bracket(bracket(x, y), z)
                + bracket(bracket(y, z), x)
                + bracket(bracket(z, x), y)
            )
            assert total.is_zero()


def test_left_normed_examples():
    x = random_matrix(Q, 3, 3, rng_for("left-normed"))
    assert left_normed([x]) == x
    y = random_matrix(Q, 3, 3, rng_for("left-normed-2"))
    assert left_normed([x, Matrix.identity(Q, 3), y]).is_zero()
    # direct-multiplication oracle: [E12, E21] = E11 - E22, then
    # (E11 - E22) E12 - E12 (E11 - E22) = E12 + E12 = 2 E12
    lhs = left_normed([E(2, 1, 2), E(2, 2, 1), E(2, 1, 2)])
    step = E(2, 1, 2) * E(2, 2, 1) - E(2, 2, 1) * E(2, 1, 2)
    oracle = step * E(2, 1, 2) - E(2, 1, 2) * step
    assert lhs == oracle == E(2, 1, 2).scale(2)
    with pytest.raises(EmptySequence):
        left_normed([])


def test_closure_two_generators_fill_everything():
    result = closure([cyclic_permutation(Q, 4), E(4, 1, 1)], "lie")
    assert result.subspace.dim == 16 and result.subspace.is_full
    assert result.product_kind == "lie"


def test_closure_of_single_idempotent_unit():
    result = closure([E(3, 1, 1)], "lie")
    assert result.subspace == Subspace.span([E(3, 1, 1)])
    assert result.subspace.dim == 1


def test_closure_lie_of_shift_and_low_unit():
    # every element has zero trace, so this cannot be the full algebra;
    # the fixpoint dimension (computed, then frozen) is 5
    result = closure([upper_shift(Q, 3), E(3, 2, 1)], "lie")
    assert all(b.trace_raw() == 0 for b in result.subspace.basis)
    assert result.subspace.dim == 5 < 9


def test_closure_associative_of_shift_and_low_unit():
    # the span of all words in {S, E21} has row support inside rows 1..n-1,
    # so it cannot be full for n >= 3; frozen fixpoint dims below
    for n, expected in [(2, 4), (3, 6), (4, 9), (5, 12)]:
        result = closure([upper_shift(Q, n), E(n, 2, 1)], "associative")
        assert result.subspace.dim == expected
        if n >= 3:
            assert not result.subspace.is_full


def test_generation_at_scale_with_transposed_unit():
    # {S, E(n,1)} generates associatively; its Lie closure is trace-zero
    for n in range(2, 7):
        field = Q if n <= 4 else GF5
        s = upper_shift(field, n)
        en1 = matrix_unit(field, n, n, 1)
        assoc = closure([s, en1], "associative")
        assert assoc.subspace.is_full
        lie_res = closure([s, en1], "lie")
        assert all(field.is_zero(b.trace_raw()) for b in lie_res.subspace.basis)
        assert lie_res.subspace.dim <= n * n - 1


def test_closure_monotone_and_lie_inside_associative():
    rng = rng_for("closure-monotone")
    for _ in range(5):
        gens = [random_matrix(GF5, 3, 3, rng) for _ in range(2)]
        extra = random_matrix(GF5, 3, 3, rng)
        smaller = closure(gens, "lie").subspace
        bigger = closure(gens + [extra], "lie").subspace
        assert bigger.contains_subspace(smaller)
        assoc = closure(gens, "associative").subspace
        assert assoc.contains_subspace(smaller)


def _word_span_oracle(gens, kind):
    """Independent oracle: span of all products (or left-normed brackets)
    of generator words, lengthened until one full level adds nothing.

    If no word of length L+1 leaves the span of shorter words, neither
    does any longer word, so stopping there is sound.
    """
    from liemat.subspaces import SpanBuilder

    field = gens[0].field
    n = gens[0].nrows
    builder = SpanBuilder(field, n * n)
    frontier = list(gens)
    for m in frontier:
        builder.insert(m.vectorize())
    while frontier:
        grew = []
        for w in frontier:
            for g in gens:
                nxt = [bracket(w, g)] if kind == "lie" else [w * g, g * w]
                for m in nxt:
                    if builder.insert(m.vectorize()):
                        grew.append(m)
        frontier = grew
    return Subspace(field, (n, n), builder.sorted_rows())


@pytest.mark.parametrize("kind", ["lie", "associative"])
def test_closure_matches_word_span_oracle(kind):
    cases = [[cyclic_permutation(GF5, 3), E(3, 1, 1, GF5)]]
    rng = rng_for("closure-oracle", kind)
    for _ in range(4):
        cases.append([random_matrix(GF5, 3, 3, rng) for _ in range(2)])
    for gens in cases:
        assert closure(gens, kind).subspace == _word_span_oracle(gens, kind)


def test_closure_rejects_mixed_input():
    with pytest.raises(MixedShapes):
        closure([], "lie")
    with pytest.raises(MixedShapes):
        closure([E(2, 1, 1), E(3, 1, 1)], "lie")


def test_leibniz_expansion_cases():
    rng = rng_for("leibniz")
    # k = 1 is the plain product rule
    for _ in range(10):
        r, s, x = (random_matrix(Q, 2, 2, rng) for _ in range(3))
        assert leibniz_expansion_check(r, s, [x])
    eye = Matrix.identity(Q, 3)
    xs = [random_matrix(Q, 3, 3, rng) for _ in range(3)]
    assert leibniz_expansion_check(eye, eye, xs)  # both sides vanish
    # k = 3 enumerates all 8 complementary index pairs
    for _ in range(10):
        r, s = random_matrix(GF7, 3, 3, rng), random_matrix(GF7, 3, 3, rng)
        xs = [random_matrix(GF7, 3, 3, rng) for _ in range(3)]
        assert leibniz_expansion_check(r, s, xs)
    with pytest.raises(EmptySequence):
        leibniz_expansion_check(eye, eye, [])


def test_centralizer_intersection_examples():
    s, e31 = upper_shift(Q, 3), E(3, 3, 1)
    intersection, central = centralizer_intersection_check([s, e31])
    assert central
    assert intersection == Subspace.span([Matrix.identity(Q, 3)])
    intersection, central = centralizer_intersection_check([Matrix.identity(Q, 3)])
    assert not central and intersection.is_full
    intersection, central = centralizer_intersection_check([E(2, 1, 1)])
    assert intersection.dim == 2 and not central
