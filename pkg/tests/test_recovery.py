"""Conjugator recovery: roundtrips, classification, decomposition."""

import pytest

from liemat import (
    AlgebraMap,
    FieldAutomorphism,
    Matrix,
    basis_unit_vector,
    classify_map,
    conjugation_map,
    conjugator_from_images,
    decompose_lie_automorphism,
    matrix_unit,
    recover_antiautomorphism,
    recover_automorphism,
    recover_twisted_antiautomorphism,
    recover_twisted_automorphism,
    residual_trace_form_check,
    scalar_multiple_of_identity,
    symplectic_involution,
    transpose_conjugation_map,
    upper_shift,
)
from liemat.errors import (
    CharacteristicDividesN,
    NotAnAntiAutomorphism,
    NotAnAutomorphism,
    NotAnAutomorphismImagePair,
    NotATwistedAutomorphism,
    NotDecomposable,
    ResidualNotScalar,
)

from support import GF4, GF5, GF7, GF9, Q, mat, random_invertible, rng_for


def E(n, i, j, field=Q):
    return matrix_unit(field, n, i, j)


def identity_map(n, field=Q):
    return AlgebraMap.from_function(n, field, lambda u: u)


def transpose_map(n, field=Q):
    return AlgebraMap.from_function(n, field, lambda u: u.transpose())


def trace_shift_map(n, field=Q):
    eye = Matrix.identity(field, n)
    return AlgebraMap.from_function(n, field, lambda u: u + eye.scale(u.trace_raw()))


def test_conjugator_from_identity_images():
    s, e31 = upper_shift(Q, 3), E(3, 3, 1)
    result = conjugator_from_images(s, e31, 3)
    assert result.conjugator == Matrix.identity(Q, 3)
    assert result.kernel_vector == basis_unit_vector(Q, 3, 1)
    assert result.verified


def test_conjugator_from_hand_computed_images():
    # conjugation by B = [[1,1],[0,1]]: phi(S) = S (they commute);
    # phi(E21) = (I+E12) E21 (I-E12) = E21 + E11 - E22 - E12
    phi_s = E(2, 1, 2)
    phi_e21 = mat(Q, [[1, -1], [1, -1]])
    result = conjugator_from_images(phi_s, phi_e21, 2)
    assert result.verified
    b = mat(Q, [[1, 1], [0, 1]])
    assert scalar_multiple_of_identity(b.inverse() * result.conjugator) is not None
    # the deterministic kernel choice lands exactly on B here
    assert result.conjugator == b


def test_conjugator_from_images_rejects_garbage():
    with pytest.raises(NotAnAutomorphismImagePair):
        # shift images of a non-automorphism: I - M has zero kernel
        conjugator_from_images(Matrix.zeros(Q, 3), Matrix.zeros(Q, 3), 3)


def test_conjugator_roundtrip_gf7():
    rng = rng_for("roundtrip-gf7")
    for _ in range(10):
        b = random_invertible(GF7, 4, rng)
        bm = conjugation_map(b)
        result = conjugator_from_images(
            bm.image(1, 2) + bm.image(2, 3) + bm.image(3, 4), bm.image(4, 1), 4
        )
        assert result.verified


def test_recover_automorphism_identity():
    result = recover_automorphism(identity_map(3))
    assert result.verified and result.conjugator == Matrix.identity(Q, 3)


def test_recover_automorphism_roundtrip_up_to_scalar():
    rng = rng_for("roundtrip-q3")
    for _ in range(5):
        b = random_invertible(Q, 3, rng)
        result = recover_automorphism(conjugation_map(b))
        assert result.verified
        assert scalar_multiple_of_identity(b.inverse() * result.conjugator) is not None


def test_recover_automorphism_rejects_transpose():
    with pytest.raises(NotAnAutomorphism):
        recover_automorphism(transpose_map(3))


def test_recover_automorphism_rejects_twisted_input():
    twisted = conjugation_map(
        random_invertible(GF4, 2, rng_for("twist-reject")),
        FieldAutomorphism.frobenius(1),
    )
    with pytest.raises(NotAnAutomorphism):
        recover_automorphism(twisted)


def test_recover_twisted_reduces_to_plain_on_identity_twist():
    b = random_invertible(GF5, 3, rng_for("twist-ident"))
    plain = recover_automorphism(conjugation_map(b))
    twisted = recover_twisted_automorphism(
        conjugation_map(b, FieldAutomorphism.identity())
    )
    assert plain.conjugator == twisted.conjugator


@pytest.mark.parametrize("field,n", [(GF4, 2), (GF9, 3)], ids=["GF4-n2", "GF9-n3"])
def test_twisted_roundtrips(field, n):
    frob = FieldAutomorphism.frobenius(1)
    rng = rng_for("twisted", repr(field), n)
    for _ in range(8):
        b = random_invertible(field, n, rng)
        auto = recover_twisted_automorphism(conjugation_map(b, frob))
        assert auto.verified
        assert scalar_multiple_of_identity(b.inverse() * auto.conjugator) is not None
        anti = recover_twisted_antiautomorphism(transpose_conjugation_map(b, frob))
        assert anti.verified
        assert scalar_multiple_of_identity(b.inverse() * anti.conjugator) is not None


def test_twisted_rejects_wrong_shape():
    b = random_invertible(GF4, 2, rng_for("twist-wrong"))
    frob = FieldAutomorphism.frobenius(1)
    with pytest.raises(NotATwistedAutomorphism):
        recover_twisted_automorphism(transpose_conjugation_map(b, frob))


def test_recover_antiautomorphism_transpose_m2():
    result = recover_antiautomorphism(transpose_map(2))
    assert result.conjugator == Matrix.identity(Q, 2)
    assert result.kernel_vector == basis_unit_vector(Q, 2, 1)
    assert result.verified


@pytest.mark.parametrize("field", [Q, GF7], ids=repr)
def test_recover_symplectic_involution(field):
    m = AlgebraMap.from_function(8, field, symplectic_involution)
    # known intermediate values along the construction
    phi_st = symplectic_involution(upper_shift(field, 8).transpose())
    assert phi_st**7 == -E(8, 5, 4, field)
    assert phi_st**7 * symplectic_involution(E(8, 1, 8, field)) == E(8, 5, 5, field)
    result = recover_antiautomorphism(m)
    assert result.verified
    assert result.kernel_vector == basis_unit_vector(field, 8, 5)
    minus_one = field.neg(field.one)
    expected = Matrix(
        field,
        [
            [field.zero] * 4
            + [minus_one if j == i else field.zero for j in range(4)]
            for i in range(4)
        ]
        + [
            [field.one if j == i else field.zero for j in range(4)]
            + [field.zero] * 4
            for i in range(4)
        ],
    )
    assert result.conjugator == expected


def test_recover_antiautomorphism_rejects_automorphism():
    with pytest.raises(NotAnAntiAutomorphism):
        recover_antiautomorphism(identity_map(3))


def test_scalar_ambiguity_of_conjugators():
    rng = rng_for("scalar-ambiguity")
    b = random_invertible(Q, 3, rng)
    m = conjugation_map(b)
    for lam in ("2", "-1", "7/3"):
        scaled = b.scale(lam)
        assert conjugation_map(scaled).images == m.images


def test_kernel_dimension_is_one_for_genuine_maps():
    rng = rng_for("kernel-dim")
    for field, n in [(Q, 3), (GF5, 4)]:
        b = random_invertible(field, n, rng)
        m = conjugation_map(b)
        phi_s = sum(
            (m.image(i, i + 1) for i in range(2, n)), m.image(1, 2)
        )
        big_m = phi_s ** (n - 1) * m.image(n, 1)
        assert (Matrix.identity(field, n) - big_m).rank() == n - 1


def test_classification():
    assert classify_map(identity_map(2)) == "automorphism"
    assert classify_map(transpose_map(2)) == "anti-automorphism"
    assert classify_map(trace_shift_map(2)) == "lie-automorphism"
    rng = rng_for("classify")
    b = random_invertible(GF5, 3, rng)
    assert classify_map(conjugation_map(b)) == "automorphism"
    assert classify_map(transpose_conjugation_map(b)) == "anti-automorphism"
    # a non-bijective additive map classifies as nothing
    squash = AlgebraMap.from_function(2, Q, lambda u: Matrix.zeros(Q, 2))
    assert classify_map(squash) is None
    # bijective but structureless
    scramble = AlgebraMap.from_function(
        2, Q, lambda u: u + u.transpose().scale(3) + E(2, 1, 1).scale(u.trace_raw())
    )
    assert classify_map(scramble) is None


def test_decompose_identity():
    dec = decompose_lie_automorphism(identity_map(2))
    assert dec.sigma_kind == "automorphism"
    assert scalar_multiple_of_identity(dec.sigma_conjugator) is not None
    assert dec.tau_coefficient == Q.scalar(0)
    assert dec.residual_zero


@pytest.mark.parametrize("n", [2, 3])
def test_decompose_trace_shift(n):
    psi = trace_shift_map(n)
    dec = decompose_lie_automorphism(psi)
    assert dec.sigma_kind == "automorphism"
    assert dec.tau_coefficient == Q.scalar(1)
    assert dec.residual_zero
    sigma = dec.sigma_map()
    assert sigma.images == identity_map(n).images
    assert residual_trace_form_check(psi, sigma)


def test_decompose_negative_transpose():
    psi = AlgebraMap.from_function(3, Q, lambda u: -u.transpose())
    dec = decompose_lie_automorphism(psi)
    assert dec.sigma_kind == "negative-anti-automorphism"
    assert dec.sigma_conjugator == Matrix.identity(Q, 3)
    assert dec.tau_coefficient == Q.scalar(0)
    assert dec.residual_zero
    assert residual_trace_form_check(psi, dec.sigma_map())


def test_decompose_rejects_non_lie_maps():
    scramble = AlgebraMap.from_function(2, Q, lambda u: u + u.transpose().scale(3))
    with pytest.raises(NotDecomposable):
        decompose_lie_automorphism(scramble)


def test_decompose_characteristic_guard():
    psi = identity_map(5, GF5)
    with pytest.raises(CharacteristicDividesN):
        decompose_lie_automorphism(psi)


def test_decompose_warns_on_small_fields():
    from liemat import PrimeField

    gf2 = PrimeField(2)
    psi = identity_map(3, gf2)  # order 2 < 2^(3-1)
    with pytest.warns(UserWarning):
        dec = decompose_lie_automorphism(psi)
    assert dec.sigma_kind == "automorphism"


def test_residual_trace_checks():
    psi = trace_shift_map(2)
    assert residual_trace_form_check(psi, identity_map(2))
    # tau = tr: off-diagonal units map to 0, diagonal units agree
    with pytest.raises(ResidualNotScalar):
        residual_trace_form_check(transpose_map(2), identity_map(2))
    # residuals of brackets vanish: tau(x y - y x) = c tr([x, y]) = 0
    rng = rng_for("tau-brackets")
    for _ in range(10):
        x = random_invertible(Q, 2, rng)
        y = random_invertible(Q, 2, rng)
        commutator = x * y - y * x
        residual = psi.apply(commutator) - commutator
        assert residual.is_zero()


def test_twisted_roundtrip_higher_frobenius_power():
    from liemat import ExtensionField

    gf81 = ExtensionField(3, 4)
    for e in (1, 2, 3):
        frob = FieldAutomorphism.frobenius(e)
        rng = rng_for("gf81-twist", e)
        b = random_invertible(gf81, 2, rng)
        auto = recover_twisted_automorphism(conjugation_map(b, frob))
        assert auto.verified
        assert scalar_multiple_of_identity(b.inverse() * auto.conjugator) is not None


def test_decompose_with_nontrivial_conjugator():
    b = random_invertible(Q, 3, rng_for("decompose-conj"))
    b_inv = b.inverse()
    eye = Matrix.identity(Q, 3)
    psi = AlgebraMap.from_function(
        3, Q, lambda u: b * u * b_inv + eye.scale(u.trace_raw())
    )
    dec = decompose_lie_automorphism(psi)
    assert dec.sigma_kind == "automorphism"
    assert dec.tau_coefficient == Q.scalar(1)
    assert dec.residual_zero
    assert scalar_multiple_of_identity(b_inv * dec.sigma_conjugator) is not None
    assert residual_trace_form_check(psi, dec.sigma_map())


def test_decompose_negative_anti_with_conjugator_and_coefficient():
    b = random_invertible(Q, 3, rng_for("decompose-anti-conj"))
    b_inv = b.inverse()
    eye = Matrix.identity(Q, 3)
    psi = AlgebraMap.from_function(
        3, Q, lambda u: -(b * u.transpose() * b_inv) + eye.scale(u.trace_raw() * 2)
    )
    dec = decompose_lie_automorphism(psi)
    assert dec.sigma_kind == "negative-anti-automorphism"
    assert dec.tau_coefficient == Q.scalar(2)
    assert dec.residual_zero
    assert scalar_multiple_of_identity(b_inv * dec.sigma_conjugator) is not None
    assert residual_trace_form_check(psi, dec.sigma_map())


def test_decompose_twisted_automorphism():
    frob = FieldAutomorphism.frobenius(1)
    b = random_invertible(GF9, 2, rng_for("decompose-twisted"))
    psi = conjugation_map(b, frob)
    with pytest.warns(UserWarning):
        dec = decompose_lie_automorphism(psi)
    assert dec.sigma_kind == "automorphism"
    assert dec.tau_coefficient == GF9.scalar(0)
    assert dec.residual_zero
    assert scalar_multiple_of_identity(b.inverse() * dec.sigma_conjugator) is not None


def test_roundtrip_wide_grid_small_count():
    # broad-coverage version of the roundtrip invariant (full 200-sample
    # run on the acceptance grid lives in test_acceptance)
    for field in (Q, GF5, GF7, GF4):
        for n in (2, 3, 4, 5, 6):
            rng = rng_for("wide", repr(field), n)
            for _ in range(3):
                b = random_invertible(field, n, rng)
                auto = recover_automorphism(conjugation_map(b))
                assert auto.verified
                assert (
                    scalar_multiple_of_identity(b.inverse() * auto.conjugator)
                    is not None
                )
                anti = recover_antiautomorphism(transpose_conjugation_map(b))
                assert anti.verified
                assert (
                    scalar_multiple_of_identity(b.inverse() * anti.conjugator)
                    is not None
                )
