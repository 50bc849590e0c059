"""Exact matrix Lie-algebra computations over the rationals and small
finite fields: subalgebra closures, Lie centralizer chains and nilpotency
bounds, and constructive conjugator recovery for (anti-)automorphisms and
bracket-preserving maps."""

from . import errors
from .centralizers import (
    BoundComparison,
    CentralizerChain,
    ClosureIndexProbe,
    NilpotencyReport,
    associative_closure_probe,
    balanced_parts,
    bounds_table,
    centralizer_chain,
    centralizer_product_check,
    centralizer_step,
    conjectured_dim_bound,
    extremal_block_algebra,
    hereditary_centralizer,
    lie_centralizer,
    nilpotency_report,
    nilpotent_subalgebra_dim_bound,
    permuted_insertion_check,
)
from .fields import (
    ExtensionField,
    Field,
    FieldAutomorphism,
    PrimeField,
    Rationals,
    Scalar,
    apply_field_automorphism,
    is_irreducible,
    is_prime,
    smallest_irreducible,
)
from .lie import (
    ClosureResult,
    bracket,
    centralizer_intersection_check,
    closure,
    leibniz_expansion_check,
    left_normed,
)
from .matrices import (
    Matrix,
    basis_unit_vector,
    cyclic_permutation,
    matrix_unit,
    scalar_multiple_of_identity,
    symplectic_involution,
    upper_shift,
)
from .recovery import (
    AlgebraMap,
    LieDecomposition,
    RecoveryResult,
    classify_map,
    conjugation_map,
    conjugator_from_images,
    decompose_lie_automorphism,
    recover_antiautomorphism,
    recover_automorphism,
    recover_twisted_antiautomorphism,
    recover_twisted_automorphism,
    residual_trace_form_check,
    transpose_conjugation_map,
)
from .subspaces import Subspace, kernel, preimage

__version__ = "0.1.0"

__all__ = [
    "AlgebraMap",
    "BoundComparison",
    "CentralizerChain",
    "ClosureIndexProbe",
    "ClosureResult",
    "ExtensionField",
    "Field",
    "FieldAutomorphism",
    "LieDecomposition",
    "Matrix",
    "NilpotencyReport",
    "PrimeField",
    "Rationals",
    "RecoveryResult",
    "Scalar",
    "Subspace",
    "apply_field_automorphism",
    "associative_closure_probe",
    "balanced_parts",
    "basis_unit_vector",
    "bounds_table",
    "bracket",
    "centralizer_chain",
    "centralizer_intersection_check",
    "centralizer_product_check",
    "centralizer_step",
    "classify_map",
    "closure",
    "conjectured_dim_bound",
    "conjugation_map",
    "conjugator_from_images",
    "cyclic_permutation",
    "decompose_lie_automorphism",
    "errors",
    "extremal_block_algebra",
    "hereditary_centralizer",
    "is_irreducible",
    "is_prime",
    "kernel",
    "left_normed",
    "leibniz_expansion_check",
    "lie_centralizer",
    "matrix_unit",
    "nilpotency_report",
    "nilpotent_subalgebra_dim_bound",
    "permuted_insertion_check",
    "preimage",
    "recover_antiautomorphism",
    "recover_automorphism",
    "recover_twisted_antiautomorphism",
    "recover_twisted_automorphism",
    "residual_trace_form_check",
    "scalar_multiple_of_identity",
    "smallest_irreducible",
    "symplectic_involution",
    "transpose_conjugation_map",
    "upper_shift",
]
