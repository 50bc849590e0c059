"""Command-line front-end.

Every subcommand prints a run report to stdout:

    {"command": ..., "inputs": [...], "outcome": {...}, "timing_ms": ...}

and, with ``--out FILE``, writes the primary artifact (matrix, subspace,
recovery result, ...) as plain JSON that the same tool accepts back as
input.  Exit codes: 0 success, 1 domain error (the typed error name is
printed), 2 malformed input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import jsonio
from .centralizers import (
    centralizer_chain,
    hereditary_centralizer,
    nilpotency_report,
)
from .errors import LiematError, MalformedJSON
from .experiments import write_bounds_csv
from .fields import Rationals
from .lie import bracket, closure
from .matrices import Matrix, basis_unit_vector
from .presets import preset_map, preset_matrices
from .recovery import (
    decompose_lie_automorphism,
    recover_antiautomorphism,
    recover_automorphism,
    recover_twisted_antiautomorphism,
    recover_twisted_automorphism,
    residual_trace_form_check,
)
from .selftest import run as run_selftest
from .centralizers import bounds_table


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liemat",
        description="exact matrix Lie-algebra computations: closures, "
        "centralizer chains, nilpotency bounds, and conjugator recovery",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_field=True):
        p.add_argument("--in", dest="infile", help="input JSON file")
        p.add_argument("--out", dest="outfile", help="write the artifact JSON here")
        if needs_field:
            p.add_argument("--field", default="q", help="q | gf:p | gfext:p:m[:modulus]")
            p.add_argument("--n", type=int, default=None, help="matrix size for presets")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized parts")

    p = sub.add_parser("bracket", help="commutator of two matrices")
    add_common(p)
    p.add_argument("--preset", help="two comma-separated matrix names, e.g. E11,P")

    p = sub.add_parser("closure", help="Lie or associative subalgebra closure")
    add_common(p)
    p.add_argument("--kind", choices=["lie", "associative"], default="lie")
    p.add_argument("--preset", help="comma-separated generator names, e.g. P,E11")

    p = sub.add_parser("chain", help="Lie centralizer chain of a finite set")
    add_common(p)
    p.add_argument("--preset", help="comma-separated matrix names")
    p.add_argument("--max-k", type=int, default=None)

    p = sub.add_parser("nilpotency", help="Lie-nilpotency report for a set or subspace")
    add_common(p)
    p.add_argument("--preset", help="comma-separated matrix names")

    p = sub.add_parser("hereditary", help="centralizer restricted to D- or L-tuples")
    add_common(p)
    p.add_argument("--preset", help="comma-separated matrix names")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--prop", choices=["D", "L"], required=True)

    p = sub.add_parser("bounds", help="dimension-bound table")
    add_common(p, needs_field=False)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--csv", help="also write the table as CSV")

    for name, help_text in [
        ("recover-auto", "conjugator of a (possibly twisted) automorphism"),
        ("recover-anti", "conjugator of a (possibly twisted) anti-automorphism"),
        ("decompose", "split a bracket-preserving map as sigma + c*tr(.)*I"),
    ]:
        p = sub.add_parser(name, help=help_text)
        add_common(p)
        p.add_argument(
            "--preset",
            help="map preset: identity | transpose | symplectic | trace-shift",
        )

    p = sub.add_parser(
        "verify-example",
        help="reproduce the built-in size-8 symplectic-involution recovery",
    )
    add_common(p, needs_field=False)

    p = sub.add_parser("selftest", help="run the in-process invariant suite")
    add_common(p, needs_field=False)
    return parser


def _load_matrices(args) -> list[Matrix]:
    if args.infile:
        data = jsonio.load_path(args.infile)
        if isinstance(data, dict) and "ambient" in data:
            return jsonio.subspace_from_json(data).basis
        return jsonio.matrix_list_from_json(data)
    if getattr(args, "preset", None):
        field = jsonio.parse_field_flag(args.field)
        if args.n is None:
            raise MalformedJSON("--preset needs --n")
        return preset_matrices(args.preset, field, args.n)
    raise MalformedJSON("supply --in or --preset")


def _load_subject(args):
    """Finite set or subspace, preserving which one was given."""
    if args.infile:
        data = jsonio.load_path(args.infile)
        if isinstance(data, dict) and "ambient" in data:
            return jsonio.subspace_from_json(data)
        return jsonio.matrix_list_from_json(data)
    return _load_matrices(args)


def _load_map(args):
    if args.infile:
        return jsonio.algebra_map_from_json(jsonio.load_path(args.infile))
    if getattr(args, "preset", None):
        field = jsonio.parse_field_flag(args.field)
        if args.n is None:
            raise MalformedJSON("--preset needs --n")
        return preset_map(args.preset, field, args.n)
    raise MalformedJSON("supply --in or --preset")


def _recovery_outcome(result) -> dict:
    return {
        "conjugator": jsonio.matrix_to_json(result.conjugator),
        "kernel_vector": jsonio.matrix_to_json(result.kernel_vector),
        "verified": result.verified,
        "scalar_class": result.scalar_class,
    }


def _cmd_bracket(args):
    mats = _load_matrices(args)
    if len(mats) != 2:
        raise MalformedJSON("bracket needs exactly two matrices")
    result = bracket(mats[0], mats[1])
    artifact = jsonio.matrix_to_json(result)
    return {"matrix": artifact}, artifact


def _cmd_closure(args):
    gens = _load_matrices(args)
    result = closure(gens, args.kind)
    artifact = jsonio.subspace_to_json(result.subspace)
    outcome = {
        "kind": result.product_kind,
        "dim": result.subspace.dim,
        "rounds": result.rounds,
        "subspace": artifact,
    }
    return outcome, artifact


def _cmd_chain(args):
    subject = _load_subject(args)
    chain = centralizer_chain(subject, args.max_k)
    artifact = jsonio.subspace_to_json(chain.omega)
    outcome = {
        "level_dims": [lvl.dim for lvl in chain.levels],
        "stabilization_index": chain.stabilization_index,
        "omega": artifact,
    }
    return outcome, artifact


def _cmd_nilpotency(args):
    subject = _load_subject(args)
    rep = nilpotency_report(subject)
    bc = rep.bound_comparison
    outcome = {
        "is_lie_nilpotent": rep.is_lie_nilpotent,
        "index": rep.index,
        "is_omega_lie_nilpotent": rep.is_omega_lie_nilpotent,
        "dim": rep.dim,
        "bound_comparison": {
            "ambient_size": bc.ambient_size,
            "dim": bc.dim,
            "measured_index": bc.measured_index,
            "index_dim_bound": bc.index_dim_bound,
            "conjectured_bound": bc.conjectured_bound,
            "within_index_bound": bc.within_index_bound,
            "within_conjectured_bound": bc.within_conjectured_bound,
        },
    }
    return outcome, outcome


def _cmd_hereditary(args):
    mats = _load_matrices(args)
    space = hereditary_centralizer(mats, args.k, args.prop)
    artifact = jsonio.subspace_to_json(space)
    return {"dim": space.dim, "subspace": artifact}, artifact


def _cmd_bounds(args):
    table = bounds_table(args.max_n)
    if args.csv:
        write_bounds_csv(args.csv, args.max_n)
    outcome = {
        "rows": [
            {"n": n, "k": k, "index_dim_bound": g, "conjectured_bound": c}
            for n, k, g, c in table
        ]
    }
    return outcome, outcome


def _cmd_recover_auto(args):
    m = _load_map(args)
    result = (
        recover_automorphism(m)
        if m.twist.is_identity_kind
        else recover_twisted_automorphism(m)
    )
    outcome = _recovery_outcome(result)
    return outcome, outcome


def _cmd_recover_anti(args):
    m = _load_map(args)
    result = (
        recover_antiautomorphism(m)
        if m.twist.is_identity_kind
        else recover_twisted_antiautomorphism(m)
    )
    outcome = _recovery_outcome(result)
    return outcome, outcome


def _cmd_decompose(args):
    m = _load_map(args)
    dec = decompose_lie_automorphism(m)
    outcome = {
        "sigma_kind": dec.sigma_kind,
        "sigma_conjugator": jsonio.matrix_to_json(dec.sigma_conjugator),
        "tau_coefficient": dec.field.format_scalar(dec.tau_coefficient.value),
        "residual_zero": dec.residual_zero,
        "tau_trace_shaped": residual_trace_form_check(m, dec.sigma_map()),
    }
    return outcome, outcome


def _cmd_verify_example(args):
    from .matrices import symplectic_involution
    from .fields import PrimeField
    from .recovery import AlgebraMap

    lines = []
    outcome_fields = []
    ok = True
    for field in (Rationals(), PrimeField(7)):
        m = AlgebraMap.from_function(8, field, symplectic_involution)
        result = recover_antiautomorphism(m)
        expected = Matrix(
            field,
            [[0] * 4 + [-1 if j == i else 0 for j in range(4)] for i in range(4)]
            + [[1 if j == i else 0 for j in range(4)] + [0] * 4 for i in range(4)],
        )
        field_ok = (
            result.verified
            and result.conjugator == expected
            and result.kernel_vector == basis_unit_vector(field, 8, 5)
        )
        ok = ok and field_ok
        outcome_fields.append(
            {
                "field": jsonio.field_to_json(field),
                "conjugator": jsonio.matrix_to_json(result.conjugator),
                "kernel_vector": jsonio.matrix_to_json(result.kernel_vector),
                "verified": field_ok,
            }
        )
    fmt = Rationals().format_scalar
    lines.append("conjugator (block form [[0, -I4], [I4, 0]]):")
    first = jsonio.matrix_from_json(outcome_fields[0]["conjugator"])
    for row in first.entries:
        lines.append("  [" + " ".join(f"{fmt(a):>2}" for a in row) + "]")
    lines.append("VERIFIED" if ok else "FAILED")
    print("\n".join(lines))
    outcome = {"results": outcome_fields, "verified": ok}
    if not ok:
        raise LiematError("symplectic example did not verify")
    return outcome, outcome


def _cmd_selftest(args):
    collected = []
    ok = run_selftest(args.seed, out=collected.append)
    outcome = {"ok": ok, "checks": collected}
    if not ok:
        raise LiematError("selftest failed:\n" + "\n".join(collected))
    return outcome, outcome


_HANDLERS = {
    "bracket": _cmd_bracket,
    "closure": _cmd_closure,
    "chain": _cmd_chain,
    "nilpotency": _cmd_nilpotency,
    "hereditary": _cmd_hereditary,
    "bounds": _cmd_bounds,
    "recover-auto": _cmd_recover_auto,
    "recover-anti": _cmd_recover_anti,
    "decompose": _cmd_decompose,
    "verify-example": _cmd_verify_example,
    "selftest": _cmd_selftest,
}


def dispatch(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    started = time.perf_counter()
    try:
        outcome, artifact = _HANDLERS[args.command](args)
    except MalformedJSON as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except LiematError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"MalformedJSON: cannot read input: {exc}", file=sys.stderr)
        return 2
    except (TypeError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    elapsed_ms = round((time.perf_counter() - started) * 1000, 3)
    report = {
        "command": args.command,
        "inputs": [p for p in [getattr(args, "infile", None)] if p],
        "outcome": outcome,
        "timing_ms": elapsed_ms,
    }
    print(json.dumps(report, sort_keys=True))
    if getattr(args, "outfile", None):
        with open(args.outfile, "w", encoding="utf-8") as fh:
            json.dump(artifact, fh, sort_keys=True, indent=1)
    return 0


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
