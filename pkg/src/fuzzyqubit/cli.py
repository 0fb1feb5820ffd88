"""Command-line interface.

Each verb reads at most one JSON document from stdin and writes one JSON
document to stdout, so commands can be piped::

    fuzzyqubit state --a 0.6 --b 0.8 \\
        | fuzzyqubit basic --phi 0 --alpha-re 0 --alpha-im 1 \\
        | fuzzyqubit recover --phi 0 --alpha-re 0 --alpha-im 1

Exit codes: 0 success, 1 domain or input error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import jsonio
from .errors import FuzzyQubitError
from .fuzzy import cells_for_register, fuzzy_sphere, verification_report
from .linalg import HADAMARD, IDENTITY2
from .measurement import (
    BASES,
    DiagonalUnitary,
    basic_measure_in_basis,
    recover_in_basis,
    sample_outcomes,
    standard_measure,
)
from .qubit import Qubit, _complex_field, from_bloch, new_qubit
from .rotation import UnitaryGate2, apply_unitary, decompose_unitary

VERIFY_TOL = 1e-9
NAMED_GATES = {"identity": IDENTITY2, "hadamard": HADAMARD}


class InputError(FuzzyQubitError):
    """Malformed stdin document."""


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--compact", action="store_true", help="emit single-line JSON")
    p.add_argument("--out", metavar="PATH", help="write the JSON document to PATH instead of stdout")
    return p


def _diag_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--phi", type=float, default=0.0, help="global phase (radians)")
    p.add_argument("--alpha-re", type=float, default=1.0)
    p.add_argument("--alpha-im", type=float, default=0.0)
    p.add_argument("--basis", choices=sorted(BASES), default="computational")


def _gate_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gate", choices=sorted(NAMED_GATES), help="use a named gate")
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--alpha-re", type=float)
    p.add_argument("--alpha-im", type=float, default=0.0)
    p.add_argument("--beta-re", type=float, default=0.0)
    p.add_argument("--beta-im", type=float, default=0.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fuzzyqubit", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")
    common = _common()

    p = sub.add_parser("state", parents=[common], help="create a normalized qubit")
    p.add_argument("--a", "--a-re", dest="a_re", type=float)
    p.add_argument("--a-im", type=float, default=0.0)
    p.add_argument("--b", "--b-re", dest="b_re", type=float)
    p.add_argument("--b-im", type=float, default=0.0)
    p.add_argument("--theta", type=float, help="Bloch polar angle (instead of amplitudes)")
    p.add_argument("--azimuth", type=float, default=0.0, help="Bloch azimuth, with --theta")

    p = sub.add_parser("measure", parents=[common], help="standard projective measurement of the stdin state")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--shots", type=int, help="report outcome counts over this many trials")

    p = sub.add_parser("basic", parents=[common], help="reversible basic measurement of the stdin state")
    _diag_flags(p)
    p = sub.add_parser("recover", parents=[common], help="undo a basic measurement")
    _diag_flags(p)

    p = sub.add_parser("rotate", parents=[common], help="apply a 2x2 unitary gate to the stdin state")
    _gate_flags(p)
    p = sub.add_parser(
        "decompose", parents=[common],
        help="axis-angle decomposition of a gate (flags) or of a matrix document on stdin",
    )
    _gate_flags(p)

    p = sub.add_parser("fuzzy", parents=[common], help="fuzzy sphere information or verification")
    p.add_argument("--n", type=int, required=True, help="cell count")
    p.add_argument("mode", nargs="?", choices=("info", "verify"), default="info")

    p = sub.add_parser("register", parents=[common], help="cell count for an N-qubit register")
    p.add_argument("--qubits", type=int, required=True)
    return parser


def _read_json(stdin):
    text = stdin.read()
    if not text.strip():
        raise InputError("expected a JSON document on stdin")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON on stdin: {exc}") from None


def _read_qubit(stdin) -> Qubit:
    data = _read_json(stdin)
    try:
        return Qubit.from_dict(data)
    except FuzzyQubitError as exc:
        raise InputError(f"invalid qubit document: {exc}") from None


def _diag(args) -> tuple[DiagonalUnitary, object]:
    u = DiagonalUnitary(args.phi, complex(args.alpha_re, args.alpha_im))
    return u, BASES[args.basis]


def _gate_matrix(args, stdin=None):
    if args.gate is not None:
        return NAMED_GATES[args.gate]
    if args.alpha_re is None:
        if stdin is None:
            raise InputError("give --gate or --alpha-re/--alpha-im/--beta-re/--beta-im")
        return _read_matrix(stdin)
    gate = UnitaryGate2(args.phi, complex(args.alpha_re, args.alpha_im), complex(args.beta_re, args.beta_im))
    return gate.matrix


def _read_matrix(stdin):
    data = _read_json(stdin)
    if not isinstance(data, dict) or "matrix" not in data:
        raise InputError("missing field 'matrix'")
    rows = data["matrix"]
    if not isinstance(rows, list) or len(rows) != 2 or any(not isinstance(r, list) or len(r) != 2 for r in rows):
        raise InputError("field 'matrix' must be a 2x2 list of {re, im} objects")
    try:
        return [[_complex_field({"m": e}, "m") for e in row] for row in rows]
    except FuzzyQubitError as exc:
        raise InputError(f"invalid entry in field 'matrix': {exc}") from None


def _run(args, stdin):
    verb = args.verb
    if verb == "state":
        if args.theta is not None:
            return from_bloch(args.theta, args.azimuth).to_dict()
        if args.a_re is None and args.b_re is None:
            raise InputError("give --a/--b amplitudes or --theta")
        a = complex(args.a_re or 0.0, args.a_im)
        b = complex(args.b_re or 0.0, args.b_im)
        return new_qubit(a, b).to_dict()
    if verb == "measure":
        q = _read_qubit(stdin)
        if args.shots is None:
            return standard_measure(q, args.seed).to_dict()
        outcomes = sample_outcomes(q, args.shots, args.seed)
        ones = int(outcomes.sum())
        return {"seed": args.seed, "shots": args.shots, "counts": [args.shots - ones, ones]}
    if verb == "basic":
        u, B = _diag(args)
        return basic_measure_in_basis(_read_qubit(stdin), u, B).to_dict()
    if verb == "recover":
        u, B = _diag(args)
        return recover_in_basis(_read_qubit(stdin), u, B).to_dict()
    if verb == "rotate":
        if args.gate is None and args.alpha_re is None:
            raise InputError("give --gate or --alpha-re/--alpha-im/--beta-re/--beta-im")
        M = _gate_matrix(args)
        return apply_unitary(M, _read_qubit(stdin)).to_dict()
    if verb == "decompose":
        return decompose_unitary(_gate_matrix(args, stdin)).to_dict()
    if verb == "fuzzy":
        s = fuzzy_sphere(args.n)
        if args.mode == "info":
            return {"n": s.n, "k": s.k, "dimensions": [s.n, s.n]}
        return verification_report(s)
    if verb == "register":
        return {"n": cells_for_register(args.qubits)}
    raise AssertionError(verb)


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        doc = _run(args, stdin)
    except FuzzyQubitError as exc:
        print(f"error: {exc}", file=stderr)
        return 1

    code = 0
    if args.verb == "fuzzy" and args.mode == "verify":
        worst = max(doc["residuals"].values())
        if worst > VERIFY_TOL:
            print(f"error: residual {worst:.3e} exceeds {VERIFY_TOL:g}", file=stderr)
            code = 1

    text = jsonio.dumps(doc, compact=args.compact) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
