"""Command-line front end.

Subcommands: eval, entails, prove, interpolate, normalize, truthtable.
Exit codes: 0 for a positive verdict or plain success, 1 for a negative
verdict (non-entailment, failed proof), 2 for usage or parse errors
(and for failed --verify self-audits).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import calculus, interpolation, normalize, semantics
from .formula import Formula, FormulaClass, ParseError, classify, parse
from .semantics import TruthValue

__all__ = ["main", "build_parser"]


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="htcraig",
        description=(
            "Craig interpolation, entailment checking and proof search for "
            "propositional here-and-there logic (3-valued, F < NF < T)."
        ),
    )
    ap.add_argument(
        "--format",
        choices=["text", "json"],
        default="text",
        help="output format (default: text)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a formula under an assignment")
    p.add_argument("formula")
    p.add_argument(
        "--assign",
        required=True,
        metavar="A",
        help='comma-separated assignment, e.g. "p=T,q=NF"',
    )

    p = sub.add_parser("entails", help="exhaustive semantic entailment check")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("prove", help="backward proof search for left |= right")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--proof-out", metavar="PATH", help="write the proof JSON to PATH")
    p.add_argument(
        "--axiom-variant",
        choices=["plain", "double-negation"],
        default="plain",
        help="interpolant choice for the mixed contradiction axiom",
    )

    p = sub.add_parser("interpolate", help="compute a Craig interpolant")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--stage1", action="store_true", help="also print the stage-1 form")
    p.add_argument("--proof-out", metavar="PATH", help="write the proof JSON to PATH")
    p.add_argument(
        "--verify",
        action="store_true",
        help="re-run the oracle checks and fail (exit 2) unless all pass",
    )
    p.add_argument(
        "--axiom-variant",
        choices=["plain", "double-negation"],
        default="plain",
        help="interpolant choice for the mixed contradiction axiom",
    )

    p = sub.add_parser("normalize", help="print a normal form of the formula")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--nnf", action="store_true", help="nh negation normal form")
    g.add_argument("--body", action="store_true", help="body-normalized form")
    g.add_argument("--cnf", action="store_true", help="clause form (one per line)")
    p.add_argument("formula")

    p = sub.add_parser("truthtable", help="print the full truth table")
    p.add_argument("formula")
    p.add_argument("--max-atoms", type=int, default=12, help="enumeration cap")
    return ap


def _parse_formula(text: str) -> Formula:
    try:
        return parse(text)
    except ParseError as e:
        raise _UsageError(f"cannot parse {text!r}: {e}") from e


def _parse_assignment(text: str) -> dict[str, TruthValue]:
    out: dict[str, TruthValue] = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        name, sep, value = part.partition("=")
        if not sep:
            raise _UsageError(f"bad assignment entry {part!r} (want atom=F|NF|T)")
        try:
            out[name.strip()] = TruthValue.from_text(value.strip())
        except ValueError as e:
            raise _UsageError(str(e)) from e
    return out


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _dump_proof(path: str, proof) -> None:
    data = calculus.proof_to_json(proof)
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * calculus.proof_depth(proof) + 100))
    try:
        with open(path, "w") as fh:
            json.dump(data, fh, indent=2)
    finally:
        sys.setrecursionlimit(limit)


def _cmd_eval(args) -> int:
    f = _parse_formula(args.formula)
    assignment = _parse_assignment(args.assign)
    try:
        value = semantics.evaluate(f, assignment)
    except semantics.UndeclaredAtomError as e:
        raise _UsageError(str(e)) from e
    _emit(args, {"value": str(value)}, str(value))
    return 0


def _cmd_entails(args) -> int:
    a, b = _parse_formula(args.left), _parse_formula(args.right)
    verdict = semantics.entails(a, b)
    if verdict.holds:
        _emit(args, {"holds": True, "countermodel": None}, "true")
        return 0
    cm = {k: str(v) for k, v in verdict.countermodel.items()}
    _emit(
        args,
        {"holds": False, "countermodel": cm},
        "false\ncountermodel: " + ", ".join(f"{k}={v}" for k, v in cm.items()),
    )
    return 1


def _cmd_prove(args) -> int:
    a, b = _parse_formula(args.left), _parse_formula(args.right)
    for f, side in ((a, "left"), (b, "right")):
        if FormulaClass.HT not in classify(f):
            raise _UsageError(f"{side} formula must not contain nh")
    b_norm = normalize.body_normalize(b)
    outcome = calculus.prove(
        calculus.initial_sequent(a, b_norm),
        contra_nn=(args.axiom_variant == "double-negation"),
    )
    if outcome.succeeded:
        if args.proof_out:
            _dump_proof(args.proof_out, outcome.proof)
        _emit(
            args,
            calculus.proof_to_json(outcome.proof),
            calculus.format_proof(outcome.proof),
        )
        return 0
    cm = {k: str(v) for k, v in outcome.countermodel.items()}
    _emit(
        args,
        {
            "proved": False,
            "failed_leaf": calculus.sequent_to_json(outcome.leaf),
            "countermodel": cm,
        },
        "unprovable\nfailed leaf: "
        + str(outcome.leaf)
        + "\ncountermodel: "
        + ", ".join(f"{k}={v}" for k, v in cm.items()),
    )
    return 1


def _cmd_interpolate(args) -> int:
    a, b = _parse_formula(args.left), _parse_formula(args.right)
    try:
        result = interpolation.craig_interpolant(
            a, b, contra_nn=(args.axiom_variant == "double-negation")
        )
    except ValueError as e:
        raise _UsageError(str(e)) from e
    payload = interpolation.result_to_json(result)
    if result.status is interpolation.Status.NOT_ENTAILS:
        cm = payload["countermodel"]
        _emit(
            args,
            payload,
            "not entailed\ncountermodel: "
            + ", ".join(f"{k}={v}" for k, v in cm.items()),
        )
        return 1
    if args.proof_out:
        _dump_proof(args.proof_out, result.proof)
    lines = [str(result.final)]
    if args.stage1:
        lines.append(f"stage1: {result.stage1}")
    _emit(args, payload, "\n".join(lines))
    if args.verify and not result.report.all_ok:
        print("verification failed", file=sys.stderr)
        return 2
    return 0


def _cmd_normalize(args) -> int:
    f = _parse_formula(args.formula)
    try:
        if args.nnf:
            g = normalize.to_nh_nnf(f)
            _emit(args, {"nnf": str(g)}, str(g))
        elif args.body:
            g = normalize.body_normalize(f)
            _emit(args, {"body": str(g)}, str(g))
        else:
            clauses = normalize.to_cnf(normalize.to_nh_nnf(f))
            payload = {
                "clauses": [
                    {"nh_atoms": list(c.nh_atoms), "rest": [str(x) for x in c.rest]}
                    for c in clauses
                ]
            }
            _emit(args, payload, "\n".join(str(c.to_formula()) for c in clauses))
    except normalize.NormalizationError as e:
        raise _UsageError(str(e)) from e
    return 0


def _cmd_truthtable(args) -> int:
    f = _parse_formula(args.formula)
    try:
        text = semantics.format_truth_table(f, args.max_atoms)
        payload = semantics.truth_table_json(f, args.max_atoms)
    except semantics.AtomLimitError as e:
        raise _UsageError(str(e)) from e
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    return 0


_COMMANDS = {
    "eval": _cmd_eval,
    "entails": _cmd_entails,
    "prove": _cmd_prove,
    "interpolate": _cmd_interpolate,
    "normalize": _cmd_normalize,
    "truthtable": _cmd_truthtable,
}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
