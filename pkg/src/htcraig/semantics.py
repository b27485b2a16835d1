"""Three-valued semantics and the exhaustive entailment oracle.

Truth values are ordered F < NF < T.  Conjunction is min, disjunction is
max, negation maps only F to T, nh maps only T to F, and an implication
is T when its left value is at most its right value and otherwise takes
the right value.  Entailment and equivalence enumerate all 3**n
assignments over the joint vocabulary; this module is the trusted
reference that the calculus and interpolation modules are tested
against, so it takes no shortcuts.

The assignment enumeration is lexicographic: atoms sorted by name,
values in the order F, NF, T, first atom most significant.  Reported
countermodels are always the first failing assignment in that order.
"""

from __future__ import annotations

import enum
import os
from array import array
from collections.abc import Mapping
from dataclasses import dataclass

from .formula import Atom, And, Falsum, Formula, Imp, Nh, Not, Or, Verum, voc

__all__ = [
    "TruthValue",
    "Assignment",
    "EntailmentVerdict",
    "UndeclaredAtomError",
    "AtomLimitError",
    "BACKEND",
    "evaluate",
    "entails",
    "equivalent",
    "truth_table",
    "format_truth_table",
    "truth_table_json",
    "compile_program",
]


class TruthValue(enum.IntEnum):
    F = 0
    NF = 1
    T = 2

    def __str__(self) -> str:
        return self.name

    @classmethod
    def from_text(cls, text: str) -> "TruthValue":
        try:
            return cls[text]
        except KeyError:
            raise ValueError(f"not a truth value: {text!r} (expected F, NF or T)") from None


Assignment = Mapping[str, TruthValue]


class UndeclaredAtomError(LookupError):
    """An atom of the formula is missing from the assignment."""


class AtomLimitError(ValueError):
    """The formula has more atoms than the enumeration cap allows."""


@dataclass(frozen=True)
class EntailmentVerdict:
    """Outcome of an exhaustive check; countermodel present iff it failed."""

    holds: bool
    countermodel: dict[str, TruthValue] | None = None

    def __bool__(self) -> bool:
        return self.holds


def _load_backend():
    if not os.environ.get("HTCRAIG_PURE"):
        try:
            from . import _core

            return _core, "compiled"
        except ImportError:
            pass
    from . import _core_py

    return _core_py, "pure"


_backend, BACKEND = _load_backend()


# ---------------------------------------------------------------------------
# Compilation to the kernel's postfix programs

from ._core_py import OP_AND, OP_BOT, OP_IMP, OP_NH, OP_NOT, OP_OR, OP_TOP


def compile_program(f: Formula, index: Mapping[str, int]) -> array:
    """Postfix program for f with atoms resolved through index."""
    out = array("i")
    work: list[tuple[Formula, bool]] = [(f, False)]
    while work:
        g, emit = work.pop()
        if emit:
            match g:
                case Not(_):
                    out.append(OP_NOT)
                case Nh(_):
                    out.append(OP_NH)
                case And(_, _):
                    out.append(OP_AND)
                case Or(_, _):
                    out.append(OP_OR)
                case Imp(_, _):
                    out.append(OP_IMP)
            continue
        match g:
            case Atom(name):
                out.append(index[name])
            case Falsum():
                out.append(OP_BOT)
            case Verum():
                out.append(OP_TOP)
            case Not(arg) | Nh(arg):
                work.append((g, True))
                work.append((arg, False))
            case Or(a, b) | And(a, b) | Imp(a, b):
                work.append((g, True))
                work.append((b, False))
                work.append((a, False))
            case _:
                raise TypeError(f"not a formula: {g!r}")
    return out


def _index_for(atoms: list[str]) -> dict[str, int]:
    return {name: i for i, name in enumerate(atoms)}


def _decode(idx: int, atoms: list[str]) -> dict[str, TruthValue]:
    out: dict[str, TruthValue] = {}
    for name in reversed(atoms):
        out[name] = TruthValue(idx % 3)
        idx //= 3
    return {name: out[name] for name in atoms}


# ---------------------------------------------------------------------------
# Public operations


def evaluate(f: Formula, assignment: Assignment) -> TruthValue:
    """Value of f under the assignment; every atom of f must be assigned."""
    atoms = sorted(voc(f))
    missing = [a for a in atoms if a not in assignment]
    if missing:
        raise UndeclaredAtomError(f"atom {missing[0]!r} is not assigned")
    values = array("b", (int(assignment[a]) for a in atoms))
    prog = compile_program(f, _index_for(atoms))
    return TruthValue(_backend.eval_one(prog, values))


def entails(a: Formula, b: Formula) -> EntailmentVerdict:
    """Does a entail b, i.e. is the value of a at most that of b everywhere?"""
    atoms = sorted(voc(a) | voc(b))
    index = _index_for(atoms)
    idx = _backend.first_entail_fail(
        compile_program(a, index), compile_program(b, index), len(atoms)
    )
    if idx < 0:
        return EntailmentVerdict(True)
    return EntailmentVerdict(False, _decode(idx, atoms))


def equivalent(a: Formula, b: Formula) -> EntailmentVerdict:
    """Do a and b take the same value under every assignment?"""
    atoms = sorted(voc(a) | voc(b))
    index = _index_for(atoms)
    idx = _backend.first_equiv_fail(
        compile_program(a, index), compile_program(b, index), len(atoms)
    )
    if idx < 0:
        return EntailmentVerdict(True)
    return EntailmentVerdict(False, _decode(idx, atoms))


def truth_table(
    f: Formula, max_atoms: int = 12
) -> list[tuple[dict[str, TruthValue], TruthValue]]:
    """All rows (assignment, value) in enumeration order."""
    atoms = sorted(voc(f))
    if len(atoms) > max_atoms:
        raise AtomLimitError(
            f"{len(atoms)} atoms exceed the cap of {max_atoms} (3**n rows)"
        )
    values = _backend.table(compile_program(f, _index_for(atoms)), len(atoms))
    return [(_decode(i, atoms), TruthValue(v)) for i, v in enumerate(values)]


def format_truth_table(f: Formula, max_atoms: int = 12) -> str:
    """Text rendering: header of sorted atoms plus the formula, then rows."""
    atoms = sorted(voc(f))
    rows = truth_table(f, max_atoms)
    header = atoms + [str(f)]
    lines = ["  ".join(header)]
    for assignment, value in rows:
        lines.append("  ".join([str(assignment[a]) for a in atoms] + [str(value)]))
    return "\n".join(lines)


def truth_table_json(f: Formula, max_atoms: int = 12) -> list[dict]:
    """JSON-ready rows: [{"assignment": {atom: "NF", ...}, "value": "T"}, ...]."""
    return [
        {"assignment": {k: str(v) for k, v in row.items()}, "value": str(value)}
        for row, value in truth_table(f, max_atoms)
    ]
