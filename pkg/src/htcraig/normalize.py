"""Equivalence-preserving formula transformations.

Every rewrite used here is an equivalence of the three-valued semantics;
the test suite checks each one exhaustively against the oracle.  The
implication laws of classical logic that fail here (e.g. ~~A = A) are
never used.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .formula import (
    And,
    Atom,
    Falsum,
    Formula,
    FormulaClass,
    Imp,
    Nh,
    Not,
    Or,
    Verum,
    classify,
    is_nh_nnf,
)

__all__ = [
    "NormalizationError",
    "PolarityError",
    "NhClause",
    "push_negations",
    "push_nh",
    "to_nh_nnf",
    "body_normalize",
    "is_body_normalized",
    "to_cnf",
    "simplify_constants",
    "tidy",
]


class NormalizationError(ValueError):
    """Input outside the domain of a transformation."""


class PolarityError(NormalizationError):
    """An nh occurrence under an odd number of negations."""


# ---------------------------------------------------------------------------
# Negation pushing


def push_negations(f: Formula) -> Formula:
    """Push negations inward until they sit only on atoms or on ~atom.

    Uses ~(A & B) = ~A | ~B, ~(A | B) = ~A & ~B, ~(A -> B) = ~~A & ~B,
    ~~~A = ~A and the corresponding distributions of ~~ (all of which
    are equivalences of the three-valued semantics, unlike ~~A = A).
    Rejects nh under an odd number of negations.
    """
    match f:
        case Atom(_) | Falsum() | Verum():
            return f
        case Not(x):
            return _neg(x)
        case Nh(x):
            return Nh(push_negations(x))
        case Or(a, b):
            return Or(push_negations(a), push_negations(b))
        case And(a, b):
            return And(push_negations(a), push_negations(b))
        case Imp(a, b):
            return Imp(push_negations(a), push_negations(b))
    raise TypeError(f"not a formula: {f!r}")


def _neg(f: Formula) -> Formula:
    """Pushed form of ~f."""
    match f:
        case Atom(_):
            return Not(f)
        case Falsum():
            return Verum()
        case Verum():
            return Falsum()
        case Not(x):
            return _negneg(x)
        case Nh(_):
            raise PolarityError("nh occurs under an odd number of negations")
        case And(a, b):
            return Or(_neg(a), _neg(b))
        case Or(a, b):
            return And(_neg(a), _neg(b))
        case Imp(a, b):
            return And(_negneg(a), _neg(b))
    raise TypeError(f"not a formula: {f!r}")


def _negneg(f: Formula) -> Formula:
    """Pushed form of ~~f (which is not f in this logic)."""
    match f:
        case Atom(_):
            return Not(Not(f))
        case Falsum() | Verum():
            return f
        case Not(x):
            return _neg(x)
        case Nh(x):
            # ~~ is the identity on {F, T}-valued formulas.
            return Nh(push_negations(x))
        case And(a, b):
            return And(_negneg(a), _negneg(b))
        case Or(a, b):
            return Or(_negneg(a), _negneg(b))
        case Imp(a, b):
            return Or(_neg(a), _negneg(b))
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# nh pushing


def push_nh(f: Formula) -> Formula:
    """Push nh inward until it applies to atoms only.

    Uses nh(~A) = ~~A, nh(A & B) = nh(A) | nh(B), nh(A | B) =
    nh(A) & nh(B), nh(true) = false, nh(false) = true.  Arguments of nh
    must be free of implications and of nested nh.
    """
    match f:
        case Atom(_) | Falsum() | Verum():
            return f
        case Nh(x):
            return _nh(x)
        case Not(x):
            return Not(push_nh(x))
        case Or(a, b):
            return Or(push_nh(a), push_nh(b))
        case And(a, b):
            return And(push_nh(a), push_nh(b))
        case Imp(a, b):
            return Imp(push_nh(a), push_nh(b))
    raise TypeError(f"not a formula: {f!r}")


def _nh(f: Formula) -> Formula:
    """Pushed form of nh(f)."""
    match f:
        case Atom(_):
            return Nh(f)
        case Falsum():
            return Verum()
        case Verum():
            return Falsum()
        case Not(x):
            return _negneg(x)
        case And(a, b):
            return Or(_nh(a), _nh(b))
        case Or(a, b):
            return And(_nh(a), _nh(b))
        case Imp(_, _) | Nh(_):
            raise NormalizationError("implication or nh inside an nh argument")
    raise TypeError(f"not a formula: {f!r}")


def to_nh_nnf(f: Formula) -> Formula:
    """Negation normal form over atom, ~atom, ~~atom, nh(atom), constants."""
    if FormulaClass.NH not in classify(f):
        raise NormalizationError(
            "input must be implication-free with nh in positive positions"
        )
    return push_nh(push_negations(f))


# ---------------------------------------------------------------------------
# Body normalization
#
# Target shape: no implication occurs anywhere inside the antecedent of
# another implication.  The core rewrite for an implication antecedent is
#   (A -> B) -> C  =  (~A -> C) & (B -> C) & (C | A | ~B)
# with currying (A & B) -> C = A -> (B -> C), case split
# (A | B) -> C = (A -> C) & (B -> C), and negation pushing for negated
# antecedents.  Each is an equivalence here (checked by the oracle),
# valid for arbitrary subformulas.
#
# Antecedents are processed outermost-first on the raw input: the core
# rewrite copies its consequent three times, so normalizing an
# antecedent before eliminating it multiplies the copies it must later
# absorb and blows up doubly exponentially.  Outermost-first keeps the
# duplication bounded by the implication count of the original input.


def _imp_free(f: Formula) -> bool:
    return not f._has_imp


def is_body_normalized(f: Formula) -> bool:
    """No implication inside the antecedent of another implication."""
    match f:
        case Imp(a, b):
            return _imp_free(a) and is_body_normalized(b)
        case Not(x) | Nh(x):
            return is_body_normalized(x)
        case Or(a, b) | And(a, b):
            return is_body_normalized(a) and is_body_normalized(b)
    return True


def body_normalize(f: Formula) -> Formula:
    """Equivalent body-normalized form of an implication-only formula.

    Constants are absorbed first; the core rewrite multiplies its
    consequent, so shrinking the input pays off disproportionately.
    """
    if FormulaClass.HT not in classify(f):
        raise NormalizationError("body normalization expects an nh-free formula")
    return _bn(simplify_constants(f))


def _bn(f: Formula) -> Formula:
    if not f._has_imp:
        return f
    match f:
        case Not(x):
            return Not(_bn(x))
        case Or(a, b):
            return Or(_bn(a), _bn(b))
        case And(a, b):
            return And(_bn(a), _bn(b))
        case Imp(a, b):
            return _mk_imp(a, _bn(b))
    raise TypeError(f"not a formula: {f!r}")


def _mk_imp(a: Formula, c: Formula) -> Formula:
    """Body-normalized equivalent of a -> c; a raw, c already normalized."""
    if _imp_free(a):
        return Imp(a, c)
    match a:
        case Imp(x, y):
            if x == Verum():
                return _mk_imp(y, c)
            if x == Falsum() or y == Verum():
                return c
            if y == Falsum():
                return _mk_imp(Not(x), c)
            return And(
                And(Imp(push_negations(Not(x)), c), _mk_imp(y, c)),
                Or(Or(c, _bn(x)), Not(_bn(y))),
            )
        case And(x, y):
            return _mk_imp(x, _mk_imp(y, c))
        case Or(x, y):
            return And(_mk_imp(x, c), _mk_imp(y, c))
        case Not(_):
            return Imp(push_negations(a), c)
    raise AssertionError(f"unreachable antecedent shape: {a!r}")


# ---------------------------------------------------------------------------
# Clause form


@dataclass(frozen=True)
class NhClause:
    """A disjunction nh(E_1) | ... | nh(E_m) | F.

    nh_atoms are the E_i; rest holds the plain literals of F, each one of
    atom, ~atom, ~~atom (constants are absorbed during conversion).
    """

    nh_atoms: tuple[str, ...]
    rest: tuple[Formula, ...]

    def to_formula(self) -> Formula:
        parts = [Nh(Atom(name)) for name in self.nh_atoms] + list(self.rest)
        if not parts:
            return Falsum()
        return reduce(Or, parts)


def to_cnf(f: Formula) -> list[NhClause]:
    """Clause form of an nh-NNF formula by distributing | over &.

    Literals are treated as opaque; no fresh atoms are introduced.  The
    conjunction of the returned clauses is equivalent to f; an empty list
    reads as true, a clause with no members as false.
    """
    if not is_nh_nnf(f):
        raise NormalizationError("clause conversion expects nh negation normal form")
    clauses = []
    seen = set()
    for lits in _cnf(f):
        deduped = tuple(dict.fromkeys(lits))
        if deduped in seen:
            continue
        seen.add(deduped)
        nh_atoms = tuple(l.arg.name for l in deduped if isinstance(l, Nh))
        rest = tuple(l for l in deduped if not isinstance(l, Nh))
        clauses.append(NhClause(nh_atoms, rest))
    return clauses


def _cnf(f: Formula) -> list[tuple[Formula, ...]]:
    match f:
        case Verum():
            return []
        case Falsum():
            return [()]
        case And(a, b):
            return _cnf(a) + _cnf(b)
        case Or(a, b):
            return [ca + cb for ca in _cnf(a) for cb in _cnf(b)]
    return [(f,)]


# ---------------------------------------------------------------------------
# Constant absorption and light cleanup


def simplify_constants(f: Formula) -> Formula:
    """Absorb true/false: A & true = A, false -> A = true, and so on.

    Idempotent; the result contains constants only as the whole formula.
    """
    match f:
        case Atom(_) | Falsum() | Verum():
            return f
        case Not(x):
            x = simplify_constants(x)
            if x == Falsum():
                return Verum()
            if x == Verum():
                return Falsum()
            return Not(x)
        case Nh(x):
            x = simplify_constants(x)
            if x == Falsum():
                return Verum()
            if x == Verum():
                return Falsum()
            return Nh(x)
        case And(a, b):
            a, b = simplify_constants(a), simplify_constants(b)
            if a == Falsum() or b == Falsum():
                return Falsum()
            if a == Verum():
                return b
            if b == Verum():
                return a
            return And(a, b)
        case Or(a, b):
            a, b = simplify_constants(a), simplify_constants(b)
            if a == Verum() or b == Verum():
                return Verum()
            if a == Falsum():
                return b
            if b == Falsum():
                return a
            return Or(a, b)
        case Imp(a, b):
            a, b = simplify_constants(a), simplify_constants(b)
            if a == Falsum() or b == Verum():
                return Verum()
            if a == Verum():
                return b
            if b == Falsum():
                # A -> false = ~A holds in this logic.
                return Not(a)
            return Imp(a, b)
    raise TypeError(f"not a formula: {f!r}")


def _flatten(f: Formula, op) -> list[Formula]:
    if isinstance(f, op):
        return _flatten(f.left, op) + _flatten(f.right, op)
    return [f]


def tidy(f: Formula) -> Formula:
    """Light output cleanup: constant absorption plus idempotence.

    Duplicate members of &/| chains are removed (first occurrence kept);
    the result is equivalent, never grows, and is deterministic.
    """
    f = simplify_constants(f)
    return _dedup(f)


def _dedup(f: Formula) -> Formula:
    match f:
        case And(_, _) | Or(_, _):
            op = type(f)
            parts = [_dedup(p) for p in _flatten(f, op)]
            parts = list(dict.fromkeys(parts))
            return reduce(op, parts)
        case Not(x):
            return Not(_dedup(x))
        case Nh(x):
            return Nh(_dedup(x))
        case Imp(a, b):
            return Imp(_dedup(a), _dedup(b))
    return f
