"""Interpolating split-sequent calculus with backward proof search.

Sequent members carry a provenance label L or R recording which input
formula they descend from.  Each proof node carries a relative
interpolant H; at a root a^L => b^R the three defining conditions

    left:        conj(ant L-members) entails H or disj(suc L-members)
    right:       conj(ant R-members) and H entails disj(suc R-members)
    vocabulary:  voc(H) lies in the vocabularies of both sides

make H a Craig interpolant of a and b.  Axioms supply leaf interpolants;
every rule combines premise interpolants into the conclusion's.

Search is deterministic and backtracking-free: axioms first, then
constant handling, then the reducible member of highest weight with
leftmost tie break.  All retained rules are invertible equivalences of
the three-valued semantics, so the order cannot lose proofs.  Weight
strictly decreases along every rule, which bounds the search.

Invariants maintained during search (checked by asserts, so only in
debug mode): interpolants stay in nh negation normal form, nh occurs
only with provenance R inside succedent members and only applied to
implication-free and nh-free arguments, and no R-labeled antecedent
member contains an atom outside the scope of a negation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Callable, Iterator, Optional

from .formula import (
    And,
    Atom,
    Falsum,
    Formula,
    Imp,
    Nh,
    Not,
    Or,
    Provenance,
    Verum,
    is_nh_nnf,
    voc,
    weight,
)
from .normalize import simplify_constants
from .semantics import TruthValue

__all__ = [
    "LabeledFormula",
    "SplitSequent",
    "ProofNode",
    "SearchOutcome",
    "initial_sequent",
    "axiom_match",
    "expand",
    "prove",
    "leaf_countermodel",
    "sequent_to_json",
    "proof_to_json",
    "format_proof",
    "proof_depth",
    "CHECK_STATS",
]

L = Provenance.L
R = Provenance.R

# Incremented by the debug invariant checks; lets tests confirm the
# checks actually ran.
CHECK_STATS = {"expansions": 0, "nodes": 0}


@dataclass(frozen=True, slots=True)
class LabeledFormula:
    formula: Formula
    prov: Provenance

    def __str__(self) -> str:
        text = str(self.formula)
        if isinstance(self.formula, (And, Or, Imp)):
            text = f"({text})"
        return f"{text}^{self.prov.value}"


@dataclass(frozen=True, slots=True)
class SplitSequent:
    """Antecedent and succedent of provenance-labeled formulas.

    Duplicate-free tuples with stable order stand in for multisets:
    rules only ever copy contexts, so duplicates never help, and the
    fixed order keeps search and output deterministic.
    """

    antecedent: tuple[LabeledFormula, ...]
    succedent: tuple[LabeledFormula, ...]

    @staticmethod
    def make(antecedent, succedent) -> "SplitSequent":
        return SplitSequent(_dedup(antecedent), _dedup(succedent))

    def members(self) -> Iterator[tuple[int, LabeledFormula, bool]]:
        """(index, member, is_antecedent) over antecedent then succedent."""
        i = 0
        for lf in self.antecedent:
            yield i, lf, True
            i += 1
        for lf in self.succedent:
            yield i, lf, False
            i += 1

    def member(self, index: int) -> tuple[LabeledFormula, bool]:
        n = len(self.antecedent)
        if 0 <= index < n:
            return self.antecedent[index], True
        if n <= index < n + len(self.succedent):
            return self.succedent[index - n], False
        raise IndexError(f"no member at index {index}")

    def atoms(self) -> frozenset[str]:
        out: set[str] = set()
        for lf in self.antecedent + self.succedent:
            out |= voc(lf.formula)
        return frozenset(out)

    def __str__(self) -> str:
        ant = ", ".join(map(str, self.antecedent))
        suc = ", ".join(map(str, self.succedent))
        return f"{ant} => {suc}"


def _dedup(members) -> tuple[LabeledFormula, ...]:
    return tuple(dict.fromkeys(members))


def _without(members: tuple, lf: LabeledFormula) -> tuple:
    i = members.index(lf)
    return members[:i] + members[i + 1 :]


def _with(members: tuple, *added: LabeledFormula) -> tuple:
    out = list(members)
    for lf in added:
        if lf not in out:
            out.append(lf)
    return tuple(out)


def _replaced(members: tuple, old: LabeledFormula, new: LabeledFormula) -> tuple:
    if new in members:
        return _without(members, old)
    return tuple(new if m == old else m for m in members)


def initial_sequent(a: Formula, b: Formula) -> SplitSequent:
    """Root sequent a^L => b^R."""
    return SplitSequent.make([LabeledFormula(a, L)], [LabeledFormula(b, R)])


@dataclass(frozen=True, slots=True)
class ProofNode:
    conclusion: SplitSequent
    rule: str
    principal: Optional[int]
    premises: tuple["ProofNode", ...]
    interpolant: Formula


@dataclass(frozen=True)
class SearchOutcome:
    """Either a proof, or the first failed leaf with its countermodel."""

    proof: Optional[ProofNode] = None
    leaf: Optional[SplitSequent] = None
    countermodel: Optional[dict[str, TruthValue]] = None

    @property
    def succeeded(self) -> bool:
        return self.proof is not None


# ---------------------------------------------------------------------------
# Axioms
#
# Matching follows a fixed priority order; within one axiom the members
# are scanned in sequent order.  Literal axioms accept atoms, negated
# atoms and doubly negated atoms (the literal shapes of nh negation
# normal form, minus nh); identity axioms anchored at an R-labeled
# antecedent member accept negated atoms only, because an atom with
# provenance R can never be a plain antecedent member, and for an atom
# in that position no relative interpolant exists at all.


def _is_literal(f: Formula) -> bool:
    match f:
        case Atom(_) | Not(Atom(_)) | Not(Not(Atom(_))):
            return True
    return False


def _is_neg_atom(f: Formula) -> bool:
    match f:
        case Not(Atom(_)):
            return True
    return False


def axiom_match(
    s: SplitSequent, contra_nn: bool = False
) -> Optional[tuple[str, Formula]]:
    """First matching axiom as (rule name, interpolant), or None.

    contra_nn selects the alternative interpolant ~~A instead of A for
    the contradiction axiom with a plain L atom and its R negation; both
    choices are sound.
    """
    ant, suc = s.antecedent, s.succedent
    ant_pairs = {(lf.formula, lf.prov) for lf in ant}
    suc_pairs = {(lf.formula, lf.prov) for lf in suc}

    # ax-id: the same literal on both sides.
    for lf in ant:
        if lf.prov is L and _is_literal(lf.formula):
            if (lf.formula, L) in suc_pairs:
                return "ax-id-LL", Falsum()
    for lf in ant:
        if lf.prov is L and _is_literal(lf.formula):
            if (lf.formula, R) in suc_pairs:
                return "ax-id-LR", lf.formula
    for lf in ant:
        if lf.prov is R and _is_neg_atom(lf.formula):
            if (lf.formula, L) in suc_pairs:
                return "ax-id-RL", Not(lf.formula)
    for lf in ant:
        if lf.prov is R and _is_neg_atom(lf.formula):
            if (lf.formula, R) in suc_pairs:
                return "ax-id-RR", Verum()

    # ax-contra: an atom and its negation in the antecedent.
    for lf in ant:
        if lf.prov is L and isinstance(lf.formula, Atom):
            if (Not(lf.formula), L) in ant_pairs:
                return "ax-contra-LL", Falsum()
    for lf in ant:
        if lf.prov is L and isinstance(lf.formula, Atom):
            if (Not(lf.formula), R) in ant_pairs:
                if contra_nn:
                    return "ax-contra-LR'", Not(Not(lf.formula))
                return "ax-contra-LR", lf.formula

    # ax-nh-excl: an atom and its nh in the succedent (one of them holds).
    for lf in suc:
        if lf.prov is L and isinstance(lf.formula, Atom):
            if (Nh(lf.formula), R) in suc_pairs:
                return "ax-nh-excl-LR", Nh(lf.formula)
    for lf in suc:
        if lf.prov is R and isinstance(lf.formula, Atom):
            if (Nh(lf.formula), R) in suc_pairs:
                return "ax-nh-excl-RR", Verum()

    # ax-nh-neg: a negated atom in the antecedent, its nh in the succedent.
    for lf in ant:
        if lf.prov is L and _is_neg_atom(lf.formula):
            if (Nh(lf.formula.arg), R) in suc_pairs:
                return "ax-nh-neg-LR", lf.formula
    for lf in ant:
        if lf.prov is R and _is_neg_atom(lf.formula):
            if (Nh(lf.formula.arg), R) in suc_pairs:
                return "ax-nh-neg-RR", Verum()

    # Constants.
    if (Falsum(), L) in ant_pairs:
        return "ax-false-L", Falsum()
    if (Falsum(), R) in ant_pairs:
        return "ax-false-R", Verum()
    if (Verum(), L) in suc_pairs:
        return "ax-true-L", Falsum()
    if (Verum(), R) in suc_pairs:
        return "ax-true-R", Verum()
    return None


# ---------------------------------------------------------------------------
# Rules

Combiner = Callable[[list[Formula]], Formula]


def _pass(hs: list[Formula]) -> Formula:
    return hs[0]


def _join_or(hs: list[Formula]) -> Formula:
    return reduce(Or, hs)


def _join_and(hs: list[Formula]) -> Formula:
    return reduce(And, hs)


def _compound(f: Formula) -> bool:
    match f:
        case And(_, _) | Or(_, _) | Imp(_, _):
            return True
    return False


def _reducible(f: Formula, in_ant: bool) -> bool:
    match f:
        case And(_, _) | Or(_, _) | Imp(_, _):
            return True
        case Not(Not(_)):
            return True
        case Not(x):
            return _compound(x)
        case Nh(x):
            return not in_ant and not isinstance(x, Atom)
    return False


def expand(
    s: SplitSequent, principal: int
) -> tuple[str, tuple[SplitSequent, ...], Combiner]:
    """Apply the rule determined by the principal member.

    Returns the rule name, the premises with provenance propagated, and
    the combiner mapping premise interpolants to the conclusion's.
    Raises ValueError when no rule applies to that member.
    """
    lf, in_ant = s.member(principal)
    f, prov = lf.formula, lf.prov
    pv = prov.value
    ant, suc = s.antecedent, s.succedent

    # Constant handling first: drop a true antecedent or false succedent
    # member, then absorb constants inside a member.
    if in_ant and f == Verum():
        return f"drop-true-{pv}", (SplitSequent(_without(ant, lf), suc),), _pass
    if not in_ant and f == Falsum():
        return f"drop-false-{pv}", (SplitSequent(ant, _without(suc, lf)),), _pass
    simplified = simplify_constants(f)
    if simplified != f:
        new = LabeledFormula(simplified, prov)
        if in_ant:
            premise = SplitSequent(_replaced(ant, lf, new), suc)
        else:
            premise = SplitSequent(ant, _replaced(suc, lf, new))
        return f"simplify-{pv}", (premise,), _pass

    if in_ant:
        ant0 = _without(ant, lf)
        match f:
            case And(a, b):
                premise = SplitSequent(
                    _with(ant0, LabeledFormula(a, prov), LabeledFormula(b, prov)), suc
                )
                return f"and-left-{pv}", (premise,), _pass
            case Or(a, b):
                p1 = SplitSequent(_with(ant0, LabeledFormula(a, prov)), suc)
                p2 = SplitSequent(_with(ant0, LabeledFormula(b, prov)), suc)
                comb = _join_or if prov is L else _join_and
                return f"or-left-{pv}", (p1, p2), comb
            case Imp(a, b):
                if prov is not L:
                    raise ValueError(
                        "no rule for an implication with provenance R in the antecedent"
                    )
                p1 = SplitSequent(_with(ant0, LabeledFormula(Not(a), L)), suc)
                p2 = SplitSequent(
                    ant0, _with(suc, LabeledFormula(a, L), LabeledFormula(Not(b), L))
                )
                p3 = SplitSequent(_with(ant0, LabeledFormula(b, L)), suc)
                return "imp-left-L", (p1, p2, p3), _join_or
            case Not(Not(x)):
                premise = SplitSequent(ant0, _with(suc, LabeledFormula(Not(x), prov)))
                return f"dneg-left-{pv}", (premise,), _pass
            case Not(And(a, b)):
                new = LabeledFormula(Or(Not(a), Not(b)), prov)
                premise = SplitSequent(_replaced(ant, lf, new), suc)
                return f"neg-and-left-{pv}", (premise,), _pass
            case Not(Or(a, b)):
                new = LabeledFormula(And(Not(a), Not(b)), prov)
                premise = SplitSequent(_replaced(ant, lf, new), suc)
                return f"neg-or-left-{pv}", (premise,), _pass
            case Not(Imp(a, b)):
                new = LabeledFormula(And(Not(Not(a)), Not(b)), prov)
                premise = SplitSequent(_replaced(ant, lf, new), suc)
                return f"neg-imp-left-{pv}", (premise,), _pass
    else:
        suc0 = _without(suc, lf)
        match f:
            case And(a, b):
                p1 = SplitSequent(ant, _with(suc0, LabeledFormula(a, prov)))
                p2 = SplitSequent(ant, _with(suc0, LabeledFormula(b, prov)))
                comb = _join_or if prov is L else _join_and
                return f"and-right-{pv}", (p1, p2), comb
            case Or(a, b):
                premise = SplitSequent(
                    ant, _with(suc0, LabeledFormula(a, prov), LabeledFormula(b, prov))
                )
                return f"or-right-{pv}", (premise,), _pass
            case Imp(a, b):
                if prov is L:
                    p1 = SplitSequent(
                        _with(ant, LabeledFormula(a, L)),
                        _with(suc0, LabeledFormula(b, L)),
                    )
                    p2 = SplitSequent(
                        _with(ant, LabeledFormula(Not(b), L)),
                        _with(suc0, LabeledFormula(Not(a), L)),
                    )
                    return "imp-right-L", (p1, p2), _join_or
                p1 = SplitSequent(
                    ant,
                    _with(suc0, LabeledFormula(Nh(a), R), LabeledFormula(b, R)),
                )
                p2 = SplitSequent(
                    _with(ant, LabeledFormula(Not(b), R)),
                    _with(suc0, LabeledFormula(Not(a), R)),
                )
                return "imp-right-nh-R", (p1, p2), _join_and
            case Not(Not(x)):
                premise = SplitSequent(_with(ant, LabeledFormula(Not(x), prov)), suc0)
                return f"dneg-right-{pv}", (premise,), _pass
            case Not(And(a, b)):
                new = LabeledFormula(Or(Not(a), Not(b)), prov)
                premise = SplitSequent(ant, _replaced(suc, lf, new))
                return f"neg-and-right-{pv}", (premise,), _pass
            case Not(Or(a, b)):
                # The premises head toward ~a and ~b (a conjunction, not
                # the disjunction a classical reading would suggest).
                new = LabeledFormula(And(Not(a), Not(b)), prov)
                premise = SplitSequent(ant, _replaced(suc, lf, new))
                return f"neg-or-right-{pv}", (premise,), _pass
            case Not(Imp(a, b)):
                new = LabeledFormula(And(Not(Not(a)), Not(b)), prov)
                premise = SplitSequent(ant, _replaced(suc, lf, new))
                return f"neg-imp-right-{pv}", (premise,), _pass
            case Nh(Not(x)):
                new = LabeledFormula(Not(Not(x)), prov)
                premise = SplitSequent(ant, _replaced(suc, lf, new))
                return f"nh-neg-right-{pv}", (premise,), _pass
            case Nh(And(a, b)):
                new = LabeledFormula(Or(Nh(a), Nh(b)), prov)
                premise = SplitSequent(ant, _replaced(suc, lf, new))
                return f"nh-and-right-{pv}", (premise,), _pass
            case Nh(Or(a, b)):
                new = LabeledFormula(And(Nh(a), Nh(b)), prov)
                premise = SplitSequent(ant, _replaced(suc, lf, new))
                return f"nh-or-right-{pv}", (premise,), _pass
    raise ValueError(f"member {lf} is not reducible")


# ---------------------------------------------------------------------------
# Countermodels


def _irreducible_members_ok(s: SplitSequent) -> bool:
    for _, lf, in_ant in s.members():
        match lf.formula:
            case Atom(_) | Not(Atom(_)):
                pass
            case Nh(Atom(_)) if not in_ant:
                pass
            case _:
                return False
    return True


def leaf_countermodel(
    s: SplitSequent, atoms: Optional[frozenset[str]] = None
) -> dict[str, TruthValue]:
    """Countermodel of a failed leaf.

    Per atom: T if it is an antecedent member, T if its nh is a
    succedent member, NF if its negation is a succedent member, F
    otherwise.  This makes every antecedent member evaluate to T while
    the succedent disjunction stays below T.  Atoms beyond the leaf's
    vocabulary (from the optional universe) fall into the F case.
    """
    if not _irreducible_members_ok(s):
        raise ValueError("sequent has reducible members; not a failed leaf")
    ant_forms = {lf.formula for lf in s.antecedent}
    suc_forms = {lf.formula for lf in s.succedent}
    universe = s.atoms() if atoms is None else atoms
    out: dict[str, TruthValue] = {}
    for name in sorted(universe):
        a = Atom(name)
        if a in ant_forms:
            out[name] = TruthValue.T
        elif Nh(a) in suc_forms:
            out[name] = TruthValue.T
        elif Not(a) in suc_forms:
            out[name] = TruthValue.NF
        else:
            out[name] = TruthValue.F
    return out


# ---------------------------------------------------------------------------
# Deterministic backward search


def _branching(f: Formula, in_ant: bool) -> bool:
    """Does reducing this member produce more than one premise?"""
    match f:
        case Imp(_, _):
            return True
        case Or(_, _):
            return in_ant
        case And(_, _):
            return not in_ant
    return False


def _select(s: SplitSequent) -> Optional[int]:
    """Index of the member to reduce next, or None at a leaf.

    Constant handling first.  Among the reducible members, single-premise
    rules are exhausted before any branching rule fires (highest weight
    first, leftmost tie break in both tiers): premises of branching rules
    copy the whole context, so branching early duplicates all remaining
    single-premise work into every branch and can blow the proof up
    exponentially.  Any deterministic order is complete here because all
    rules are invertible.
    """
    for i, lf, in_ant in s.members():
        f = lf.formula
        if in_ant and f == Verum():
            return i
        if not in_ant and f == Falsum():
            return i
        if f._has_const and simplify_constants(f) != f:
            return i
    best, best_w = None, 0
    branch_best, branch_best_w = None, 0
    for i, lf, in_ant in s.members():
        f = lf.formula
        if _reducible(f, in_ant):
            if _branching(f, in_ant):
                if f._w > branch_best_w:
                    branch_best, branch_best_w = i, f._w
            elif f._w > best_w:
                best, best_w = i, f._w
    return best if best is not None else branch_best


def _sequent_invariants_hold(s: SplitSequent) -> bool:
    # nh only with provenance R, only in the succedent, with
    # implication-free and nh-free arguments; no R-labeled antecedent
    # member with an atom outside the scope of a negation.
    for _, lf, in_ant in s.members():
        f = lf.formula
        if f._has_nh:
            if lf.prov is not R or in_ant:
                return False
            if not f._nhok:
                return False
        if in_ant and lf.prov is R and f._unneg:
            return False
    return True


def _seq_weight(s: SplitSequent) -> int:
    return sum(weight(lf.formula) for lf in s.antecedent + s.succedent)


class _Frame:
    __slots__ = ("seq", "rule", "principal", "premises", "combiner", "children")

    def __init__(self, seq, rule, principal, premises, combiner):
        self.seq = seq
        self.rule = rule
        self.principal = principal
        self.premises = premises
        self.combiner = combiner
        self.children: list[ProofNode] = []


def prove(root: SplitSequent, contra_nn: bool = False) -> SearchOutcome:
    """Backward proof search from the root sequent.

    On success every leaf of the returned tree is an axiom and every
    node's interpolant is its rule's combination of the premise
    interpolants.  On failure, returns the first (in depth-first premise
    order) irreducible non-axiom leaf together with its countermodel,
    extended over the root's vocabulary.
    """
    assert _sequent_invariants_hold(root)
    universe = root.atoms()
    frames: list[_Frame] = []
    pending: Optional[SplitSequent] = root
    node: Optional[ProofNode] = None
    while True:
        while node is None:
            s = pending
            ax = axiom_match(s, contra_nn)
            if ax is not None:
                rule, h = ax
                if __debug__:
                    CHECK_STATS["nodes"] += 1
                    assert is_nh_nnf(h)
                node = ProofNode(s, rule, None, (), h)
                break
            i = _select(s)
            if i is None:
                return SearchOutcome(
                    leaf=s, countermodel=leaf_countermodel(s, universe)
                )
            rule, premises, combiner = expand(s, i)
            if __debug__:
                CHECK_STATS["expansions"] += 1
                w = _seq_weight(s)
                for p in premises:
                    assert _seq_weight(p) < w, f"weight not decreasing at {rule}"
                    assert _sequent_invariants_hold(p), f"invariant broken at {rule}"
            frames.append(_Frame(s, rule, i, premises, combiner))
            pending = premises[0]
        while frames:
            fr = frames[-1]
            fr.children.append(node)
            if len(fr.children) < len(fr.premises):
                pending = fr.premises[len(fr.children)]
                node = None
                break
            frames.pop()
            h = fr.combiner([c.interpolant for c in fr.children])
            if __debug__:
                CHECK_STATS["nodes"] += 1
                assert is_nh_nnf(h)
            node = ProofNode(fr.seq, fr.rule, fr.principal, tuple(fr.children), h)
        if node is not None and not frames:
            return SearchOutcome(proof=node)


# ---------------------------------------------------------------------------
# Export


def sequent_to_json(s: SplitSequent) -> dict:
    return {
        "ant": [{"f": str(lf.formula), "prov": lf.prov.value} for lf in s.antecedent],
        "suc": [{"f": str(lf.formula), "prov": lf.prov.value} for lf in s.succedent],
    }


def proof_to_json(node: ProofNode) -> dict:
    """Schema: {rule, sequent: {ant, suc}, interpolant, premises, principal}."""
    root: dict = {}
    stack = [(node, root)]
    while stack:
        n, d = stack.pop()
        d["rule"] = n.rule
        d["sequent"] = sequent_to_json(n.conclusion)
        d["interpolant"] = str(n.interpolant)
        d["principal"] = n.principal
        d["premises"] = [{} for _ in n.premises]
        stack.extend(zip(n.premises, d["premises"]))
    return root


def proof_depth(node: ProofNode) -> int:
    depth = 0
    stack = [(node, 1)]
    while stack:
        n, d = stack.pop()
        depth = max(depth, d)
        stack.extend((p, d + 1) for p in n.premises)
    return depth


def format_proof(node: ProofNode) -> str:
    """Indented text rendering, conclusion first."""
    lines: list[str] = []
    stack = [(node, 0)]
    while stack:
        n, indent = stack.pop()
        lines.append(f"{'  ' * indent}{n.rule}  [H = {n.interpolant}]  {n.conclusion}")
        stack.extend((p, indent + 1) for p in reversed(n.premises))
    return "\n".join(lines)
