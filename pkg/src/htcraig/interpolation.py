"""End-to-end Craig interpolation.

Stage 1 proves a^L => b'^R (b' is b body-normalized) and reads the root
interpolant off the proof: a formula C' in nh negation normal form with
a entails C', C' entails b, and voc(C') inside both vocabularies.

Stage 2 strengthens C' into a plain implication-only formula C: convert
C' to clauses nh(E_1) | ... | nh(E_m) | F and replace each clause by
E_1 & ... & E_m -> F.  The replacement entails its clause outright, and
whenever some nh-free formula entails C' it also entails C, so C is a
Craig interpolant whenever C' came out of stage 1.

Every result carries an oracle-checked verification report.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from typing import Optional, Union

from .calculus import ProofNode, initial_sequent, prove, proof_to_json
from .formula import (
    And,
    Atom,
    Falsum,
    Formula,
    FormulaClass,
    Imp,
    Or,
    Verum,
    classify,
    is_nh_nnf,
    voc,
)
from .normalize import body_normalize, simplify_constants, tidy, to_cnf, to_nh_nnf
from .semantics import TruthValue, entails, evaluate

__all__ = [
    "Status",
    "VerificationReport",
    "InterpolationResult",
    "stage1",
    "strengthen",
    "craig_interpolant",
    "verify_interpolant",
    "result_to_json",
]


class Status(enum.Enum):
    ENTAILS = "entails"
    NOT_ENTAILS = "not_entails"


@dataclass(frozen=True)
class VerificationReport:
    """Oracle verdicts for an interpolant (all four must hold)."""

    a_entails_c: bool
    c_entails_b: bool
    c_entails_cprime: bool
    voc_ok: bool

    @property
    def all_ok(self) -> bool:
        return (
            self.a_entails_c
            and self.c_entails_b
            and self.c_entails_cprime
            and self.voc_ok
        )


@dataclass(frozen=True)
class InterpolationResult:
    status: Status
    stage1: Optional[Formula]
    final: Optional[Formula]
    proof: Optional[ProofNode]
    countermodel: Optional[dict[str, TruthValue]]
    report: Optional[VerificationReport]
    b_normalized: Optional[Formula] = None


def _require_plain(f: Formula, who: str) -> None:
    if FormulaClass.HT not in classify(f):
        raise ValueError(f"{who} must not contain nh")


def stage1(
    a: Formula, b: Formula, contra_nn: bool = False
) -> Union[tuple[Formula, ProofNode], dict[str, TruthValue]]:
    """Preliminary interpolant of a and b, or a countermodel.

    On success returns (C', proof) where C' is the root interpolant of
    the proof of a^L => body_normalize(b)^R, passed through constant
    absorption (and renormalization, which that cannot disturb).  On
    failure returns the search countermodel, extended over the joint
    vocabulary of a and b.
    """
    _require_plain(a, "left input")
    _require_plain(b, "right input")
    b_norm = body_normalize(b)
    outcome = prove(initial_sequent(a, b_norm), contra_nn)
    if not outcome.succeeded:
        return _extend(outcome.countermodel, voc(a) | voc(b))
    cprime = to_nh_nnf(simplify_constants(outcome.proof.interpolant))
    return cprime, outcome.proof


def _extend(
    countermodel: dict[str, TruthValue], atoms: frozenset[str]
) -> dict[str, TruthValue]:
    out = {name: countermodel.get(name, TruthValue.F) for name in sorted(atoms)}
    return out


def strengthen(cprime: Formula) -> Formula:
    """Implication-only formula C with C entailing cprime.

    Clause nh(E_1) | ... | nh(E_m) | F becomes E_1 & ... & E_m -> F; a
    clause without nh atoms contributes F alone, an empty F reads as
    false, and no clauses at all read as true.  voc(C) stays inside
    voc(cprime).  The converse guarantee, that anything nh-free entailing
    cprime also entails C, is what makes this usable on stage-1 output.
    """
    if not is_nh_nnf(cprime):
        raise ValueError("strengthening expects nh negation normal form")
    conjuncts: list[Formula] = []
    for clause in to_cnf(cprime):
        rest = reduce(Or, clause.rest) if clause.rest else Falsum()
        if not clause.nh_atoms:
            conjuncts.append(rest)
            continue
        body = reduce(And, [Atom(name) for name in clause.nh_atoms])
        conjuncts.append(Imp(body, rest))
    if not conjuncts:
        return Verum()
    return reduce(And, conjuncts)


def verify_interpolant(
    a: Formula, c: Formula, b: Formula, cprime: Optional[Formula] = None
) -> VerificationReport:
    """Oracle check of the interpolant conditions; usable standalone.

    The c_entails_cprime bit is vacuously true when no stage-1 formula
    is supplied.
    """
    return VerificationReport(
        a_entails_c=entails(a, c).holds,
        c_entails_b=entails(c, b).holds,
        c_entails_cprime=True if cprime is None else entails(c, cprime).holds,
        voc_ok=voc(c) <= (voc(a) & voc(b)),
    )


def craig_interpolant(
    a: Formula, b: Formula, contra_nn: bool = False
) -> InterpolationResult:
    """Full pipeline: prove, read off C', strengthen to C, verify.

    Interpolants are reported after light cleanup (constant absorption
    and duplicate removal); the verification report is computed by the
    exhaustive oracle on every call.
    """
    _require_plain(a, "left input")
    _require_plain(b, "right input")
    b_norm = body_normalize(b)
    outcome = prove(initial_sequent(a, b_norm), contra_nn)
    if not outcome.succeeded:
        cm = _extend(outcome.countermodel, voc(a) | voc(b))
        assert evaluate(Imp(a, b), cm) != TruthValue.T
        return InterpolationResult(
            status=Status.NOT_ENTAILS,
            stage1=None,
            final=None,
            proof=None,
            countermodel=cm,
            report=None,
            b_normalized=b_norm,
        )
    cprime = tidy(to_nh_nnf(simplify_constants(outcome.proof.interpolant)))
    final = tidy(strengthen(cprime))
    report = verify_interpolant(a, final, b, cprime)
    return InterpolationResult(
        status=Status.ENTAILS,
        stage1=cprime,
        final=final,
        proof=outcome.proof,
        countermodel=None,
        report=report,
        b_normalized=b_norm,
    )


def result_to_json(result: InterpolationResult, with_proof: bool = False) -> dict:
    """Schema: {status, interpolant, stage1, countermodel, verification, proof}."""
    return {
        "status": result.status.value,
        "interpolant": None if result.final is None else str(result.final),
        "stage1": None if result.stage1 is None else str(result.stage1),
        "countermodel": None
        if result.countermodel is None
        else {k: str(v) for k, v in result.countermodel.items()},
        "verification": None
        if result.report is None
        else {
            "a_entails_c": result.report.a_entails_c,
            "c_entails_b": result.report.c_entails_b,
            "c_entails_cprime": result.report.c_entails_cprime,
            "voc_ok": result.report.voc_ok,
        },
        "proof": proof_to_json(result.proof)
        if (with_proof and result.proof is not None)
        else None,
    }
