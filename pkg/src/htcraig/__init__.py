"""Craig interpolation for propositional here-and-there logic (Goedel G3).

Interpolants are computed by backward proof search in an interpolating
split-sequent calculus and then strengthened into implication-only
formulas; every result can be checked against the exhaustive 3-valued
semantic oracle in htcraig.semantics.
"""

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
    ParseError,
    Provenance,
    Verum,
    classify,
    parse,
    to_text,
    voc,
    weight,
)
from .semantics import (
    Assignment,
    EntailmentVerdict,
    TruthValue,
    entails,
    equivalent,
    evaluate,
    truth_table,
)
from .normalize import (
    NhClause,
    body_normalize,
    push_negations,
    push_nh,
    simplify_constants,
    to_cnf,
    to_nh_nnf,
)
from .calculus import (
    LabeledFormula,
    ProofNode,
    SearchOutcome,
    SplitSequent,
    axiom_match,
    expand,
    initial_sequent,
    leaf_countermodel,
    prove,
)
from .interpolation import (
    InterpolationResult,
    Status,
    VerificationReport,
    craig_interpolant,
    stage1,
    strengthen,
    verify_interpolant,
)

__version__ = "0.1.0"
