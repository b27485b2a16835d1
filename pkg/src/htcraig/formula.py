"""Formula trees for here-and-there logic, plus parsing and printing.

The connective set is fixed: atoms, the constants false/true, negation,
the "not here" operator nh, disjunction, conjunction and implication.
Formulas are immutable values; equality is structural.

Construction precomputes the hash, the proof-search weight and a few
structural flags, so that the hot paths of the prover never rescan a
tree.  There is no interning: equal formulas may be distinct objects.
"""

from __future__ import annotations

import enum
import re

__all__ = [
    "Formula",
    "Atom",
    "Falsum",
    "Verum",
    "Not",
    "Nh",
    "Or",
    "And",
    "Imp",
    "FormulaClass",
    "Provenance",
    "ParseError",
    "parse",
    "to_text",
    "voc",
    "classify",
    "weight",
    "size",
    "is_nh_nnf",
]

ATOM_RE = re.compile(r"[a-z][a-zA-Z0-9_]*")
RESERVED = frozenset({"true", "false", "nh"})


class Formula:
    """Base class of the eight formula constructors.

    Cached attributes, filled in by every constructor:
    _hash   structural hash
    _w      proof-search weight (see weight())
    _size   node count
    _nnf    membership in nh negation normal form
    _has_nh, _has_imp, _has_const   subterm presence flags
    _unneg  some atom occurs outside the scope of any negation
    _nhok   every nh argument is implication-free and nh-free
    """

    __slots__ = (
        "_hash",
        "_w",
        "_size",
        "_nnf",
        "_has_nh",
        "_has_imp",
        "_has_const",
        "_unneg",
        "_nhok",
    )

    def __str__(self) -> str:
        return to_text(self)

    def __hash__(self) -> int:
        return self._hash


class Atom(Formula):
    __slots__ = ("name",)
    __match_args__ = ("name",)

    def __init__(self, name: str):
        if ATOM_RE.fullmatch(name) is None or name in RESERVED:
            raise ValueError(f"invalid atom name: {name!r}")
        self.name = name
        self._hash = hash(("atom", name))
        self._w = 1
        self._size = 1
        self._nnf = True
        self._has_nh = False
        self._has_imp = False
        self._has_const = False
        self._unneg = True
        self._nhok = True

    def __eq__(self, other) -> bool:
        return type(other) is Atom and other.name == self.name

    __hash__ = Formula.__hash__

    def __repr__(self) -> str:
        return f"Atom({self.name!r})"


class _Constant(Formula):
    __slots__ = ()

    def __init__(self):
        self._hash = hash(type(self).__name__)
        self._w = 1
        self._size = 1
        self._nnf = True
        self._has_nh = False
        self._has_imp = False
        self._has_const = True
        self._unneg = False
        self._nhok = True

    def __eq__(self, other) -> bool:
        return type(other) is type(self)

    __hash__ = Formula.__hash__

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


class Falsum(_Constant):
    __slots__ = ()


class Verum(_Constant):
    __slots__ = ()


class Not(Formula):
    __slots__ = ("arg",)
    __match_args__ = ("arg",)

    def __init__(self, arg: Formula):
        self.arg = arg
        self._hash = hash(("not", arg._hash))
        self._w = 3 * arg._w
        self._size = arg._size + 1
        self._nnf = type(arg) is Atom or (
            type(arg) is Not and type(arg.arg) is Atom
        )
        self._has_nh = arg._has_nh
        self._has_imp = arg._has_imp
        self._has_const = arg._has_const
        self._unneg = False
        self._nhok = arg._nhok

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (
            type(other) is Not
            and other._hash == self._hash
            and other.arg == self.arg
        )

    __hash__ = Formula.__hash__

    def __repr__(self) -> str:
        return f"Not({self.arg!r})"


class Nh(Formula):
    """"Not here": false exactly when the argument is true."""

    __slots__ = ("arg",)
    __match_args__ = ("arg",)

    def __init__(self, arg: Formula):
        self.arg = arg
        self._hash = hash(("nh", arg._hash))
        self._w = 3 * arg._w + 1
        self._size = arg._size + 1
        self._nnf = type(arg) is Atom
        self._has_nh = True
        self._has_imp = arg._has_imp
        self._has_const = arg._has_const
        self._unneg = arg._unneg
        self._nhok = not (arg._has_imp or arg._has_nh)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (
            type(other) is Nh
            and other._hash == self._hash
            and other.arg == self.arg
        )

    __hash__ = Formula.__hash__

    def __repr__(self) -> str:
        return f"Nh({self.arg!r})"


class _Binary(Formula):
    __slots__ = ("left", "right")
    __match_args__ = ("left", "right")

    _tag = ""

    def __init__(self, left: Formula, right: Formula):
        self.left = left
        self.right = right
        self._hash = hash((self._tag, left._hash, right._hash))
        self._size = left._size + right._size + 1
        self._has_nh = left._has_nh or right._has_nh
        self._has_imp = left._has_imp or right._has_imp
        self._has_const = left._has_const or right._has_const
        self._unneg = left._unneg or right._unneg
        self._nhok = left._nhok and right._nhok

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (
            type(other) is type(self)
            and other._hash == self._hash
            and other.left == self.left
            and other.right == self.right
        )

    __hash__ = Formula.__hash__

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.left!r}, {self.right!r})"


class Or(_Binary):
    __slots__ = ()
    _tag = "or"

    def __init__(self, left: Formula, right: Formula):
        super().__init__(left, right)
        self._w = left._w + right._w + 1
        self._nnf = left._nnf and right._nnf


class And(_Binary):
    __slots__ = ()
    _tag = "and"

    def __init__(self, left: Formula, right: Formula):
        super().__init__(left, right)
        self._w = left._w + right._w + 1
        self._nnf = left._nnf and right._nnf


class Imp(_Binary):
    __slots__ = ()
    _tag = "imp"

    def __init__(self, left: Formula, right: Formula):
        super().__init__(left, right)
        self._w = 3 * left._w + 3 * right._w + 2
        self._nnf = False
        self._has_imp = True


class FormulaClass(enum.Enum):
    """Grammar classes a formula can belong to.

    HT      no nh anywhere.
    NH      no implication, every nh under an even number of negations.
    NH_NNF  negation normal form over the literal shapes
            atom, ~atom, ~~atom, nh(atom) plus constants, and/or.
    HTNH    implication allowed, nh restricted as in NH.
    """

    HT = "HT"
    NH = "NH"
    NH_NNF = "NH_NNF"
    HTNH = "HTNH"


class Provenance(enum.Enum):
    """Side of origin of a formula occurrence in a split sequent."""

    L = "L"
    R = "R"


# ---------------------------------------------------------------------------
# Parsing
#
# Grammar (loosest to tightest): "->" right-assoc, "|" left-assoc,
# "&" left-assoc, then unary "~" and "nh(...)"; parentheses override.
# "true", "false" and "nh" are reserved words.


class ParseError(ValueError):
    """Syntax error with a 0-based character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at column {position})")
        self.position = position


_TOKEN_RE = re.compile(r"\s*(->|[|&~()]|[a-zA-Z_][a-zA-Z0-9_]*)")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tok: str | None = None
        self.tok_pos = 0
        self._advance()

    def _advance(self) -> None:
        m = _TOKEN_RE.match(self.text, self.pos)
        if m is None:
            rest = self.text[self.pos :].lstrip()
            if not rest:
                self.tok = None
                self.tok_pos = len(self.text)
                return
            bad = len(self.text) - len(rest)
            raise ParseError(f"unexpected character {rest[0]!r}", bad)
        self.tok = m.group(1)
        self.tok_pos = m.start(1)
        self.pos = m.end()

    def _expect(self, tok: str) -> None:
        if self.tok != tok:
            raise ParseError(f"expected {tok!r}", self.tok_pos)
        self._advance()

    def parse_formula(self) -> Formula:
        left = self.parse_or()
        if self.tok == "->":
            self._advance()
            return Imp(left, self.parse_formula())
        return left

    def parse_or(self) -> Formula:
        f = self.parse_and()
        while self.tok == "|":
            self._advance()
            f = Or(f, self.parse_and())
        return f

    def parse_and(self) -> Formula:
        f = self.parse_unary()
        while self.tok == "&":
            self._advance()
            f = And(f, self.parse_unary())
        return f

    def parse_unary(self) -> Formula:
        tok = self.tok
        if tok == "~":
            self._advance()
            return Not(self.parse_unary())
        if tok == "nh":
            self._advance()
            self._expect("(")
            arg = self.parse_formula()
            self._expect(")")
            return Nh(arg)
        if tok == "(":
            self._advance()
            f = self.parse_formula()
            self._expect(")")
            return f
        if tok == "true":
            self._advance()
            return Verum()
        if tok == "false":
            self._advance()
            return Falsum()
        if tok is not None and ATOM_RE.fullmatch(tok):
            self._advance()
            return Atom(tok)
        if tok is None:
            raise ParseError("unexpected end of input", self.tok_pos)
        raise ParseError(f"unexpected token {tok!r}", self.tok_pos)


def parse(text: str) -> Formula:
    """Parse formula text; raises ParseError on malformed or empty input."""
    if not text.strip():
        raise ParseError("empty input", 0)
    p = _Parser(text)
    f = p.parse_formula()
    if p.tok is not None:
        raise ParseError(f"trailing input {p.tok!r}", p.tok_pos)
    return f


# ---------------------------------------------------------------------------
# Printing

# Precedence levels: Imp 1, Or 2, And 3, unary/atomic 4.  A child is
# parenthesized when its level is below the context level.


def _render(f: Formula, level: int) -> str:
    match f:
        case Atom(name):
            return name
        case Falsum():
            return "false"
        case Verum():
            return "true"
        case Not(arg):
            return "~" + _render(arg, 4)
        case Nh(arg):
            return "nh(" + _render(arg, 0) + ")"
        case Or(a, b):
            s = _render(a, 2) + " | " + _render(b, 3)
            return "(" + s + ")" if level > 2 else s
        case And(a, b):
            s = _render(a, 3) + " & " + _render(b, 4)
            return "(" + s + ")" if level > 3 else s
        case Imp(a, b):
            s = _render(a, 2) + " -> " + _render(b, 1)
            return "(" + s + ")" if level > 1 else s
    raise TypeError(f"not a formula: {f!r}")


def to_text(f: Formula) -> str:
    """Minimally parenthesized text; parse(to_text(f)) == f."""
    return _render(f, 0)


# ---------------------------------------------------------------------------
# Structural queries


def voc(f: Formula) -> frozenset[str]:
    """Set of atom names occurring in f."""
    out: set[str] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        match g:
            case Atom(name):
                out.add(name)
            case Not(arg) | Nh(arg):
                stack.append(arg)
            case Or(a, b) | And(a, b) | Imp(a, b):
                stack.append(a)
                stack.append(b)
    return frozenset(out)


def size(f: Formula) -> int:
    """Number of nodes in the tree."""
    return f._size


def weight(f: Formula) -> int:
    """Termination measure for proof search.

    Atoms and constants weigh 1, and/or add 1, negation triples, nh
    triples plus 1, implication triples both sides plus 2.  The
    constants are chosen so that every rule of the sequent calculus
    strictly decreases the weight sum of a sequent (checked rule by
    rule in the test suite).
    """
    return f._w


def is_nh_nnf(f: Formula) -> bool:
    """Membership in the nh negation normal form grammar."""
    return f._nnf


def _nh_positive(f: Formula, neg_depth: int = 0) -> bool:
    """Every nh occurrence under an even number of negations."""
    if not f._has_nh:
        return True
    match f:
        case Nh(arg):
            return neg_depth % 2 == 0 and _nh_positive(arg, neg_depth)
        case Not(arg):
            return _nh_positive(arg, neg_depth + 1)
        case Or(a, b) | And(a, b) | Imp(a, b):
            return _nh_positive(a, neg_depth) and _nh_positive(b, neg_depth)
    return True


def classify(f: Formula) -> set[FormulaClass]:
    """All grammar classes f belongs to (possibly empty)."""
    out: set[FormulaClass] = set()
    if _nh_positive(f):
        out.add(FormulaClass.HTNH)
        if not f._has_imp:
            out.add(FormulaClass.NH)
            if f._nnf:
                out.add(FormulaClass.NH_NNF)
    if not f._has_nh:
        out.add(FormulaClass.HT)
        out.add(FormulaClass.HTNH)
    return out
