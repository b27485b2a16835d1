import random
from functools import reduce

import pytest

from conftest import random_ht, random_nh, random_nh_nnf
from htcraig.formula import (
    And,
    Atom,
    Falsum,
    Imp,
    Nh,
    Not,
    Or,
    Verum,
    is_nh_nnf,
    size,
    voc,
)
from htcraig.normalize import (
    NhClause,
    NormalizationError,
    PolarityError,
    body_normalize,
    is_body_normalized,
    push_negations,
    push_nh,
    simplify_constants,
    tidy,
    to_cnf,
    to_nh_nnf,
)
from htcraig.semantics import equivalent

p, q, r = Atom("p"), Atom("q"), Atom("r")


def clauses_formula(clauses):
    if not clauses:
        return Verum()
    return reduce(And, [c.to_formula() for c in clauses])


class TestPushNegations:
    def test_negated_implication(self):
        assert push_negations(Not(Imp(p, q))) == And(Not(Not(p)), Not(q))

    def test_triple_negation(self):
        assert push_negations(Not(Not(Not(p)))) == Not(p)

    def test_literal_fixpoint(self):
        assert push_negations(Not(p)) == Not(p)

    def test_negative_nh_rejected(self):
        with pytest.raises(PolarityError):
            push_negations(Not(Nh(p)))

    def test_double_negated_nh_collapses(self):
        assert push_negations(Not(Not(Nh(p)))) == Nh(p)

    def test_random_equivalent(self):
        rng = random.Random(21)
        for _ in range(200):
            f = random_ht(rng, 4)
            g = push_negations(f)
            assert equivalent(f, g).holds, (str(f), str(g))


class TestPushNh:
    def test_over_and(self):
        assert push_nh(Nh(And(p, q))) == Or(Nh(p), Nh(q))

    def test_over_negation(self):
        assert push_nh(Nh(Not(p))) == Not(Not(p))

    def test_of_falsum(self):
        assert push_nh(Nh(Falsum())) == Verum()

    def test_nested_nh_rejected(self):
        with pytest.raises(NormalizationError):
            push_nh(Nh(Nh(p)))

    def test_imp_in_argument_rejected(self):
        with pytest.raises(NormalizationError):
            push_nh(Nh(Imp(p, q)))


class TestToNhNnf:
    def test_examples(self):
        assert to_nh_nnf(Not(Or(p, q))) == And(Not(p), Not(q))
        assert to_nh_nnf(Nh(Or(p, Not(q)))) == And(Nh(p), Not(Not(q)))
        assert to_nh_nnf(p) == p

    def test_rejects_implication(self):
        with pytest.raises(NormalizationError):
            to_nh_nnf(Imp(p, q))

    def test_random_class_and_equivalence(self):
        rng = random.Random(22)
        for _ in range(300):
            f = random_nh(rng, 4)
            g = to_nh_nnf(f)
            assert is_nh_nnf(g), (str(f), str(g))
            assert equivalent(f, g).holds, (str(f), str(g))

    def test_linear_bound_spot(self):
        rng = random.Random(23)
        for _ in range(300):
            f = random_nh(rng, 4)
            assert size(to_nh_nnf(f)) <= 4 * size(f)


class TestBodyNormalize:
    def test_core_rewrite(self):
        got = body_normalize(Imp(Imp(p, q), r))
        want = And(And(Imp(Not(p), r), Imp(q, r)), Or(Or(r, p), Not(q)))
        assert got == want

    def test_fixpoints(self):
        assert body_normalize(Imp(p, q)) == Imp(p, q)
        assert body_normalize(And(Imp(p, q), r)) == And(Imp(p, q), r)

    def test_negated_implication_untouched(self):
        # An implication under a negation is not in any antecedent.
        f = Not(Imp(p, q))
        assert body_normalize(f) == f

    def test_rejects_nh(self):
        with pytest.raises(NormalizationError):
            body_normalize(Nh(p))

    def test_random_properties(self):
        rng = random.Random(24)
        for _ in range(300):
            f = random_ht(rng, 4)
            g = body_normalize(f)
            assert is_body_normalized(g), (str(f), str(g))
            assert equivalent(f, g).holds, (str(f), str(g))
            assert voc(g) <= voc(f)

    def test_deep_nesting_stays_tractable(self):
        f = p
        for other in (q, r, Atom("s"), q, r):
            f = Imp(f, other)
        g = body_normalize(f)
        assert is_body_normalized(g)
        assert size(g) < 5000
        assert equivalent(f, g).holds

    def test_is_body_normalized_scan(self):
        assert is_body_normalized(Imp(p, Imp(q, r)))
        assert not is_body_normalized(Imp(Imp(p, q), r))
        assert not is_body_normalized(Imp(And(Imp(p, q), r), q))
        assert not is_body_normalized(Not(Imp(Imp(p, q), r)))


class TestToCnf:
    def test_distribution(self):
        clauses = to_cnf(Or(Nh(p), And(q, r)))
        assert clauses == [NhClause(("p",), (q,)), NhClause(("p",), (r,))]

    def test_single_literal(self):
        assert to_cnf(p) == [NhClause((), (p,))]

    def test_already_cnf(self):
        f = And(Or(Nh(p), q), Not(Not(r)))
        assert to_cnf(f) == [NhClause(("p",), (q,)), NhClause((), (Not(Not(r)),))]

    def test_constants(self):
        assert to_cnf(Verum()) == []
        assert to_cnf(Falsum()) == [NhClause((), ())]
        assert to_cnf(Or(p, Verum())) == []
        assert to_cnf(Or(p, Falsum())) == [NhClause((), (p,))]

    def test_rejects_non_nnf(self):
        with pytest.raises(NormalizationError):
            to_cnf(Not(And(p, q)))

    def test_roundtrip_equivalence(self):
        rng = random.Random(25)
        for _ in range(300):
            f = random_nh_nnf(rng, 4)
            g = clauses_formula(to_cnf(f))
            assert equivalent(f, g).holds, (str(f), str(g))

    def test_no_fresh_atoms(self):
        rng = random.Random(26)
        for _ in range(200):
            f = random_nh_nnf(rng, 4)
            assert voc(clauses_formula(to_cnf(f))) <= voc(f)

    def test_clause_formula_empty_is_false(self):
        assert NhClause((), ()).to_formula() == Falsum()
        assert NhClause(("e",), (Atom("f"),)).to_formula() == Or(Nh(Atom("e")), Atom("f"))


class TestSimplifyConstants:
    def test_examples(self):
        assert simplify_constants(And(p, Verum())) == p
        assert simplify_constants(Imp(Falsum(), p)) == Verum()
        assert simplify_constants(Or(p, q)) == Or(p, q)
        assert simplify_constants(Imp(p, Falsum())) == Not(p)
        assert simplify_constants(Nh(Verum())) == Falsum()

    def test_idempotent_and_equivalent(self):
        rng = random.Random(27)
        for _ in range(300):
            f = random_ht(rng, 4, p_const=0.3)
            g = simplify_constants(f)
            assert simplify_constants(g) == g
            assert equivalent(f, g).holds

    def test_tidy_removes_duplicates(self):
        assert tidy(And(q, q)) == q
        assert tidy(Or(p, Or(q, p))) == Or(p, q)
        rng = random.Random(28)
        for _ in range(200):
            f = random_ht(rng, 4)
            g = tidy(f)
            assert equivalent(f, g).holds
            assert size(g) <= size(f)
