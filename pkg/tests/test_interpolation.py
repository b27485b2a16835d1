import json
import random

import pytest

from conftest import random_ht, random_nh_nnf
from htcraig.formula import (
    And,
    Atom,
    Falsum,
    FormulaClass,
    Imp,
    Nh,
    Not,
    Or,
    Verum,
    classify,
    is_nh_nnf,
    voc,
)
from htcraig.interpolation import (
    Status,
    craig_interpolant,
    result_to_json,
    stage1,
    strengthen,
    verify_interpolant,
)
from htcraig.normalize import body_normalize
from htcraig.semantics import TruthValue, entails, equivalent, evaluate

p, q, r = Atom("p"), Atom("q"), Atom("r")


class TestStage1:
    def test_two_rule_proof(self):
        cprime, proof = stage1(q, Imp(p, q))
        assert cprime == And(q, q)
        assert proof.rule == "imp-right-nh-R"

    def test_contradiction_gives_falsum(self):
        cprime, _ = stage1(And(q, Not(q)), r)
        assert cprime == Falsum()

    def test_identity_implication(self):
        f = Imp(p, q)
        cprime, _ = stage1(f, f)
        assert is_nh_nnf(cprime)
        assert entails(f, cprime).holds and entails(cprime, f).holds
        assert voc(cprime) <= {"p", "q"}

    def test_failure_returns_extended_countermodel(self):
        res = stage1(Not(Not(p)), p)
        assert isinstance(res, dict)
        assert res == {"p": TruthValue.NF}
        res = stage1(p, And(q, r))
        assert isinstance(res, dict)
        assert set(res) == {"p", "q", "r"}

    def test_root_conditions(self):
        rng = random.Random(41)
        found = 0
        for _ in range(400):
            a, b = random_ht(rng, 3), random_ht(rng, 3)
            res = stage1(a, b)
            if isinstance(res, dict):
                continue
            found += 1
            cprime, proof = res
            assert is_nh_nnf(cprime)
            assert entails(a, cprime).holds
            assert entails(cprime, b).holds
            assert voc(cprime) <= (voc(a) & voc(b))
        assert found > 80

    def test_rejects_nh_inputs(self):
        with pytest.raises(ValueError):
            stage1(Nh(p), p)
        with pytest.raises(ValueError):
            stage1(p, Nh(p))


class TestStrengthen:
    def test_single_clause(self):
        e, f = Atom("e"), Atom("f")
        assert strengthen(Or(Nh(e), f)) == Imp(e, f)

    def test_no_nh(self):
        assert strengthen(Atom("f")) == Atom("f")

    def test_bare_nh(self):
        a = Atom("a")
        got = strengthen(Nh(a))
        assert got == Imp(a, Falsum())
        assert entails(got, Nh(a)).holds
        assert equivalent(got, Not(a)).holds

    def test_constants(self):
        assert strengthen(Verum()) == Verum()
        assert strengthen(Falsum()) == Falsum()

    def test_multi_clause(self):
        f = And(Or(Nh(p), q), Or(Nh(p), Or(Nh(q), Not(r))))
        got = strengthen(f)
        assert got == And(Imp(p, q), Imp(And(p, q), Not(r)))

    def test_rejects_non_nnf(self):
        with pytest.raises(ValueError):
            strengthen(Imp(p, q))

    def test_unconditional_direction(self):
        rng = random.Random(42)
        for _ in range(500):
            x = random_nh_nnf(rng, 4)
            c = strengthen(x)
            assert entails(c, x).holds, (str(x), str(c))
            assert voc(c) <= voc(x)
            assert FormulaClass.HT in classify(c)


class TestCraigInterpolant:
    def test_projection(self):
        res = craig_interpolant(And(p, q), Or(p, r))
        assert res.status is Status.ENTAILS
        assert equivalent(res.final, p).holds
        assert voc(res.final) <= {"p"}
        assert res.report.all_ok

    def test_non_entailment(self):
        res = craig_interpolant(Not(Not(p)), p)
        assert res.status is Status.NOT_ENTAILS
        assert res.countermodel == {"p": TruthValue.NF}
        assert res.report is None and res.final is None
        assert evaluate(Imp(Not(Not(p)), p), res.countermodel) != TruthValue.T
        assert not entails(Not(Not(p)), p).holds

    def test_identity(self):
        res = craig_interpolant(p, p)
        assert res.status is Status.ENTAILS
        assert entails(p, res.final).holds and entails(res.final, p).holds

    def test_disjoint_vocabulary(self):
        res = craig_interpolant(And(q, Not(q)), r)
        assert res.final == Falsum()
        assert res.report.all_ok
        res = craig_interpolant(p, Imp(r, r))
        assert res.final == Verum()
        assert res.report.all_ok

    def test_b_normalized_recorded(self):
        res = craig_interpolant(q, Imp(Imp(p, q), r))
        assert res.b_normalized == body_normalize(Imp(Imp(p, q), r))

    def test_stage1_field_properties(self):
        res = craig_interpolant(And(p, q), Or(p, r))
        assert is_nh_nnf(res.stage1)
        assert entails(res.final, res.stage1).holds

    def test_deterministic(self):
        a, b = Imp(p, q), Or(Imp(p, q), r)
        r1 = craig_interpolant(a, b)
        r2 = craig_interpolant(a, b)
        assert r1.final == r2.final and r1.stage1 == r2.stage1

    def test_contra_nn_variant_still_verified(self):
        res = craig_interpolant(And(p, q), Or(p, r), contra_nn=True)
        assert res.status is Status.ENTAILS and res.report.all_ok


class TestVerifyInterpolant:
    def test_good(self):
        rep = verify_interpolant(And(p, q), p, Or(p, r))
        assert rep.all_ok

    def test_bad_left(self):
        rep = verify_interpolant(p, q, Or(q, p))
        assert not rep.a_entails_c

    def test_identity_triple(self):
        f = Imp(p, q)
        rep = verify_interpolant(f, f, f)
        assert rep.all_ok

    def test_vocabulary_violation(self):
        rep = verify_interpolant(p, And(p, Or(r, Not(r))), p)
        assert not rep.voc_ok

    def test_cprime_check(self):
        rep = verify_interpolant(And(p, q), p, Or(p, r), cprime=Or(p, Falsum()))
        assert rep.c_entails_cprime
        rep = verify_interpolant(And(p, q), p, Or(p, r), cprime=Nh(p))
        assert not rep.c_entails_cprime


class TestJson:
    def test_result_schema(self):
        res = craig_interpolant(And(p, q), Or(p, r))
        data = result_to_json(res)
        json.dumps(data)
        assert set(data) == {
            "status",
            "interpolant",
            "stage1",
            "countermodel",
            "verification",
            "proof",
        }
        assert data["status"] == "entails"
        assert data["countermodel"] is None
        assert set(data["verification"]) == {
            "a_entails_c",
            "c_entails_b",
            "c_entails_cprime",
            "voc_ok",
        }

    def test_result_schema_failure(self):
        data = result_to_json(craig_interpolant(Not(Not(p)), p))
        assert data["status"] == "not_entails"
        assert data["interpolant"] is None
        assert data["countermodel"] == {"p": "NF"}

    def test_with_proof(self):
        res = craig_interpolant(q, Imp(p, q))
        data = result_to_json(res, with_proof=True)
        assert data["proof"]["rule"] == "imp-right-nh-R"


class TestNhProvenance:
    @staticmethod
    def _leaf_rules(proof):
        rules = set()
        stack = [proof]
        while stack:
            n = stack.pop()
            if n.premises:
                stack.extend(n.premises)
            else:
                rules.add(n.rule)
        return rules

    def test_identity_implication_uses_nh(self):
        f = Imp(p, q)
        cprime, proof = stage1(f, f)
        assert cprime._has_nh
        assert is_nh_nnf(cprime)
        assert "ax-nh-excl-LR" in self._leaf_rules(proof)

    def test_nh_in_stage1_comes_from_the_nh_axiom(self):
        # The succedent-implication rule introduces nh into sequents, but
        # only the exclusion axiom puts nh into an interpolant.
        pairs = [(Imp(p, q), Imp(p, q)), (Imp(q, r), Or(Imp(q, r), p))]
        rng = random.Random(44)
        pairs += [(random_ht(rng, 4), random_ht(rng, 4)) for _ in range(600)]
        with_nh = 0
        for a, b in pairs:
            res = stage1(a, b)
            if isinstance(res, dict):
                continue
            cprime, proof = res
            if cprime._has_nh:
                with_nh += 1
                assert "ax-nh-excl-LR" in self._leaf_rules(proof), (str(a), str(b))
        assert with_nh >= 2


class TestPipelineRandom:
    def test_random_end_to_end(self):
        rng = random.Random(43)
        entailing = 0
        for _ in range(400):
            a, b = random_ht(rng, 3), random_ht(rng, 3)
            res = craig_interpolant(a, b)
            oracle = entails(a, b)
            assert (res.status is Status.ENTAILS) == oracle.holds
            if res.status is Status.ENTAILS:
                entailing += 1
                assert res.report.all_ok, (str(a), str(b))
                assert FormulaClass.HT in classify(res.final)
            else:
                assert evaluate(Imp(a, b), res.countermodel) != TruthValue.T
        assert entailing > 80
