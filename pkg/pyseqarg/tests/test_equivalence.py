# Code for testing equivalence.py module of pyseqarg
# Execute via
#    $ pytest test_equivalence.py

import os
import pytest
import numpy as np

from ..formulas import parse, Atom, CapExceededError
from ..aba import AbaFramework, InferenceRule, build_aba_framework, translate_to_sequent
from ..aba import aba_default_pool, check_contraposition
from ..entailment import EntailmentMode
from ..config import parse_problem_file
from ..reasoner import Reasoner
from ..equivalence import CheckReport, check_problem, check_aba_instance, check_flat_instance
from ..equivalence import check_argument_bijection, check_attack_correspondence
from ..equivalence import check_mcs_characterization, check_complete_consistency
from ..equivalence import check_mcs_stable_correspondence
from ..utils import random_aba_instance, random_rule_system

testDataDir = os.path.join(os.path.dirname(__file__), "..", "data")


def formulas( *texts ):
    return [parse(t) for t in texts]

def load_reasoner( fileName ):
    return Reasoner(parse_problem_file(os.path.join(testDataDir, fileName)))

def lemma_violations( AF ):
    pool = aba_default_pool(AF)
    native = build_aba_framework(AF, pool)
    translated = translate_to_sequent(AF, pool)
    return (check_argument_bijection(native, translated) +
            check_attack_correspondence(native, translated) +
            check_mcs_characterization(AF, translated) +
            check_complete_consistency(AF, translated) +
            check_mcs_stable_correspondence(AF, translated))


aba_s = AbaFramework(formulas("s"), formulas("p", "q", "~p | ~q", "~p | r", "~q | r"))
a, b, s, na, nb = [Atom(name) for name in ["a", "b", "s", "na", "nb"]]
rules_ab = AbaFramework([s], [a, b], {a: na, b: nb},
                        rules=[InferenceRule([a, s], nb), InferenceRule([b, s], na)])
rules_oneway = AbaFramework([s], [a, b], {a: na, b: nb}, rules=[InferenceRule([a], nb)])

nRandomInstances = 200
nRuleSystems = 60



class TestCheckReport(object):

    def test_rows_and_text( self ):
        report = CheckReport()
        report.addRow("prf", EntailmentMode.CAP, parse("r"), False, False, True, "PASS", "FAIL")
        report.addRow("grd", EntailmentMode.CUP, parse("r"), True, True, None, "PASS", "-")
        report.notes.append("something to say")
        assert report.failed
        assert len(report.failures()) == 1
        assert report.failures()[0]["semantics"] == "prf"
        lines = report.getStringDescription()
        assert lines[0] == "# semantics mode query: aba sequent mcs | translation mcs-agreement\n"
        assert lines[1] == "prf cap r: no no yes | PASS FAIL\n"
        assert lines[2] == "grd cup r: yes yes - | PASS -\n"
        assert lines[3] == "# something to say\n"
        assert str(report) == "".join(lines)

    def test_empty( self ):
        report = CheckReport()
        assert not report.failed
        assert report.failures() == []



class TestCheckInstances(object):

    def test_core_logic_example( self ):
        report = check_aba_instance(aba_s, formulas("r", "p", "s & (~q | r)"))
        assert not report.failed
        assert len(report.rows) == 3 * 4 * 3
        for row in report.rows:
            assert row["translation"] == "PASS"
            if row["semantics"] in ["prf", "stb"]:
                assert row["mcsAgreement"] == "PASS"
            else:
                assert row["mcsAgreement"] == "-"
                assert row["mcs"] is None
        assert report.notes == []

    def test_default_queries( self ):
        report = check_aba_instance(aba_s, semantics=["stb"], modes=[EntailmentMode.WCAP])
        assert [row["query"] for row in report.rows] == [f.text for f in aba_default_pool(aba_s)]
        assert not report.failed

    def test_rule_systems( self ):
        report = check_aba_instance(rules_ab)
        assert not report.failed
        assert all(row["mcsAgreement"] in ["PASS", "-"] for row in report.rows)
        report = check_aba_instance(rules_oneway)
        assert all(row["translation"] == "PASS" for row in report.rows)
        assert set(row["mcsAgreement"] for row in report.rows) == set(["SKIP", "-"])
        assert report.notes[0].startswith("contraposition fails: ")
        assert not report.failed

    def test_flat_instance( self ):
        reasoner = load_reasoner("flat_example.txt")
        report = check_flat_instance(reasoner.getFramework(), formulas("q", "~p", "q | ~q"))
        assert not report.failed
        for row in report.rows:
            assert row["translation"] == "-"
            assert row["aba"] is None



class TestCheckProblem(object):

    def test_data_files( self ):
        for fileName in ["flat_example.txt", "flat_two_cycle.txt", "aba_example.txt",
                         "assumptive_example.txt", "rule_system_example.txt"]:
            report = check_problem(load_reasoner(fileName))
            assert not report.failed
            assert "SKIP" not in [row["mcsAgreement"] for row in report.rows]

    def test_no_contraposition( self ):
        report = check_problem(load_reasoner("rule_system_no_contraposition.txt"))
        assert not report.failed
        assert "SKIP" in [row["mcsAgreement"] for row in report.rows]
        assert len(report.notes) == 1

    def test_selection( self ):
        report = check_problem(load_reasoner("aba_example.txt"), semantics=["prf"],
                               modes=[EntailmentMode.CAP])
        assert len(report.rows) == 1
        row = report.rows[0]
        assert (row["semantics"], row["mode"], row["query"]) == ("prf", "cap", "r")
        assert (row["aba"], row["sequent"], row["mcs"]) == (False, False, False)

    def test_flat_uses_reasoner_caps( self ):
        reasoner = load_reasoner("flat_example.txt")
        framework = reasoner.getFramework()
        # three strict formulas against a cap of two
        reasoner.maxPremises = 2
        with pytest.raises(CapExceededError):
            check_problem(reasoner)
        with pytest.raises(CapExceededError):
            check_flat_instance(framework, formulas("q"), maxPremises=2)

    def test_flat_default_queries( self ):
        report = check_problem(load_reasoner("flat_two_cycle.txt"))
        assert set(row["query"] for row in report.rows) == set(["p", "~p"])



class TestStructuralChecks(object):

    def test_example( self ):
        assert lemma_violations(aba_s) == []
        assert lemma_violations(rules_ab) == []

    def test_chained_rules( self ):
        c = Atom("c")
        AF = AbaFramework([s], [a, b], {a: na, b: nb},
                          rules=[InferenceRule([a], c), InferenceRule([c, s], nb),
                                 InferenceRule([b, s], na)])
        pool = aba_default_pool(AF)
        native = build_aba_framework(AF, pool)
        translated = translate_to_sequent(AF, pool)
        assert "a |~ s => nb" in [arg.text for arg in translated.arguments]
        assert check_argument_bijection(native, translated) == []
        assert check_attack_correspondence(native, translated) == []

    def test_bijection_detects_missing_arguments( self ):
        pool = aba_default_pool(aba_s)
        native = build_aba_framework(aba_s, pool)
        translated = translate_to_sequent(aba_s, pool, minimal=False)
        problems = check_argument_bijection(native, translated)
        assert len(problems) > 0
        assert any(p.startswith("sequent argument without ABA counterpart") for p in problems)
        # every native argument is still there, but the extra ones bring extra attacks
        assert any(p.endswith("(sequent only)") for p in check_attack_correspondence(native, translated))

    def test_characterization_needs_contraposition( self ):
        # without contraposition {b} is maximal, but nothing concludes na from b
        pool = aba_default_pool(rules_oneway)
        translated = translate_to_sequent(rules_oneway, pool)
        assert not check_contraposition(rules_oneway)
        assert len(check_mcs_characterization(rules_oneway, translated)) > 0



class TestPropertySuites(object):

    def test_random_core_logic( self ):
        rng = np.random.default_rng(1234)
        for trial in range(nRandomInstances):
            AF = random_aba_instance(rng)
            report = check_aba_instance(AF)
            assert report.failures() == [], str(AF) + str(report)
            assert report.notes == []
            assert lemma_violations(AF) == [], str(AF)

    def test_random_rule_systems( self ):
        rng = np.random.default_rng(99)
        for trial in range(nRuleSystems):
            AF = random_rule_system(rng)
            report = check_aba_instance(AF)
            for row in report.rows:
                assert row["translation"] == "PASS", str(AF) + str(report)
            if check_contraposition(AF):
                assert not report.failed, str(AF) + str(report)
                assert lemma_violations(AF) == [], str(AF)
