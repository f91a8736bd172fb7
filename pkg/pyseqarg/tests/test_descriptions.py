# Code for testing descriptions.py module of pyseqarg
# Execute via
#    $ pytest test_descriptions.py

import copy
import os
import pytest

from ..formulas import parse, Atom
from ..attacks import AttackRule
from ..aba import InferenceRule, AbaFramework, CORE_LOGIC, RULE_SYSTEM
from ..descriptions import ProblemDescription, ProblemValidationError
from ..config import parse_problem

testDataDir = os.path.join(os.path.dirname(__file__), "..", "data")


problemDict_flat = {"mode": "flat", "strict": ["p", "p -> q", "~q"], "attack": ["ucut", "ducut"],
                    "queries": ["q"], "semantics": ["grd", "prf"], "entailment": ["cup"],
                    "options": {"max-atoms": 8}}
problemDict_rules = {"mode": "aba", "strict": ["s"], "assumptions": ["a", "b"],
                     "contrary": {"a": "na", "b": "nb"},
                     "rules": [[["a", "s"], "nb"], [["b", "s"], "na"]], "minimal": True}

stringDescription_rules = ["mode: aba\n", "strict: s\n", "assumptions: a; b\n",
                           "contrary: a := na\n", "contrary: b := nb\n",
                           "rules: a, s -> nb\n", "rules: b, s -> na\n", "minimal: yes\n"]



class TestProblemDescription(object):

    def test_defaults( self ):
        problem = ProblemDescription(strict=["p"])
        assert problem.mode == "flat"
        assert problem.strict == [parse("p")]
        assert problem.assumptions == []
        assert problem.effectiveAttackRules == [AttackRule.UCUT]
        assert problem.effectiveMinimal is False
        assert problem.getCap("max-atoms", 20) == 20

    def test_effective_settings( self ):
        problem = ProblemDescription("assumptive", strict=["s"], assumptions=["p"])
        assert problem.effectiveAttackRules == [AttackRule.AT_ABA]
        assert problem.effectiveMinimal is True
        problem = ProblemDescription("aba", strict=["s"], assumptions=["p"])
        assert problem.effectiveMinimal is True
        assert problem.effectiveDeduction == CORE_LOGIC
        problem.minimal = False
        assert problem.effectiveMinimal is False
        problem.rules.append(InferenceRule([Atom("p")], Atom("q")))
        assert problem.effectiveDeduction == RULE_SYSTEM

    def test_adders( self ):
        problem = ProblemDescription(strict=["p"])
        problem.addQuery("q")
        problem.addQuery(parse("q"))
        problem.addAttackRule("UCUT")
        problem.addAttackRule(AttackRule.UCUT)
        problem.addSemantics("stb")
        problem.addEntailmentMode("wcap")
        assert problem.queries == [parse("q")]
        assert problem.attackRules == ["ucut"]
        assert problem.semantics == ["stb"]
        assert problem.entailment == ["wcap"]

    def test_adders_bad( self ):
        problem = ProblemDescription(strict=["p"])
        with pytest.raises(ValueError):
            problem.addAttackRule("rebut")
        with pytest.raises(ValueError):
            problem.addSemantics("adm")
        with pytest.raises(ValueError):
            problem.addEntailmentMode("some")
        with pytest.raises(ValueError):
            problem.addQuery("p &")

    def test_options( self ):
        problem = ProblemDescription(strict=["p"], options={"max-premises": 6})
        problem.updateOptions({"max-classes": "9"})
        assert problem.getCap("max-premises", 12) == 6
        assert problem.getCap("max-classes", 20) == 9
        with pytest.raises(ValueError):
            problem.updateOptions({"max-depth": 3})
        with pytest.raises(ValueError):
            problem.updateOptions({"max-atoms": 0})

    def test_bad_constructor( self ):
        with pytest.raises(ValueError):
            ProblemDescription("modal")
        with pytest.raises(ValueError):
            ProblemDescription("aba", deduction="modal")

    def test_contraryMap( self ):
        problem = ProblemDescription("assumptive", strict=["s"], assumptions=["p", "q"],
                                     contrary={"p": "s"})
        contrary = problem.contraryMap()
        assert contrary[parse("p")] == parse("s")
        assert contrary[parse("q")] == parse("~q")



class TestValidation(object):

    def test_valid( self ):
        ProblemDescription.dict_to_ProblemDescription(problemDict_flat).validate()
        ProblemDescription.dict_to_ProblemDescription(problemDict_rules).validate()

    def test_invalid( self ):
        badProblems = [ProblemDescription("flat", strict=["p"], assumptions=["q"]),
                       ProblemDescription("assumptive", strict=["p"], assumptions=["p"]),
                       ProblemDescription("assumptive", strict=["p"], assumptions=["q"],
                                          contrary={"r": "~r"}),
                       ProblemDescription("assumptive", strict=["p"], assumptions=["q"],
                                          rules=[InferenceRule([Atom("q")], Atom("r"))]),
                       ProblemDescription("assumptive", strict=["p"], assumptions=["q"],
                                          deduction="core-logic"),
                       ProblemDescription("aba", strict=["p"], assumptions=["q"], deduction="core-logic",
                                          rules=[InferenceRule([Atom("q")], Atom("r"))]),
                       ProblemDescription("aba", strict=["p"], assumptions=["q"], attackRules=["ucut"])]
        for problem in badProblems:
            with pytest.raises(ProblemValidationError):
                problem.validate()



class TestConversions(object):

    def test_dict_round_trip( self ):
        for problemDict in [problemDict_flat, problemDict_rules]:
            problem = ProblemDescription.dict_to_ProblemDescription(problemDict)
            newProblem = ProblemDescription.dict_to_ProblemDescription(problem.getProblemAsDict())
            assert newProblem == problem

    def test_getStringDescription( self ):
        problem = ProblemDescription.dict_to_ProblemDescription(problemDict_rules)
        assert problem.getStringDescription() == stringDescription_rules
        assert str(problem) == "".join(stringDescription_rules)
        assert parse_problem(problem.getStringDescription()) == problem

    def test_empty_strict_line( self ):
        problem = ProblemDescription("assumptive", assumptions=["p"])
        lines = problem.getStringDescription()
        assert "strict:\n" in lines
        assert parse_problem(lines) == problem

    def test_data_files_reparse( self ):
        for fileName in ["flat_example.txt", "aba_example.txt", "assumptive_example.txt",
                         "flat_two_cycle.txt", "rule_system_example.txt",
                         "rule_system_no_contraposition.txt"]:
            problem = ProblemDescription.load(os.path.join(testDataDir, fileName))
            assert parse_problem(problem.getStringDescription()) == problem

    def test_deepcopy( self ):
        problem = ProblemDescription.dict_to_ProblemDescription(problemDict_flat)
        problem2 = copy.deepcopy(problem)
        assert problem2 == problem
        problem2.addQuery("~p")
        problem2.updateOptions({"max-atoms": 4})
        assert problem2 != problem
        assert len(problem.queries) == 1
        assert problem.getCap("max-atoms", 0) == 8

    def test_getAbaFramework( self ):
        problem = ProblemDescription.dict_to_ProblemDescription(problemDict_rules)
        AF = problem.getAbaFramework()
        assert isinstance(AF, AbaFramework)
        assert AF.deduction == RULE_SYSTEM
        assert AF.contrary[Atom("b")] == Atom("nb")
        assert len(AF.rules) == 2
        problem = ProblemDescription("assumptive", strict=["s"], assumptions=["p"])
        AF = problem.getAbaFramework(maxAtoms=6)
        assert AF.isCoreLogic
        assert AF.maxAtoms == 6
        with pytest.raises(ProblemValidationError):
            ProblemDescription("flat", strict=["p"]).getAbaFramework()
