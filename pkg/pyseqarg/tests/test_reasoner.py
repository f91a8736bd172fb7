# Code for testing reasoner.py module of pyseqarg
# Execute via
#    $ pytest test_reasoner.py

import os
import pytest

from ..formulas import parse, Atom, CapExceededError
from ..attacks import AttackRule
from ..descriptions import ProblemDescription, ProblemValidationError
from ..config import parse_problem_file
from ..entailment import EntailmentMode
from ..reasoner import Reasoner

testDataDir = os.path.join(os.path.dirname(__file__), "..", "data")


def load( fileName ):
    return parse_problem_file(os.path.join(testDataDir, fileName))


problemDict_twoCycle = {"mode": "flat", "strict": ["p", "~p"]}



class TestReasonerSetup(object):

    def test_from_dict( self ):
        reasoner = Reasoner(problemDict_twoCycle)
        assert reasoner.mode == "flat"
        assert reasoner.getProblemDescription().strict == [parse("p"), parse("~p")]
        assert reasoner.maxClasses == 20

    def test_bad_input( self ):
        with pytest.raises(ValueError):
            Reasoner("strict: p")
        with pytest.raises(ProblemValidationError):
            Reasoner({"mode": "flat", "strict": ["p"], "assumptions": ["q"]})

    def test_caps( self ):
        problem = load("flat_two_cycle.txt")
        problem.updateOptions({"max-classes": 5, "max-atoms": 7})
        reasoner = Reasoner(problem)
        assert reasoner.maxClasses == 5
        assert reasoner.maxAtoms == 7
        reasoner = Reasoner(problem, maxClasses=1)
        assert reasoner.maxClasses == 1
        with pytest.raises(CapExceededError):
            reasoner.getExtensions("prf")

    def test_problem_is_copied( self ):
        problem = load("flat_example.txt")
        reasoner = Reasoner(problem)
        reasoner.addQuery("p & ~q")
        assert len(problem.queries) == 3
        assert len(reasoner.getProblemDescription().queries) == 4



class TestFlatReasoning(object):

    def test_framework( self ):
        reasoner = Reasoner(load("flat_example.txt"))
        framework = reasoner.getFramework()
        assert reasoner.getFramework() is framework
        assert framework.rules == (AttackRule.UCUT,)
        assert reasoner.getUniverse() is framework.universe
        assert not framework.universe.minimal
        assert parse("~(p & (p -> q))") in reasoner.getPool()

    def test_entailment( self ):
        reasoner = Reasoner(load("flat_example.txt"))
        result = reasoner.queryEntailment("grd", "cap", "q | ~q")
        assert result.entailed is True
        assert result.mode is EntailmentMode.CAP
        for sem in ["cmp", "prf", "stb"]:
            assert reasoner.queryEntailment(sem, "cap", "q").entailed is False
            assert reasoner.queryEntailment(sem, "cup", "q").entailed is True

    def test_new_query_rebuilds( self ):
        reasoner = Reasoner(load("flat_example.txt"))
        framework = reasoner.getFramework()
        phi = parse("p & ~q")
        assert phi not in framework.universe.pool
        result = reasoner.queryEntailment("prf", "cup", phi)
        assert result.entailed is True
        assert reasoner.getFramework() is not framework
        assert phi in reasoner.getUniverse().pool
        # a query already in the pool keeps the framework
        framework = reasoner.getFramework()
        reasoner.addQuery("q")
        assert reasoner.getFramework() is framework

    def test_two_cycle( self ):
        reasoner = Reasoner(problemDict_twoCycle)
        assert len(reasoner.getExtensions("prf")) == 2
        assert reasoner.queryEntailment("prf", "cap", "p").entailed is False
        assert reasoner.queryEntailment("prf", "cup", "p").entailed is True

    def test_mcs( self ):
        reasoner = Reasoner(load("flat_example.txt"))
        family = reasoner.getMcsFamily()
        assert len(family) == 3
        assert not family.isAssumptive
        assert reasoner.getMinimalConflicts() == [(parse("p"), parse("p -> q"), parse("~q"))]
        assert reasoner.getFree() == ()

    def test_no_aba_framework( self ):
        with pytest.raises(ProblemValidationError):
            Reasoner(load("flat_example.txt")).getAbaFramework()



class TestAssumptiveReasoning(object):

    def test_aba_problem( self ):
        reasoner = Reasoner(load("aba_example.txt"))
        assert not reasoner.isRuleSystem
        assert reasoner.getUniverse().minimal
        assert len(reasoner.getExtensions("stb")) == 3
        assert reasoner.queryEntailment("stb", "wcap", "r").entailed is True
        assert reasoner.queryEntailment("stb", "cap", "r").entailed is False
        assert reasoner.queryEntailment("prf", "cap", "s").entailed is True
        family = reasoner.getMcsFamily()
        assert family.isAssumptive
        assert [f.text for f in family.intersection()] == ["~p | r", "~q | r"]
        assert reasoner.getFree() == (parse("s"), parse("~p | r"), parse("~q | r"))

    def test_assumptive_problem( self ):
        reasoner = Reasoner(load("assumptive_example.txt"))
        assert reasoner.mode == "assumptive"
        assert reasoner.getFramework().rules == (AttackRule.AT_ABA,)
        assert reasoner.queryEntailment("prf", "wcap", "r").entailed is True
        assert reasoner.queryEntailment("prf", "cap", "~p | r").entailed is True
        assert reasoner.queryEntailment("grd", "cup", "p").entailed is False
        assert reasoner.getAbaFramework().isCoreLogic

    def test_assumptive_minimal_by_default( self ):
        problemDict = {"mode": "assumptive", "strict": ["s"],
                       "assumptions": ["p", "q", "~p | ~q", "~p | r", "~q | r"]}
        reasoner = Reasoner(problemDict)
        assert reasoner.getUniverse().minimal
        stable = reasoner.getExtensions("stb")
        preferred = reasoner.getExtensions("prf")
        assert len(stable) == 3
        assert [sorted(e.members) for e in preferred] == [sorted(e.members) for e in stable]
        problemDict["minimal"] = False
        assert not Reasoner(problemDict).getUniverse().minimal

    def test_rule_system( self ):
        reasoner = Reasoner(load("rule_system_example.txt"))
        assert reasoner.isRuleSystem
        family = reasoner.getMcsFamily()
        assert family.members == [(Atom("a"),), (Atom("b"),)]
        assert reasoner.queryEntailment("stb", "cup", "nb").entailed is True
        assert reasoner.queryEntailment("stb", "cap", "s").entailed is True
        assert reasoner.queryEntailment("grd", "cup", "a").entailed is False
