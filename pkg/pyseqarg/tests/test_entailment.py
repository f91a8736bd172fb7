# Code for testing entailment.py module of pyseqarg
# Execute via
#    $ pytest test_entailment.py

import pytest
import numpy as np

from ..formulas import parse
from ..arguments import build_universe, default_pool
from ..attacks import Attack, AttackRule, Framework, build_framework
from ..semantics import SEMANTICS
from ..aba import AbaFramework, translate_to_sequent
from ..entailment import EntailmentMode, QueryResult, ExtensionCache, PoolMissError
from ..entailment import entails, entails_aba, query_entailment
from ..utils import random_formula, random_formula_set, random_aba_instance


def formulas( *texts ):
    return [parse(t) for t in texts]


strict_pq = formulas("p", "p -> q", "~q")
tautology = parse("q | ~q")

strict_s = formulas("s")
assumptions_s = formulas("p", "q", "~p | ~q", "~p | r", "~q | r")

MODES = ["cap", "cup", "wcap"]
nonGrounded = ["cmp", "prf", "stb"]

nRandomFrameworks = 60


def flat_framework():
    pool = default_pool(strict_pq, queries=[tautology], negatedConjunctions=True)
    universe = build_universe(strict_pq, [], pool)
    return build_framework(universe, ["ucut"])

def odd_cycle_framework():
    # p => p, q => q, r => r attacking each other in a cycle: no stable extension
    premises = formulas("p", "q", "r")
    universe = build_universe(premises, [], premises, minimal=True)
    attacks = [Attack(0, 1, AttackRule.UCUT, formulas("q")),
               Attack(1, 2, AttackRule.UCUT, formulas("r")),
               Attack(2, 0, AttackRule.UCUT, formulas("p"))]
    return Framework(universe, attacks, [AttackRule.UCUT])

def aba_s():
    return AbaFramework(strict_s, assumptions_s)



class TestEntailmentMode(object):

    def test_fromName( self ):
        assert EntailmentMode.fromName("cap") is EntailmentMode.CAP
        assert EntailmentMode.fromName(" WCAP") is EntailmentMode.WCAP
        assert EntailmentMode.fromName(EntailmentMode.CUP) is EntailmentMode.CUP

    def test_fromName_bad( self ):
        with pytest.raises(ValueError):
            EntailmentMode.fromName("some")



class TestFlatEntailment(object):

    def test_tautology_grounded( self ):
        F = flat_framework()
        for mode in MODES:
            assert entails(F, "grd", mode, tautology) is True

    def test_strict_members( self ):
        F = flat_framework()
        for phi in strict_pq:
            for sem in nonGrounded:
                assert entails(F, sem, "cap", phi) is False
                assert entails(F, sem, "cup", phi) is True

    def test_tautology_everywhere( self ):
        F = flat_framework()
        for sem in SEMANTICS:
            for mode in MODES:
                assert entails(F, sem, mode, tautology) is True

    def test_query_result( self ):
        F = flat_framework()
        result = query_entailment(F, "prf", "cap", tautology)
        assert isinstance(result, QueryResult)
        assert result.entailed is True
        assert result.semantics == "prf"
        assert result.mode is EntailmentMode.CAP
        assert result.query == tautology
        assert len(result.witnesses) == len(result.extensions)
        assert len(result.extensions) > 0
        assert result.noExtensions is False
        # the argument with empty support comes first and is never attacked
        assert F.universe[0].text == "=> q | ~q"
        assert 0 in result.common
        for w in result.witnesses:
            assert F.arguments[w].conclusion == tautology
        assert "entailed" in result.keys()
        with pytest.raises(AttributeError):
            result.bob

    def test_witness_none( self ):
        F = flat_framework()
        result = query_entailment(F, "prf", "cup", parse("p"))
        assert result.entailed is True
        assert None in result.witnesses
        assert result.common == []

    def test_pool_miss( self ):
        F = flat_framework()
        with pytest.raises(PoolMissError):
            entails(F, "prf", "cap", parse("p & q"))

    def test_bad_arguments( self ):
        F = flat_framework()
        with pytest.raises(ValueError):
            entails(F, "adm", "cap", tautology)
        with pytest.raises(ValueError):
            entails(F, "prf", "all", tautology)



class TestNoExtensions(object):

    def test_vacuous_answers( self ):
        F = odd_cycle_framework()
        p = parse("p")
        assert entails(F, "stb", "cap", p) is True
        assert entails(F, "stb", "wcap", p) is True
        assert entails(F, "stb", "cup", p) is False
        result = query_entailment(F, "stb", "cap", p)
        assert result.noExtensions is True
        assert result.extensions == []
        assert result.common == []

    def test_grounded_is_empty( self ):
        F = odd_cycle_framework()
        for mode in MODES:
            assert entails(F, "grd", mode, parse("p")) is False



class TestAssumptiveEntailment(object):

    def test_translated_framework( self ):
        F = translate_to_sequent(aba_s())
        for sem in SEMANTICS:
            for mode in MODES:
                assert entails(F, sem, mode, parse("s")) is True
        for phi in formulas("p", "q", "~p | ~q"):
            for sem in nonGrounded:
                assert entails(F, sem, "cup", phi) is True
                assert entails(F, sem, "cap", phi) is False
                assert entails(F, sem, "wcap", phi) is False

    def test_common_assumptions( self ):
        F = translate_to_sequent(aba_s())
        for phi in formulas("~p | r", "~q | r"):
            for sem in ["prf", "stb"]:
                assert entails(F, sem, "wcap", phi) is True
        # r follows in every preferred extension, but from different arguments
        F = translate_to_sequent(aba_s(), queries=formulas("r"))
        assert entails(F, "prf", "wcap", parse("r")) is True
        assert entails(F, "prf", "cap", parse("r")) is False

    def test_entails_aba( self ):
        AF = aba_s()
        assert entails_aba(AF, "prf", "cap", parse("s")) is True
        assert entails_aba(AF, "prf", "cup", parse("p")) is True
        assert entails_aba(AF, "prf", "cap", parse("p")) is False
        # the query is added to the native pool
        assert entails_aba(AF, "stb", "wcap", parse("r")) is True



class TestExtensionCache(object):

    def test_reuse( self ):
        F = flat_framework()
        cache = ExtensionCache()
        first = cache.get(F, "prf")
        assert cache.get(F, "prf") is first
        assert len(cache) == 1
        cache.get(F, "stb")
        assert len(cache) == 2
        cache.clear()
        assert len(cache) == 0

    def test_cached_queries_agree( self ):
        F = flat_framework()
        cache = ExtensionCache()
        for phi in strict_pq + [tautology]:
            for mode in MODES:
                assert (query_entailment(F, "prf", mode, phi, cache=cache).entailed ==
                        entails(F, "prf", mode, phi))
        assert len(cache) == 1



def random_frameworks( rng, n ):
    """Alternate translated core-logic ABA frameworks and flat Ucut frameworks."""
    for trial in range(n):
        if trial % 2 == 0:
            AF = random_aba_instance(rng, maxAssumptions=3)
            yield translate_to_sequent(AF, queries=[random_formula(rng)])
        else:
            strict = random_formula_set(rng, int(rng.integers(1, 3)))
            pool = default_pool(strict, queries=[random_formula(rng)], negatedConjunctions=True)
            yield build_framework(build_universe(strict, [], pool, minimal=True), ["ucut"])


class TestPropertySuites(object):

    def test_mode_ordering( self ):
        rng = np.random.default_rng(71)
        for F in random_frameworks(rng, nRandomFrameworks):
            cache = ExtensionCache()
            pool = F.universe.pool
            for phi in [pool[int(rng.integers(len(pool)))] for k in range(4)]:
                for sem in SEMANTICS:
                    results = dict((mode, query_entailment(F, sem, mode, phi, cache=cache))
                                   for mode in MODES)
                    cap, cup, wcap = [results[mode].entailed for mode in MODES]
                    if cap:
                        assert wcap, (sem, phi.text)
                    if wcap and not results["wcap"].noExtensions:
                        assert cup, (sem, phi.text)
                    if sem == "grd":
                        assert cap == cup == wcap, phi.text
