# Code for testing formulas.py module of pyseqarg
# Execute via
#    $ pytest test_formulas.py

import pytest
import numpy as np

from ..formulas import Atom, Neg, And, Or, Impl, Iff, parse, serialize, evaluate
from ..formulas import FormulaSyntaxError, CapExceededError, EmptyConjunctionError
from ..formulas import TruthTable, entails_classical, is_valid, is_consistent
from ..formulas import conjoin, canonical_order, atoms_of, fresh_atom
from ..utils import random_formula, random_formula_set


p, q, r = Atom("p"), Atom("q"), Atom("r")

# (input text, expected structure, canonical serialization)
parseCases = [("p", p, "p"),
              ("~p | ~q", Or(Neg(p), Neg(q)), "~p | ~q"),
              ("p->q", Impl(p, q), "p -> q"),
              ("(p & q) | r", Or(And(p, q), r), "p & q | r"),
              ("p & (q | r)", And(p, Or(q, r)), "p & (q | r)"),
              ("p -> q -> r", Impl(p, Impl(q, r)), "p -> q -> r"),
              ("(p -> q) -> r", Impl(Impl(p, q), r), "(p -> q) -> r"),
              ("p | q | r", Or(Or(p, q), r), "p | q | r"),
              ("p | (q | r)", Or(p, Or(q, r)), "p | (q | r)"),
              ("~(p <-> q)", Neg(Iff(p, q)), "~(p <-> q)"),
              ("~~p", Neg(Neg(p)), "~~p"),
              ("  p1_x   <-> q ", Iff(Atom("p1_x"), q), "p1_x <-> q")]

nRandomFormulas = 300
nRandomSets = 200

badFormulas = ["", "p &", "(p", "p q", "p -> ", "P", "p ^ q", "()"]



class TestParsing(object):

    def test_parse_structure( self ):
        for text, structure, canonical in parseCases:
            phi = parse(text)
            assert phi == structure
            assert serialize(phi) == canonical

    def test_serialization_reparses( self ):
        for text, structure, canonical in parseCases:
            assert parse(serialize(structure)) == structure

    def test_parse_bad( self ):
        for text in badFormulas:
            with pytest.raises(FormulaSyntaxError):
                parse(text)

    def test_error_offset( self ):
        with pytest.raises(FormulaSyntaxError) as excinfo:
            parse("p & & q")
        assert excinfo.value.offset == 4
        assert "atom" in excinfo.value.expected
        # offsets count UTF-8 bytes
        with pytest.raises(FormulaSyntaxError) as excinfo:
            parse("p é")
        assert excinfo.value.offset == 2

    def test_error_is_ValueError( self ):
        with pytest.raises(ValueError):
            parse("p |")

    def test_bad_atom_name( self ):
        with pytest.raises(ValueError):
            Atom("Bob")



class TestStructure(object):

    def test_equality_and_hashing( self ):
        assert parse("p -> q") == Impl(p, q)
        assert parse("p -> q") != parse("~p | q")
        assert len(set([parse("p & q"), And(p, q), parse("(p&q)")])) == 1

    def test_atoms( self ):
        assert parse("(p -> q) & ~r").atoms() == frozenset(["p", "q", "r"])
        assert atoms_of([parse("p"), parse("q1 | p")]) == ["p", "q1"]

    def test_canonical_order( self ):
        ordered = canonical_order([parse("~q"), p, parse("p -> q"), p])
        assert [f.text for f in ordered] == ["p", "p -> q", "~q"]

    def test_conjoin( self ):
        assert conjoin([q]) == q
        assert conjoin([parse("~q"), p]).text == "p & ~q"
        assert conjoin([r, q, p]).text == "p & (q & r)"
        with pytest.raises(EmptyConjunctionError):
            conjoin([])

    def test_fresh_atom( self ):
        assert fresh_atom([p, q]) == Atom("x")
        assert fresh_atom([parse("x & x1")]) == Atom("x2")
        assert fresh_atom([], base="z") == Atom("z")



class TestEvaluation(object):

    def test_evaluate( self ):
        phi = parse("p -> q")
        assert evaluate(phi, {"p": True, "q": False}) is False
        assert evaluate(phi, {"p": False, "q": False}) is True
        assert evaluate(parse("p <-> ~q"), {"p": True, "q": False}) is True

    def test_evaluate_domain( self ):
        with pytest.raises(ValueError):
            evaluate(parse("p & q"), {"p": True})

    def test_truth_table_columns( self ):
        table = TruthTable(["p", "q"])
        assert table.nRows == 4
        colRef = np.array([True, False, True, True])
        # row k gives atom j the j-th bit of k: rows (p,q) = FF, TF, FT, TT
        assert np.array_equal(table.column(parse("p -> q")), colRef)
        valuations = list(table.valuations())
        assert valuations[1] == {"p": True, "q": False}
        for k, v in enumerate(valuations):
            assert table.column(parse("p -> q"))[k] == evaluate(parse("p -> q"), v)

    def test_truth_table_cap( self ):
        names = ["a{0}".format(i) for i in range(5)]
        with pytest.raises(CapExceededError):
            TruthTable(names, maxAtoms=4)
        assert TruthTable(names, maxAtoms=5).nRows == 32

    def test_uncovered_atom( self ):
        with pytest.raises(ValueError):
            TruthTable(["p"]).column(q)



class TestConsequence(object):

    def test_entails_classical( self ):
        assert entails_classical([p, parse("p -> q")], q) is True
        assert entails_classical([], parse("q | ~q")) is True
        assert entails_classical([parse("p | q")], p) is False
        # explosion
        assert entails_classical([p, parse("~p")], r) is True

    def test_entails_cap( self ):
        premises = [Atom("a{0}".format(i)) for i in range(6)]
        with pytest.raises(CapExceededError):
            entails_classical(premises, p, maxAtoms=5)

    def test_is_valid( self ):
        assert is_valid(parse("q | ~q"))
        assert is_valid(parse("(p -> q) <-> (~q -> ~p)"))
        assert not is_valid(parse("p -> q"))

    def test_is_consistent( self ):
        inconsistent = [p, parse("p -> q"), parse("~q")]
        consistent = [p, parse("p -> q")]
        assert is_consistent(inconsistent) is False
        assert is_consistent(consistent) is True
        assert is_consistent([]) is True
        for method in ["valuation", "conflicts"]:
            assert is_consistent(inconsistent, method=method) is False
            assert is_consistent(consistent, method=method) is True

    def test_is_consistent_bad_method( self ):
        with pytest.raises(ValueError):
            is_consistent([p], method="bob")



class TestPropertySuites(object):

    def test_serialization_round_trip( self ):
        rng = np.random.default_rng(31)
        for trial in range(nRandomFormulas):
            phi = random_formula(rng, ["p", "q", "r", "s"], maxDepth=4)
            assert parse(serialize(phi)) == phi, phi.text
            assert parse(phi.text).text == phi.text

    def test_entailment_structure( self ):
        rng = np.random.default_rng(37)
        for trial in range(nRandomSets):
            T = random_formula_set(rng, int(rng.integers(0, 4)))
            extra = random_formula_set(rng, int(rng.integers(1, 3)))
            phi = random_formula(rng)
            psi = random_formula(rng)
            # reflexivity
            for f in T:
                assert entails_classical(T, f)
            # monotonicity
            if entails_classical(T, phi):
                assert entails_classical(T + extra, phi)
            # transitivity
            if entails_classical(T, phi) and entails_classical(T + [phi], psi):
                assert entails_classical(T, psi)

    def test_consistency_is_non_explosion( self ):
        rng = np.random.default_rng(41)
        contradiction = And(p, Neg(p))
        for trial in range(nRandomSets):
            T = random_formula_set(rng, int(rng.integers(0, 5)))
            consistent = is_consistent(T)
            assert consistent == (not entails_classical(T, contradiction)), str([f.text for f in T])
            assert consistent == is_consistent(T, method="conflicts")
