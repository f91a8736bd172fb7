"""
Propositional formulas: parsing, serialization, valuations, and the classical
consequence relation used by every other module of pyseqarg.

The main useful functions are parse, entails_classical, is_valid, is_consistent
and conjoin. Derivability is decided semantically, by exhaustive evaluation over
all valuations of the atoms involved; truth tables are stored as numpy boolean
columns (one column per formula, one row per valuation).

Formula grammar (whitespace is insignificant between tokens):

    formula := iff
    iff     := impl ('<->' iff)?
    impl    := or ('->' impl)?
    or      := and ('|' and)*
    and     := unary ('&' unary)*
    unary   := '~' unary | '(' formula ')' | atom
    atom    := [a-z][a-z0-9_]*
"""

import re
import logging
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np   # type: ignore


__all__ = ['Formula', 'Atom', 'Neg', 'And', 'Or', 'Impl', 'Iff',
           'FormulaSyntaxError', 'CapExceededError', 'EmptyConjunctionError',
           'TruthTable', 'parse', 'as_formula', 'serialize', 'evaluate',
           'entails_classical', 'is_valid', 'is_consistent', 'conjoin',
           'canonical_order', 'atoms_of', 'fresh_atom', 'MAX_ATOMS']

log = logging.getLogger(__name__)

# Default cap on the number of distinct atoms in a single truth table
MAX_ATOMS = 16

atomPattern = re.compile(r"[a-z][a-z0-9_]*")
# longest operators first, so that "<->" is not read as "<" + "->"
operatorTokens = ["<->", "->", "|", "&", "~", "(", ")"]



class FormulaSyntaxError(ValueError):
    """
    Raised when a formula string does not conform to the grammar.

    Attributes
    ----------
    offset : int
        byte offset (UTF-8) in the input text where parsing failed
    expected : str
        description of what the parser expected at that point
    """
    def __init__( self, message: str, offset: int, expected: str ):
        msg = "{0} at byte offset {1:d} (expected {2})".format(message, offset, expected)
        super().__init__(msg)
        self.offset = offset
        self.expected = expected


class CapExceededError(ValueError):
    """Raised when an input exceeds one of the configurable resource caps."""
    pass


class EmptyConjunctionError(ValueError):
    pass



class Formula(object):
    """
    Base class for propositional formulas (the language L).

    Formulas are immutable. Each instance stores its canonical serialization,
    which fully determines its structure (parse(serialize(f)) == f); structural
    equality, hashing and the canonical ordering are all based on it.

    Attributes
    ----------
        text : str
            canonical serialization of the formula
        precedence : int
            binding strength of the main connective (higher binds tighter)
    """
    __slots__ = ('_text', '_atoms')
    precedence = 0

    @property
    def text( self ) -> str:
        return self._text

    def children( self ) -> Tuple["Formula", ...]:
        return ()

    def atoms( self ) -> FrozenSet[str]:
        """
        The set of atom names occurring in the formula.
        """
        if self._atoms is None:
            names = set()   #type: set
            for child in self.children():
                names.update(child.atoms())
            self._atoms = frozenset(names)
        return self._atoms

    def __eq__( self, rhs ):
        return isinstance(rhs, Formula) and self._text == rhs._text

    def __ne__( self, rhs ):
        return not self.__eq__(rhs)

    def __lt__( self, rhs ):
        return self._text < rhs._text

    def __hash__( self ):
        return hash(self._text)

    def __str__( self ):
        return self._text

    def __repr__( self ):
        args = ", ".join(repr(c) for c in self.children())
        return "{0}({1})".format(self.__class__.__name__, args)



class Atom(Formula):
    __slots__ = ('name',)
    precedence = 6

    def __init__( self, name: str ):
        if atomPattern.fullmatch(name) is None:
            raise ValueError("Invalid atom name \"{0}\"".format(name))
        self.name = name
        self._text = name
        self._atoms = frozenset([name])

    def __repr__( self ):
        return "Atom({0!r})".format(self.name)


class Neg(Formula):
    __slots__ = ('sub',)
    precedence = 5

    def __init__( self, sub: Formula ):
        self.sub = sub
        self._atoms = None
        if sub.precedence < self.precedence:
            self._text = "~(" + sub.text + ")"
        else:
            self._text = "~" + sub.text

    def children( self ):
        return (self.sub,)


class BinaryFormula(Formula):
    """
    Common base for the binary connectives. Parenthesization follows the
    grammar: & and | associate to the left, -> and <-> to the right.
    """
    __slots__ = ('left', 'right')
    symbol = ""
    rightAssociative = False

    def __init__( self, left: Formula, right: Formula ):
        self.left = left
        self.right = right
        self._atoms = None
        leftText = left.text
        rightText = right.text
        if (left.precedence < self.precedence or
                (left.precedence == self.precedence and self.rightAssociative)):
            leftText = "(" + leftText + ")"
        if (right.precedence < self.precedence or
                (right.precedence == self.precedence and not self.rightAssociative)):
            rightText = "(" + rightText + ")"
        self._text = "{0} {1} {2}".format(leftText, self.symbol, rightText)

    def children( self ):
        return (self.left, self.right)


class And(BinaryFormula):
    __slots__ = ()
    precedence = 4
    symbol = "&"


class Or(BinaryFormula):
    __slots__ = ()
    precedence = 3
    symbol = "|"


class Impl(BinaryFormula):
    __slots__ = ()
    precedence = 2
    symbol = "->"
    rightAssociative = True


class Iff(BinaryFormula):
    __slots__ = ()
    precedence = 1
    symbol = "<->"
    rightAssociative = True


binaryConnectives = {"&": And, "|": Or, "->": Impl, "<->": Iff}



# Parsing

def _byte_offset( text: str, charIndex: int ) -> int:
    return len(text[:charIndex].encode("utf-8"))


def _tokenize( text: str ) -> List[Tuple[str, int]]:
    """
    Splits text into (token, character-index) pairs.
    """
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        for op in operatorTokens:
            if text.startswith(op, i):
                tokens.append((op, i))
                i += len(op)
                break
        else:
            m = atomPattern.match(text, i)
            if m is None:
                raise FormulaSyntaxError("Unexpected character {0!r}".format(text[i]),
                                         _byte_offset(text, i), "an operator, parenthesis or atom")
            tokens.append((m.group(0), i))
            i = m.end()
    return tokens


class _Parser(object):
    """Recursive-descent parser over the token list of a single formula."""

    def __init__( self, text: str ):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek( self ) -> Optional[str]:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][0]
        return None

    def offset( self ) -> int:
        if self.pos < len(self.tokens):
            return _byte_offset(self.text, self.tokens[self.pos][1])
        return len(self.text.encode("utf-8"))

    def fail( self, expected: str ):
        found = self.peek()
        if found is None:
            msg = "Unexpected end of input"
        else:
            msg = "Unexpected token {0!r}".format(found)
        raise FormulaSyntaxError(msg, self.offset(), expected)

    def parseFormula( self ) -> Formula:
        f = self.parseIff()
        if self.peek() is not None:
            self.fail("end of input")
        return f

    def parseIff( self ) -> Formula:
        left = self.parseImpl()
        if self.peek() == "<->":
            self.pos += 1
            return Iff(left, self.parseIff())
        return left

    def parseImpl( self ) -> Formula:
        left = self.parseOr()
        if self.peek() == "->":
            self.pos += 1
            return Impl(left, self.parseImpl())
        return left

    def parseOr( self ) -> Formula:
        f = self.parseAnd()
        while self.peek() == "|":
            self.pos += 1
            f = Or(f, self.parseAnd())
        return f

    def parseAnd( self ) -> Formula:
        f = self.parseUnary()
        while self.peek() == "&":
            self.pos += 1
            f = And(f, self.parseUnary())
        return f

    def parseUnary( self ) -> Formula:
        token = self.peek()
        if token == "~":
            self.pos += 1
            return Neg(self.parseUnary())
        if token == "(":
            self.pos += 1
            f = self.parseIff()
            if self.peek() != ")":
                self.fail("')'")
            self.pos += 1
            return f
        if token is not None and atomPattern.fullmatch(token):
            self.pos += 1
            return Atom(token)
        self.fail("'~', '(' or an atom")


def parse( text: str ) -> Formula:
    """
    Parse a formula string.

    Parameters
    ----------
    text : str
        formula in the grammar given in the module docstring;
        precedence is ~ > & > | > -> > <->, with -> and <-> right-associative

    Returns
    -------
    formula : :class:`Formula`

    Raises
    ------
    FormulaSyntaxError
        with the byte offset of the failure and a description of the expected token
    """
    return _Parser(text).parseFormula()


def as_formula( item: Union[str, Formula] ) -> Formula:
    """Returns item unchanged if it is a Formula, otherwise parses it."""
    if isinstance(item, Formula):
        return item
    return parse(item)


def serialize( phi: Formula ) -> str:
    return phi.text



# Sets of formulas and atoms

def canonical_order( formulas: Iterable[Formula] ) -> Tuple[Formula, ...]:
    """
    Returns the distinct members of formulas (structural equality), sorted
    lexicographically by their canonical serialization.
    """
    return tuple(sorted(set(formulas), key=lambda f: f.text))


def atoms_of( formulas: Iterable[Formula] ) -> List[str]:
    names = set()   #type: set
    for f in formulas:
        names.update(f.atoms())
    return sorted(names)


def fresh_atom( formulas: Iterable[Formula], base="x" ) -> Atom:
    """
    Returns an atom which does not occur in any of the input formulas.
    """
    used = set(atoms_of(formulas))
    name = base
    i = 0
    while name in used:
        i += 1
        name = "{0}{1:d}".format(base, i)
    return Atom(name)


def conjoin( formulas: Iterable[Formula] ) -> Formula:
    """
    Builds the conjunction of a nonempty set of formulas, right-nested in
    canonical order; a singleton set yields its only member.

    Parameters
    ----------
    formulas : iterable of Formula

    Returns
    -------
    conjunction : :class:`Formula`
        e.g., {~q, p} --> p & ~q ; {p, q, r} --> p & (q & r)
    """
    members = canonical_order(formulas)
    if len(members) == 0:
        raise EmptyConjunctionError("Cannot conjoin an empty set of formulas.")
    result = members[-1]
    for f in reversed(members[:-1]):
        result = And(f, result)
    return result



# Valuations and the classical consequence relation

def evaluate( phi: Formula, valuation: Dict[str, bool] ) -> bool:
    """
    Evaluate a formula under a single valuation.

    Parameters
    ----------
    phi : Formula

    valuation : dict of {str: bool}
        truth values for atoms; must cover every atom of phi

    Returns
    -------
    value : bool
    """
    missing = phi.atoms() - set(valuation.keys())
    if len(missing) > 0:
        msg = "Valuation does not cover atoms: {0}".format(", ".join(sorted(missing)))
        raise ValueError(msg)
    return _evaluate(phi, valuation)


def _evaluate( phi: Formula, valuation: Dict[str, bool] ) -> bool:
    if isinstance(phi, Atom):
        return bool(valuation[phi.name])
    if isinstance(phi, Neg):
        return not _evaluate(phi.sub, valuation)
    left = _evaluate(phi.left, valuation)
    right = _evaluate(phi.right, valuation)
    if isinstance(phi, And):
        return left and right
    if isinstance(phi, Or):
        return left or right
    if isinstance(phi, Impl):
        return (not left) or right
    return left == right


class TruthTable(object):
    """
    Truth-table evaluation context over a fixed, sorted list of atoms.

    Row k of the table is the valuation assigning to atom j the j-th bit of k.
    The column of a formula is a numpy boolean array with one entry per row;
    columns are cached, so a single TruthTable can be shared by all the
    derivability checks made while building a universe or a framework.

    Attributes
    ----------
        atoms : list of str
        nRows : int
            number of valuations (= 2**len(atoms))
    """
    def __init__( self, atoms: Iterable[str], maxAtoms=MAX_ATOMS ):
        self.atoms = sorted(set(atoms))
        nAtoms = len(self.atoms)
        if nAtoms > maxAtoms:
            msg = "Truth table would need {0:d} atoms (cap is {1:d}).".format(nAtoms, maxAtoms)
            raise CapExceededError(msg)
        self.nRows = 1 << nAtoms
        rows = np.arange(self.nRows, dtype=np.int64)
        self._atomColumns = { name: ((rows >> j) & 1).astype(bool)
                              for j, name in enumerate(self.atoms) }
        self._columns = {}   #type: Dict[Formula, np.ndarray]


    @classmethod
    def forFormulas( cls, formulas: Iterable[Formula], maxAtoms=MAX_ATOMS ):
        """
        Returns a TruthTable over the joint atom set of formulas.
        """
        return cls(atoms_of(formulas), maxAtoms=maxAtoms)


    def column( self, phi: Formula ) -> np.ndarray:
        """
        Truth values of phi under every valuation of the table.
        """
        try:
            return self._columns[phi]
        except KeyError:
            pass
        if isinstance(phi, Atom):
            try:
                col = self._atomColumns[phi.name]
            except KeyError:
                raise ValueError("Atom \"{0}\" is not covered by this truth table".format(phi.name))
        elif isinstance(phi, Neg):
            col = ~self.column(phi.sub)
        else:
            left = self.column(phi.left)
            right = self.column(phi.right)
            if isinstance(phi, And):
                col = left & right
            elif isinstance(phi, Or):
                col = left | right
            elif isinstance(phi, Impl):
                col = ~left | right
            else:
                col = left == right
        self._columns[phi] = col
        return col


    def conjunction( self, formulas: Iterable[Formula] ) -> np.ndarray:
        col = np.ones(self.nRows, dtype=bool)
        for f in formulas:
            col = col & self.column(f)
        return col


    def entails( self, premises: Iterable[Formula], goal: Formula ) -> bool:
        return not bool(np.any(self.conjunction(premises) & ~self.column(goal)))


    def isValid( self, phi: Formula ) -> bool:
        return bool(np.all(self.column(phi)))


    def isConsistent( self, formulas: Iterable[Formula] ) -> bool:
        return bool(np.any(self.conjunction(formulas)))


    def valuations( self ) -> Iterator[Dict[str, bool]]:
        """Yields every valuation of the table's atoms, in row order."""
        for k in range(self.nRows):
            yield { name: bool((k >> j) & 1) for j, name in enumerate(self.atoms) }



def entails_classical( premises: Iterable[Formula], goal: Formula, maxAtoms=MAX_ATOMS ) -> bool:
    """
    Classical consequence: True iff every valuation satisfying all premises
    also satisfies goal.

    Parameters
    ----------
    premises : iterable of Formula

    goal : Formula

    maxAtoms : int, optional
        cap on the number of distinct atoms in premises and goal

    Returns
    -------
    result : bool
    """
    premises = list(premises)
    table = TruthTable.forFormulas(premises + [goal], maxAtoms=maxAtoms)
    return table.entails(premises, goal)


def is_valid( phi: Formula, maxAtoms=MAX_ATOMS ) -> bool:
    return entails_classical((), phi, maxAtoms=maxAtoms)


def is_consistent( formulas: Iterable[Formula], method="valuation", maxAtoms=MAX_ATOMS ) -> bool:
    """
    Consistency of a finite set of formulas.

    Parameters
    ----------
    formulas : iterable of Formula

    method : str, optional
        "valuation" (default): some valuation satisfies every member.
        "conflicts": there is no nonempty subset {f1, ..., fn} such that
        ~(f1 & ... & fn) is valid. (Exponential in the size of the set; the two
        methods agree for classical logic.)

    maxAtoms : int, optional

    Returns
    -------
    result : bool
    """
    members = canonical_order(formulas)
    table = TruthTable.forFormulas(members, maxAtoms=maxAtoms)
    if method == "valuation":
        return table.isConsistent(members)
    elif method == "conflicts":
        for size in range(1, len(members) + 1):
            for subset in combinations(members, size):
                if table.isValid(Neg(conjoin(subset))):
                    return False
        return True
    else:
        raise ValueError("Unknown consistency method \"{0}\"".format(method))
