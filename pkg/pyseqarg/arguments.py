"""
Assumptive arguments (sequents A |~ G => C), the finite argument universe built
from a strict set, an assumption set and a conclusion pool, and the operations
on arguments: accessors, the sub-argument relation and the two Cut variants.

Plain (flat) arguments G => C are the case of an empty assumption component.
"""

import logging
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np   # type: ignore

from .formulas import Formula, Neg, TruthTable, CapExceededError
from .formulas import canonical_order, conjoin, entails_classical, MAX_ATOMS


__all__ = ['AssumptiveArgument', 'ArgumentUniverse', 'InconsistentStrictError', 'CutError',
           'build_universe', 'default_pool', 'is_subargument', 'subarguments', 'cut',
           'ass', 'supp', 'conc', 'all_assumptions', 'all_supports', 'all_conclusions',
           'MAX_PREMISES']

log = logging.getLogger(__name__)

# Default cap on |S| + |A| (premise subsets are enumerated exhaustively)
MAX_PREMISES = 12

# a derivability test: derives(premises, goal) -> bool
Derivability = Callable[[Tuple[Formula, ...], Formula], bool]


class InconsistentStrictError(ValueError):
    pass


class CutError(ValueError):
    pass



class AssumptiveArgument(object):
    """
    A single argument A |~ G => C, with defeasible assumptions A, strict
    support G and conclusion C.

    Both premise components are stored as tuples in canonical formula order,
    so two arguments are equal iff all three components are equal.

    Attributes
    ----------
        assumptions : tuple of Formula
        support : tuple of Formula
        conclusion : Formula
        text : str
            canonical serialization, e.g. "p, ~p | ~q |~ => ~q"
    """
    __slots__ = ('assumptions', 'support', 'conclusion', '_text')

    def __init__( self, assumptions: Iterable[Formula], support: Iterable[Formula],
                  conclusion: Formula ):
        self.assumptions = canonical_order(assumptions)
        self.support = canonical_order(support)
        self.conclusion = conclusion
        pieces = []
        if len(self.assumptions) > 0:
            pieces.append(", ".join(f.text for f in self.assumptions) + " |~")
        if len(self.support) > 0:
            pieces.append(", ".join(f.text for f in self.support))
        pieces.append("=> " + conclusion.text)
        self._text = " ".join(pieces)


    @classmethod
    def flat( cls, support: Iterable[Formula], conclusion: Formula ):
        """Convenience constructor for an argument with no assumptions."""
        return cls((), support, conclusion)


    @property
    def text( self ):
        return self._text


    @property
    def isFlat( self ):
        return len(self.assumptions) == 0


    def premises( self ) -> FrozenSet[Formula]:
        """
        All premises (assumptions and support) as a single set.
        """
        return frozenset(self.assumptions) | frozenset(self.support)


    def isDerivable( self, maxAtoms=MAX_ATOMS ) -> bool:
        """
        Returns True if the premises classically entail the conclusion (an
        assumptive sequent is derivable iff the corresponding flat one is).
        """
        return entails_classical(self.premises(), self.conclusion, maxAtoms=maxAtoms)


    def __eq__( self, rhs ):
        return isinstance(rhs, AssumptiveArgument) and self._text == rhs._text

    def __ne__( self, rhs ):
        return not self.__eq__(rhs)

    def __hash__( self ):
        return hash(self._text)

    def __str__( self ):
        return self._text

    def __repr__( self ):
        return "AssumptiveArgument({0!r})".format(self._text)



# Accessors, and their lifting to sets of arguments

def ass( a: AssumptiveArgument ) -> FrozenSet[Formula]:
    return frozenset(a.assumptions)


def supp( a: AssumptiveArgument ) -> FrozenSet[Formula]:
    return frozenset(a.support)


def conc( a: AssumptiveArgument ) -> Formula:
    return a.conclusion


def all_assumptions( args: Iterable[AssumptiveArgument] ) -> FrozenSet[Formula]:
    result = set()   #type: set
    for a in args:
        result.update(a.assumptions)
    return frozenset(result)


def all_supports( args: Iterable[AssumptiveArgument] ) -> FrozenSet[Formula]:
    result = set()   #type: set
    for a in args:
        result.update(a.support)
    return frozenset(result)


def all_conclusions( args: Iterable[AssumptiveArgument] ) -> FrozenSet[Formula]:
    return frozenset(a.conclusion for a in args)


def is_subargument( a: AssumptiveArgument, b: AssumptiveArgument ) -> bool:
    """
    Returns True if a is a sub-argument of b: ass(a) is a subset of ass(b)
    and supp(a) is a subset of supp(b).
    """
    return ass(a) <= ass(b) and supp(a) <= supp(b)


def cut( a1: AssumptiveArgument, a2: AssumptiveArgument, phi: Formula ) -> AssumptiveArgument:
    """
    Apply Cut on the formula phi, which must be the conclusion of a1 and a
    premise of a2.

    If phi is in the support of a2, it is replaced there by the support of a1
    (support Cut); otherwise phi is an assumption of a2 and is replaced by the
    assumptions of a1 (assumption Cut). Support Cut is used when phi occurs in
    both components.

    Parameters
    ----------
    a1 : AssumptiveArgument
        argument concluding phi

    a2 : AssumptiveArgument
        argument with phi among its premises

    phi : Formula
        the cut formula

    Returns
    -------
    result : AssumptiveArgument
        argument with the conclusion of a2
    """
    if a1.conclusion != phi:
        msg = "Cut formula {0} is not the conclusion of {1}".format(phi, a1)
        raise CutError(msg)
    if phi in supp(a2):
        support = supp(a1) | (supp(a2) - {phi})
        assumptions = ass(a1) | ass(a2)
    elif phi in ass(a2):
        support = supp(a1) | supp(a2)
        assumptions = ass(a1) | (ass(a2) - {phi})
    else:
        msg = "Cut formula {0} is not a premise of {1}".format(phi, a2)
        raise CutError(msg)
    return AssumptiveArgument(assumptions, support, a2.conclusion)



class ArgumentUniverse(object):
    """
    The finite set of arguments based on a strict set S and an assumption set A,
    restricted to conclusions from a conclusion pool.

    Attributes
    ----------
        arguments : list of AssumptiveArgument
            in construction order (deterministic)
        strict : tuple of Formula
        assumptions : tuple of Formula
        pool : tuple of Formula
        minimal : bool
            whether only subset-minimal premise sets were kept

    Methods
    -------
        index(a)
            position of an argument in the universe

        restrict(T)
            indices of all arguments whose assumptions lie inside T

        getStringDescription()
            one line per argument, in canonical serialization
    """
    def __init__( self, arguments: Sequence[AssumptiveArgument], strict: Iterable[Formula]=(),
                  assumptions: Iterable[Formula]=(), pool: Iterable[Formula]=(), minimal=False ):
        self.arguments = list(arguments)
        self.strict = canonical_order(strict)
        self.assumptions = canonical_order(assumptions)
        self.pool = canonical_order(pool)
        self.minimal = minimal
        self._positions = {}   #type: Dict[AssumptiveArgument, int]
        for i, a in enumerate(self.arguments):
            if a in self._positions:
                raise ValueError("Duplicate argument in universe: {0}".format(a))
            self._positions[a] = i


    def __len__( self ):
        return len(self.arguments)

    def __getitem__( self, i ):
        return self.arguments[i]

    def __iter__( self ) -> Iterator[AssumptiveArgument]:
        return iter(self.arguments)

    def __contains__( self, a ):
        return a in self._positions


    def index( self, a: AssumptiveArgument ) -> int:
        return self._positions[a]


    def restrict( self, T: Iterable[Formula] ) -> FrozenSet[int]:
        """
        Returns the indices of the arguments based on S and T (i.e., all arguments
        whose assumptions are a subset of T).
        """
        T = frozenset(T)
        return frozenset(i for i, a in enumerate(self.arguments) if ass(a) <= T)


    def withConclusion( self, phi: Formula ) -> List[int]:
        return [i for i, a in enumerate(self.arguments) if a.conclusion == phi]


    def getStringDescription( self ) -> List[str]:
        return [a.text + "\n" for a in self.arguments]


    def __eq__( self, rhs ):
        if not isinstance(rhs, ArgumentUniverse):
            return False
        return (self.arguments == rhs.arguments and self.strict == rhs.strict and
                self.assumptions == rhs.assumptions and self.pool == rhs.pool)


    def __str__( self ):
        return "".join(self.getStringDescription())



def subarguments( a: AssumptiveArgument, universe: ArgumentUniverse ) -> List[int]:
    """
    Indices of all members of the universe that are sub-arguments of a
    (including a itself, if present).
    """
    return [i for i, b in enumerate(universe) if is_subargument(b, a)]


def default_pool( strict: Iterable[Formula], assumptions: Iterable[Formula]=(),
                  contraries: Iterable[Formula]=(), queries: Iterable[Formula]=(),
                  negatedConjunctions=False, maxPremises=MAX_PREMISES ) -> Tuple[Formula, ...]:
    """
    Build the default conclusion pool: S, A, the contraries of the assumptions,
    the query formulas, and (if negatedConjunctions is True) the negated
    conjunction ~(g1 & ... & gn) of every nonempty subset of S and A.

    The negated conjunctions are needed for undercut-style attacks, whose
    attackers conclude the negation of part of the attacked support.

    Returns
    -------
    pool : tuple of Formula, in canonical order
    """
    strict = canonical_order(strict)
    assumptions = canonical_order(assumptions)
    pool = set(strict) | set(assumptions) | set(contraries) | set(queries)
    if negatedConjunctions:
        premises = canonical_order(strict + assumptions)
        n = len(premises)
        if n > maxPremises:
            msg = "{0:d} premises exceed the cap of {1:d}.".format(n, maxPremises)
            raise CapExceededError(msg)
        for mask in range(1, 1 << n):
            members = [premises[j] for j in range(n) if (mask >> j) & 1]
            pool.add(Neg(conjoin(members)))
    return canonical_order(pool)


def _masks_by_size( n: int ) -> List[int]:
    return sorted(range(1 << n), key=lambda m: (bin(m).count("1"), m))


def build_universe( strict: Iterable[Formula], assumptions: Iterable[Formula],
                    pool: Iterable[Formula], minimal=False, derives: Optional[Derivability]=None,
                    maxPremises=MAX_PREMISES, maxAtoms=MAX_ATOMS ) -> ArgumentUniverse:
    """
    Enumerate every argument A' |~ G => C with A' a subset of the assumptions,
    G a subset of the strict set and C in the pool, such that the premises
    derive C.

    Premise sets are visited by increasing size (ties broken by the bitmask over
    the canonically ordered S followed by A); for each premise set the pool is
    scanned in canonical order. The resulting order is deterministic.

    Parameters
    ----------
    strict : iterable of Formula
        the strict set S; must be consistent when there are assumptions and
        derives is None

    assumptions : iterable of Formula
        the assumption set A; must be disjoint from S

    pool : iterable of Formula
        candidate conclusions

    minimal : bool, optional
        if True, keep only arguments whose premise set is subset-minimal among
        premise sets deriving the same conclusion

    derives : callable, optional
        derivability test derives(premises, goal) -> bool; if None (default),
        classical consequence is used

    maxPremises : int, optional
        cap on |S| + |A|

    maxAtoms : int, optional
        cap on the joint atom count (classical derivability only)

    Returns
    -------
    universe : :class:`ArgumentUniverse`
    """
    strict = canonical_order(strict)
    assumptions = canonical_order(assumptions)
    pool = canonical_order(pool)
    overlap = set(strict) & set(assumptions)
    if len(overlap) > 0:
        msg = "Strict and assumption sets overlap: {0}".format(", ".join(str(f) for f in canonical_order(overlap)))
        raise ValueError(msg)
    nStrict = len(strict)
    premises = strict + assumptions
    n = len(premises)
    if n > maxPremises:
        msg = "{0:d} premises exceed the cap of {1:d}.".format(n, maxPremises)
        raise CapExceededError(msg)

    if derives is None:
        table = TruthTable.forFormulas(premises + pool, maxAtoms=maxAtoms)
        # flat universes may be built over inconsistent premises
        if len(assumptions) > 0 and not table.isConsistent(strict):
            raise InconsistentStrictError("The strict set is inconsistent.")
        # row k of poolFalse marks the valuations falsifying pool[k]
        if len(pool) > 0:
            poolFalse = ~np.array([table.column(f) for f in pool])
        else:
            poolFalse = np.zeros((0, table.nRows), dtype=bool)
        premiseColumns = [table.column(f) for f in premises]

    arguments = []
    foundMasks = [[] for _ in pool]   #type: List[List[int]]
    for mask in _masks_by_size(n):
        members = [j for j in range(n) if (mask >> j) & 1]
        if derives is None:
            conj = np.ones(table.nRows, dtype=bool)
            for j in members:
                conj = conj & premiseColumns[j]
            entailed = ~np.any(poolFalse & conj, axis=1)
        else:
            premiseSet = tuple(premises[j] for j in members)
            entailed = [derives(premiseSet, goal) for goal in pool]
        for k, goal in enumerate(pool):
            if not entailed[k]:
                continue
            if minimal:
                if any((m & mask) == m for m in foundMasks[k]):
                    continue
                foundMasks[k].append(mask)
            support = [premises[j] for j in members if j < nStrict]
            assumed = [premises[j] for j in members if j >= nStrict]
            arguments.append(AssumptiveArgument(assumed, support, goal))

    log.debug("built universe: %d arguments from %d strict, %d assumptions, %d pool formulas",
              len(arguments), nStrict, n - nStrict, len(pool))
    return ArgumentUniverse(arguments, strict, assumptions, pool, minimal=minimal)
