"""
Reasoning with maximally consistent subsets (MCS) of a premise set: the
families MCS(S) and MCS(S, A), minimal conflicts, free formulas, closure
membership, and the three MCS-based entailment modes.

Everything here is computed by exhaustive subset enumeration over a shared
truth table, and serves as the reference against which the argumentation-based
entailments are checked.
"""

import logging
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple, Union

import numpy as np   # type: ignore

from .formulas import Formula, TruthTable, CapExceededError, MAX_ATOMS
from .formulas import canonical_order, entails_classical
from .arguments import InconsistentStrictError, MAX_PREMISES
from .entailment import EntailmentMode


__all__ = ['McsFamily', 'mcs', 'mcs_with_assumptions', 'minimal_conflicts', 'free',
           'cn_contains', 'mcs_entails', 'mcs_entails_assumptive']

log = logging.getLogger(__name__)



class McsFamily(object):
    """
    A family of maximally consistent subsets.

    Attributes
    ----------
        strict : tuple of Formula
            the set S
        assumptions : tuple of Formula or None
            the set A, for a family MCS(S, A); None for a flat family MCS(S)
        members : list of tuple of Formula
            each member in canonical order; members sorted by their serializations
    """
    def __init__( self, strict: Iterable[Formula], members: Iterable[Iterable[Formula]],
                  assumptions: Optional[Iterable[Formula]]=None ):
        self.strict = canonical_order(strict)
        self.assumptions = canonical_order(assumptions) if assumptions is not None else None
        self.members = sorted((canonical_order(m) for m in members), key=lambda m: [f.text for f in m])


    @property
    def isAssumptive( self ):
        return self.assumptions is not None


    def __len__( self ):
        return len(self.members)

    def __iter__( self ) -> Iterator[Tuple[Formula, ...]]:
        return iter(self.members)

    def __getitem__( self, i ):
        return self.members[i]


    def memberSets( self ) -> List[FrozenSet[Formula]]:
        return [frozenset(m) for m in self.members]


    def intersection( self ) -> Tuple[Formula, ...]:
        """
        The formulas common to every member (empty for an empty family).
        """
        if len(self.members) == 0:
            return ()
        common = frozenset(self.members[0])
        for m in self.members[1:]:
            common &= frozenset(m)
        return canonical_order(common)


    def getStringDescription( self ) -> List[str]:
        return ["{" + ", ".join(f.text for f in m) + "}\n" for m in self.members]


    def __eq__( self, rhs ):
        if not isinstance(rhs, McsFamily):
            return False
        return (self.strict == rhs.strict and self.assumptions == rhs.assumptions and
                self.members == rhs.members)


    def __str__( self ):
        return "".join(self.getStringDescription())



def _check_cap( n: int, maxPremises: int ):
    if n > maxPremises:
        msg = "{0:d} formulas exceed the cap of {1:d}.".format(n, maxPremises)
        raise CapExceededError(msg)


def _subset_masks( n: int, descending=False ) -> List[int]:
    sign = -1 if descending else 1
    return sorted(range(1 << n), key=lambda m: (sign * bin(m).count("1"), m))


def _maximal_consistent( candidates: Tuple[Formula, ...], base: np.ndarray,
                         columns: List[np.ndarray] ) -> List[Tuple[Formula, ...]]:
    """
    Subset-maximal subsets of candidates whose conjunction with the base column
    is satisfiable, found by descending size with superset pruning.
    """
    n = len(candidates)
    found = []   #type: List[int]
    for mask in _subset_masks(n, descending=True):
        if any((mask & m) == mask for m in found):
            continue
        conj = base.copy()
        for j in range(n):
            if (mask >> j) & 1:
                conj &= columns[j]
        if conj.any():
            found.append(mask)
    return [tuple(candidates[j] for j in range(n) if (m >> j) & 1) for m in found]


def mcs( S: Iterable[Formula], maxPremises=MAX_PREMISES, maxAtoms=MAX_ATOMS ) -> McsFamily:
    """
    The maximally consistent subsets of S.

    Parameters
    ----------
    S : iterable of Formula

    maxPremises : int, optional
        cap on |S|

    maxAtoms : int, optional

    Returns
    -------
    family : :class:`McsFamily`
    """
    S = canonical_order(S)
    _check_cap(len(S), maxPremises)
    table = TruthTable.forFormulas(S, maxAtoms=maxAtoms)
    members = _maximal_consistent(S, np.ones(table.nRows, dtype=bool), [table.column(f) for f in S])
    log.debug("mcs: %d formulas, %d maximal consistent subsets", len(S), len(members))
    return McsFamily(S, members)


def mcs_with_assumptions( S: Iterable[Formula], A: Iterable[Formula], maxPremises=MAX_PREMISES,
                          maxAtoms=MAX_ATOMS ) -> McsFamily:
    """
    The subset-maximal T in A such that T together with S is consistent.

    Raises
    ------
    InconsistentStrictError
        if S itself is inconsistent
    """
    S = canonical_order(S)
    A = canonical_order(A)
    _check_cap(len(S) + len(A), maxPremises)
    table = TruthTable.forFormulas(S + A, maxAtoms=maxAtoms)
    base = table.conjunction(S)
    if not base.any():
        raise InconsistentStrictError("The strict set is inconsistent.")
    members = _maximal_consistent(A, base, [table.column(f) for f in A])
    log.debug("mcs(S, A): %d strict, %d assumptions, %d members", len(S), len(A), len(members))
    return McsFamily(S, members, assumptions=A)


def minimal_conflicts( T: Iterable[Formula], maxPremises=MAX_PREMISES,
                       maxAtoms=MAX_ATOMS ) -> List[Tuple[Formula, ...]]:
    """
    All subset-minimal inconsistent subsets of T, sorted by their serializations.
    """
    T = canonical_order(T)
    n = len(T)
    _check_cap(n, maxPremises)
    table = TruthTable.forFormulas(T, maxAtoms=maxAtoms)
    columns = [table.column(f) for f in T]
    found = []   #type: List[int]
    for mask in _subset_masks(n):
        if mask == 0 or any((m & mask) == m for m in found):
            continue
        conj = np.ones(table.nRows, dtype=bool)
        for j in range(n):
            if (mask >> j) & 1:
                conj &= columns[j]
        if not conj.any():
            found.append(mask)
    conflicts = [tuple(T[j] for j in range(n) if (m >> j) & 1) for m in found]
    conflicts.sort(key=lambda c: [f.text for f in c])
    return conflicts


def free( T: Iterable[Formula], maxPremises=MAX_PREMISES, maxAtoms=MAX_ATOMS ) -> Tuple[Formula, ...]:
    """
    The members of T which belong to no minimal conflict.
    """
    T = canonical_order(T)
    involved = set()   #type: set
    for conflict in minimal_conflicts(T, maxPremises=maxPremises, maxAtoms=maxAtoms):
        involved.update(conflict)
    return tuple(f for f in T if f not in involved)


def cn_contains( T: Iterable[Formula], phi: Formula, maxAtoms=MAX_ATOMS ) -> bool:
    """True iff phi belongs to the classical closure of T."""
    return entails_classical(T, phi, maxAtoms=maxAtoms)


def _family_entails( family: McsFamily, phi: Formula, mode: EntailmentMode, maxAtoms: int ) -> bool:
    extra = family.strict if family.isAssumptive else ()
    if mode is EntailmentMode.CAP:
        return cn_contains(family.intersection() + extra, phi, maxAtoms=maxAtoms)
    results = (cn_contains(m + extra, phi, maxAtoms=maxAtoms) for m in family.members)
    if mode is EntailmentMode.WCAP:
        return all(results)
    return any(results)


def mcs_entails( S: Iterable[Formula], phi: Formula, mode: Union[str, EntailmentMode],
                 maxPremises=MAX_PREMISES, maxAtoms=MAX_ATOMS ) -> bool:
    """
    MCS-based entailment from S.

    Parameters
    ----------
    S : iterable of Formula

    phi : Formula

    mode : str or EntailmentMode
        "cap": phi follows from the intersection of MCS(S);
        "cup": phi follows from some member;
        "wcap": phi follows from every member

    Returns
    -------
    result : bool
    """
    mode = EntailmentMode.fromName(mode)
    return _family_entails(mcs(S, maxPremises, maxAtoms), phi, mode, maxAtoms)


def mcs_entails_assumptive( S: Iterable[Formula], A: Iterable[Formula], phi: Formula,
                            mode: Union[str, EntailmentMode], maxPremises=MAX_PREMISES,
                            maxAtoms=MAX_ATOMS ) -> bool:
    """
    MCS-based entailment with assumptions: as mcs_entails over MCS(S, A), with
    S added to the intersection (cap) or to each member (cup, wcap).
    """
    mode = EntailmentMode.fromName(mode)
    return _family_entails(mcs_with_assumptions(S, A, maxPremises, maxAtoms), phi, mode, maxAtoms)
