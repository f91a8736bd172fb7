"""
Extension-based semantics for argumentation frameworks: conflict-freeness,
defence, admissibility, and the grounded, complete, preferred and stable
extensions.

Semantics are computed on the attack relation alone, stored as a square numpy
boolean matrix M with M[i, j] == True iff argument i attacks argument j. Sets of
arguments are boolean vectors (or iterables of indices, converted on entry).

Complete extensions are enumerated over a condensed framework: arguments with
identical attacker sets are accepted or rejected together by every complete
extension, so the search runs over those classes, after fixing the grounded
extension and discarding everything it rules out.
"""

import logging
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np   # type: ignore

from .formulas import CapExceededError


__all__ = ['AttackGraph', 'Extension', 'SEMANTICS', 'is_conflict_free', 'defends',
           'attacks_argument', 'is_admissible', 'is_complete', 'is_stable',
           'grounded_extension', 'complete_extensions', 'preferred_extensions',
           'stable_extensions', 'get_extensions', 'enumerate_extensions_bruteforce',
           'MAX_CLASSES', 'MAX_ARGUMENTS']

log = logging.getLogger(__name__)

SEMANTICS = ("grd", "cmp", "prf", "stb")
semanticsNames = {"grd": "grounded", "cmp": "complete", "prf": "preferred", "stb": "stable"}

# Default cap on the number of undecided attacker-set classes
MAX_CLASSES = 20
# Default cap on the framework size for the brute-force oracle
MAX_ARGUMENTS = 12



class AttackGraph(object):
    """
    An abstract argumentation framework: arguments 0 .. n-1 and an attack relation.

    Attributes
    ----------
        attackMatrix : 2D ndarray of bool
            attackMatrix[i, j] is True iff i attacks j
        nArguments : int
    """
    def __init__( self, attackMatrix ):
        M = np.asarray(attackMatrix, dtype=bool)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise ValueError("Attack matrix must be square (shape = {0}).".format(M.shape))
        self.attackMatrix = M


    @classmethod
    def fromPairs( cls, nArguments: int, pairs: Iterable[Tuple[int, int]] ):
        """
        Build an AttackGraph from (attacker, attacked) index pairs.
        """
        M = np.zeros((nArguments, nArguments), dtype=bool)
        for i, j in pairs:
            M[i, j] = True
        return cls(M)


    @property
    def nArguments( self ):
        return self.attackMatrix.shape[0]


    def attackersOf( self, j: int ) -> List[int]:
        return np.flatnonzero(self.attackMatrix[:, j]).tolist()


    def attackedBy( self, i: int ) -> List[int]:
        """Indices of the arguments attacked by argument i."""
        return np.flatnonzero(self.attackMatrix[i]).tolist()


    def attackPairs( self ) -> List[Tuple[int, int]]:
        rows, cols = np.nonzero(self.attackMatrix)
        return [(int(i), int(j)) for i, j in zip(rows, cols)]



class Extension(object):
    """
    A set of argument indices produced by one of the semantics.

    Attributes
    ----------
        members : frozenset of int
        semantics : str
            one of "grd", "cmp", "prf", "stb" (or "" for an untagged set)
    """
    __slots__ = ('members', 'semantics')

    def __init__( self, members: Iterable[int], semantics="" ):
        self.members = frozenset(int(i) for i in members)
        self.semantics = semantics

    def sortKey( self ):
        return (len(self.members), sorted(self.members))

    def __len__( self ):
        return len(self.members)

    def __iter__( self ):
        return iter(sorted(self.members))

    def __contains__( self, i ):
        return i in self.members

    def __eq__( self, rhs ):
        if not isinstance(rhs, Extension):
            return False
        return self.members == rhs.members and self.semantics == rhs.semantics

    def __hash__( self ):
        return hash((self.members, self.semantics))

    def __repr__( self ):
        return "Extension({0}, {1!r})".format(sorted(self.members), self.semantics)



def _matrix( F ) -> np.ndarray:
    return F.attackMatrix


def _as_vector( F, SS ) -> np.ndarray:
    n = F.attackMatrix.shape[0]
    if isinstance(SS, np.ndarray) and SS.dtype == bool:
        return SS
    E = np.zeros(n, dtype=bool)
    for i in SS:
        E[i] = True
    return E


def _attacked( M: np.ndarray, E: np.ndarray ) -> np.ndarray:
    """Arguments attacked by some member of E."""
    return M[E].any(axis=0)


def _defended( M: np.ndarray, E: np.ndarray ) -> np.ndarray:
    """Arguments all of whose attackers are attacked by E."""
    attacked = _attacked(M, E)
    return ~(M & ~attacked[:, None]).any(axis=0)


def _vector_conflict_free( M: np.ndarray, E: np.ndarray ) -> bool:
    return not M[np.ix_(E, E)].any()


def _vector_complete( M: np.ndarray, E: np.ndarray ) -> bool:
    return _vector_conflict_free(M, E) and np.array_equal(E, _defended(M, E))


def _vector_stable( M: np.ndarray, E: np.ndarray ) -> bool:
    return _vector_conflict_free(M, E) and bool(np.all(E | _attacked(M, E)))



def is_conflict_free( F, SS ) -> bool:
    """
    True iff no member of SS attacks a member of SS.
    """
    return _vector_conflict_free(_matrix(F), _as_vector(F, SS))


def attacks_argument( F, SS, i: int ) -> bool:
    """True iff some member of SS attacks argument i."""
    M = _matrix(F)
    return bool(M[_as_vector(F, SS), i].any())


def defends( F, SS, i: int ) -> bool:
    """
    True iff every attacker of argument i is attacked by some member of SS.
    """
    M = _matrix(F)
    attacked = _attacked(M, _as_vector(F, SS))
    return not bool((M[:, i] & ~attacked).any())


def is_admissible( F, SS ) -> bool:
    M = _matrix(F)
    E = _as_vector(F, SS)
    return _vector_conflict_free(M, E) and not bool((E & ~_defended(M, E)).any())


def is_complete( F, SS ) -> bool:
    return _vector_complete(_matrix(F), _as_vector(F, SS))


def is_stable( F, SS ) -> bool:
    """
    True iff SS is conflict-free and attacks every argument not in it.
    """
    return _vector_stable(_matrix(F), _as_vector(F, SS))



def _sorted_extensions( vectors: Iterable[np.ndarray], semantics: str ) -> List[Extension]:
    exts = [Extension(np.flatnonzero(E), semantics) for E in vectors]
    exts.sort(key=lambda e: e.sortKey())
    return exts


def _grounded_vector( M: np.ndarray ) -> np.ndarray:
    E = np.zeros(M.shape[0], dtype=bool)
    while True:
        D = _defended(M, E)
        if np.array_equal(D, E):
            return E
        E = D


def grounded_extension( F ) -> Extension:
    """
    The grounded extension: least fixed point of the defence operator,
    obtained by iterating it from the empty set.

    Parameters
    ----------
    F : AttackGraph or Framework

    Returns
    -------
    extension : :class:`Extension` (tagged "grd")
    """
    E = _grounded_vector(_matrix(F))
    return Extension(np.flatnonzero(E), "grd")


def _complete_vectors( M: np.ndarray, maxClasses=MAX_CLASSES ) -> List[np.ndarray]:
    n = M.shape[0]
    grounded = _grounded_vector(M)
    # anything attacked by the grounded extension is out of every complete extension
    # (attacking it implies being attacked by it); self-attackers are always out
    undecided = ~grounded & ~_attacked(M, grounded) & ~np.diagonal(M)

    # condense undecided arguments by identical attacker sets (columns of M)
    classIndex = {}   #type: dict
    classes = []   #type: List[List[int]]
    for j in np.flatnonzero(undecided):
        key = M[:, j].tobytes()
        if key not in classIndex:
            classIndex[key] = len(classes)
            classes.append([])
        classes[classIndex[key]].append(int(j))
    # a class with a self-attacking member can never be accepted
    classes = [c for c in classes if not M[np.ix_(c, c)].any()]
    k = len(classes)
    if k > maxClasses:
        msg = "{0:d} undecided argument classes exceed the cap of {1:d}.".format(k, maxClasses)
        raise CapExceededError(msg)
    log.debug("complete enumeration: %d arguments, %d grounded, %d undecided classes",
              n, int(grounded.sum()), k)

    P = np.zeros((k, n), dtype=bool)
    for c, members in enumerate(classes):
        P[c, members] = True
    Pi = P.astype(np.int64)
    conflict = (Pi @ M.astype(np.int64) @ Pi.T) > 0
    conflict = conflict | conflict.T

    results = []
    def search( pos: int, chosen: List[int], blocked: np.ndarray ):
        if pos == k:
            E = grounded | P[chosen].any(axis=0) if chosen else grounded.copy()
            if _vector_complete(M, E):
                results.append(E)
            return
        search(pos + 1, chosen, blocked)
        if not blocked[pos]:
            search(pos + 1, chosen + [pos], blocked | conflict[pos])

    search(0, [], np.zeros(k, dtype=bool))
    log.debug("complete enumeration: %d complete extensions", len(results))
    return results


def complete_extensions( F, maxClasses=MAX_CLASSES ) -> List[Extension]:
    """
    All complete extensions, sorted by size and then by member indices.

    Parameters
    ----------
    F : AttackGraph or Framework

    maxClasses : int, optional
        cap on the number of undecided attacker-set classes

    Returns
    -------
    extensions : list of :class:`Extension` (tagged "cmp")
    """
    return _sorted_extensions(_complete_vectors(_matrix(F), maxClasses), "cmp")


def _maximal( vectors: List[np.ndarray] ) -> List[np.ndarray]:
    maximal = []
    for E in vectors:
        if not any(not np.array_equal(E, D) and not (E & ~D).any() for D in vectors):
            maximal.append(E)
    return maximal


def preferred_extensions( F, maxClasses=MAX_CLASSES ) -> List[Extension]:
    """
    The subset-maximal complete extensions.
    """
    vectors = _complete_vectors(_matrix(F), maxClasses)
    return _sorted_extensions(_maximal(vectors), "prf")


def stable_extensions( F, maxClasses=MAX_CLASSES ) -> List[Extension]:
    """
    Complete extensions which attack every argument outside them (possibly none).
    """
    M = _matrix(F)
    vectors = _complete_vectors(M, maxClasses)
    return _sorted_extensions([E for E in vectors if _vector_stable(M, E)], "stb")


def get_extensions( F, semantics: str, maxClasses=MAX_CLASSES ) -> List[Extension]:
    """
    Returns the list of extensions of F for one of the semantics
    "grd", "cmp", "prf", "stb".
    """
    if semantics == "grd":
        return [grounded_extension(F)]
    elif semantics == "cmp":
        return complete_extensions(F, maxClasses)
    elif semantics == "prf":
        return preferred_extensions(F, maxClasses)
    elif semantics == "stb":
        return stable_extensions(F, maxClasses)
    raise ValueError("Unknown semantics \"{0}\" (must be one of {1})".format(semantics, ", ".join(SEMANTICS)))



def enumerate_extensions_bruteforce( F, semantics: str, maxArguments=MAX_ARGUMENTS ) -> List[Extension]:
    """
    Reference enumeration of extensions by testing every subset of arguments.

    Used as an oracle for the condensed enumeration; only practical for small
    frameworks.

    Parameters
    ----------
    F : AttackGraph or Framework

    semantics : str
        "grd", "cmp", "prf" or "stb"

    maxArguments : int, optional
        cap on the number of arguments

    Returns
    -------
    extensions : list of :class:`Extension`
    """
    if semantics not in SEMANTICS:
        raise ValueError("Unknown semantics \"{0}\"".format(semantics))
    M = _matrix(F)
    n = M.shape[0]
    if n > maxArguments:
        msg = "{0:d} arguments exceed the brute-force cap of {1:d}.".format(n, maxArguments)
        raise CapExceededError(msg)
    rows = np.arange(1 << n, dtype=np.int64)
    complete = []
    for mask in rows:
        E = ((mask >> np.arange(n)) & 1).astype(bool)
        if _vector_complete(M, E):
            complete.append(E)
    if semantics == "cmp":
        chosen = complete
    elif semantics == "prf":
        chosen = _maximal(complete)
    elif semantics == "stb":
        chosen = [E for E in complete if _vector_stable(M, E)]
    else:
        # grounded = the subset-minimal complete extension
        chosen = [E for E in complete
                  if not any(not np.array_equal(E, D) and not (D & ~E).any() for D in complete)]
    return _sorted_extensions(chosen, semantics)
