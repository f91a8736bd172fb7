"""
Nonmonotonic entailment over argumentation frameworks.

Three modes are supported, for a goal formula phi and the extensions Exts of a
framework under some semantics:

    cap  -- some argument concluding phi belongs to every extension
    cup  -- some extension contains an argument concluding phi
    wcap -- every extension contains some argument concluding phi

With no extensions at all, cap and wcap hold vacuously and cup fails.
"""

import logging
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

from .formulas import Formula
from .semantics import Extension, get_extensions, SEMANTICS, MAX_CLASSES
from .aba import AbaFramework, build_aba_framework
from .arguments import MAX_PREMISES


__all__ = ['EntailmentMode', 'QueryResult', 'ExtensionCache', 'PoolMissError',
           'entails', 'entails_aba', 'query_entailment']

log = logging.getLogger(__name__)


class PoolMissError(ValueError):
    pass



class EntailmentMode(Enum):
    CAP = "cap"
    CUP = "cup"
    WCAP = "wcap"

    @classmethod
    def fromName( cls, name: Union[str, "EntailmentMode"] ) -> "EntailmentMode":
        if isinstance(name, EntailmentMode):
            return name
        try:
            return cls(name.strip().lower())
        except ValueError:
            names = ", ".join(m.value for m in cls)
            raise ValueError("Unknown entailment mode \"{0}\" (must be one of {1})".format(name, names))



class QueryResult( dict ):
    """
    Represents the answer to one entailment query.
    Constructed by query_entailment.

    Attributes
    ----------
    query : Formula
        The goal formula
    semantics : str
        Which semantics was used ("grd", "cmp", "prf", "stb")
    mode : EntailmentMode
    entailed : bool
        The answer
    extensions : list of Extension
    witnesses : list of int or None
        For each extension, the index of one argument in it concluding the query
        (None if there is none)
    common : list of int
        Arguments concluding the query which belong to every extension
    noExtensions : bool
        True if the semantics produced no extension (answer is then vacuous)

    Notes
    -----
    Since this class is essentially a subclass of dict with attribute accessors,
    the available attributes can be listed with the `keys()` method.
    """

    def __getattr__(self, name):
        try:
            return self[name]
        except KeyError:
            raise AttributeError(name)


    __setattr__ = dict.__setitem__
    __delattr__ = dict.__delitem__


    def __repr__(self):
        if self.keys():
            m = max(map(len, list(self.keys()))) + 1
            return '\n'.join([k.rjust(m) + ': ' + repr(v) for k, v in sorted(self.items())])
        else:
            return self.__class__.__name__ + "()"


    def __dir__(self):
        return list(self.keys())



class ExtensionCache(object):
    """
    Caches extension lists per (framework, semantics), so that one framework
    can answer many queries with a single enumeration per semantics.
    """
    def __init__( self ):
        self._entries = {}   #type: Dict[Tuple[int, str], Tuple[object, List[Extension]]]

    def get( self, F, semantics: str, maxClasses=MAX_CLASSES ) -> List[Extension]:
        key = (id(F), semantics)
        entry = self._entries.get(key)
        # the framework is held in the entry, so its id cannot be reused while cached
        if entry is not None and entry[0] is F:
            return entry[1]
        exts = get_extensions(F, semantics, maxClasses=maxClasses)
        self._entries[key] = (F, exts)
        return exts

    def clear( self ):
        self._entries.clear()

    def __len__( self ):
        return len(self._entries)



def query_entailment( F, semantics: str, mode: Union[str, EntailmentMode], phi: Formula,
                      cache: Optional[ExtensionCache]=None, maxClasses=MAX_CLASSES ) -> QueryResult:
    """
    Decide whether phi is entailed by the framework F under the given semantics
    and mode, and collect one witnessing argument per extension.

    Parameters
    ----------
    F : Framework or AbaArgumentFramework
        must provide `arguments` (each with a `conclusion`), `pool` and `attackMatrix`

    semantics : str
        "grd", "cmp", "prf" or "stb"

    mode : str or EntailmentMode
        "cap", "cup" or "wcap"

    phi : Formula
        the query; must be in the framework's conclusion pool

    cache : ExtensionCache, optional

    Returns
    -------
    result : :class:`QueryResult`
    """
    mode = EntailmentMode.fromName(mode)
    if semantics not in SEMANTICS:
        raise ValueError("Unknown semantics \"{0}\"".format(semantics))
    if phi not in _pool_of(F):
        raise PoolMissError("Query {0} is not in the conclusion pool; rebuild the framework with it.".format(phi))
    if cache is not None:
        exts = cache.get(F, semantics, maxClasses=maxClasses)
    else:
        exts = get_extensions(F, semantics, maxClasses=maxClasses)

    concluding = set(i for i, a in enumerate(F.arguments) if a.conclusion == phi)
    witnesses = []
    common = set(concluding)
    for ext in exts:
        inExt = concluding & ext.members
        witnesses.append(min(inExt) if len(inExt) > 0 else None)
        common &= ext.members

    if mode is EntailmentMode.CAP:
        entailed = len(exts) == 0 or len(common) > 0
    elif mode is EntailmentMode.WCAP:
        entailed = all(w is not None for w in witnesses)
    else:
        entailed = any(w is not None for w in witnesses)

    result = QueryResult()
    result.query = phi
    result.semantics = semantics
    result.mode = mode
    result.entailed = entailed
    result.extensions = exts
    result.witnesses = witnesses
    result.common = sorted(common) if len(exts) > 0 else []
    result.noExtensions = (len(exts) == 0)
    log.debug("query %s [%s, %s]: %s over %d extensions", phi, semantics, mode.value, entailed, len(exts))
    return result


def _pool_of( F ):
    if hasattr(F, "universe"):
        return F.universe.pool
    return F.pool


def entails( F, semantics: str, mode: Union[str, EntailmentMode], phi: Formula,
             cache: Optional[ExtensionCache]=None, maxClasses=MAX_CLASSES ) -> bool:
    """
    Returns True iff phi is entailed by the (sequent-based) framework F.
    See query_entailment.
    """
    return query_entailment(F, semantics, mode, phi, cache=cache, maxClasses=maxClasses).entailed


def entails_aba( AF: AbaFramework, semantics: str, mode: Union[str, EntailmentMode], phi: Formula,
                 maxPremises=MAX_PREMISES, maxClasses=MAX_CLASSES ) -> bool:
    """
    Entailment over the native ABA framework: the ABA arguments of AF (with phi
    added to the default goal pool) and the ABA attacks between them.
    """
    framework = build_aba_framework(AF, queries=[phi], maxPremises=maxPremises)
    return entails(framework, semantics, mode, phi, maxClasses=maxClasses)
