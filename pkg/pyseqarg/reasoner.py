"""
The Reasoner class: builds the argument universe and framework for a problem
description and answers argument, attack, extension, entailment and MCS
queries about it.
"""

import copy
import logging
from typing import List, Optional, Union

from .formulas import Formula, as_formula, MAX_ATOMS
from .arguments import ArgumentUniverse, build_universe, default_pool, MAX_PREMISES
from .attacks import AttackRule, Framework, build_framework
from .semantics import Extension, MAX_CLASSES
from .entailment import ExtensionCache, QueryResult, query_entailment, EntailmentMode
from .mcs import McsFamily, mcs, mcs_with_assumptions, minimal_conflicts, free
from .aba import AbaFramework, RULE_SYSTEM, aba_default_pool, aba_maximal_consistent_sets
from .aba import translate_to_sequent
from .descriptions import ProblemDescription


__all__ = ['Reasoner']

log = logging.getLogger(__name__)



class Reasoner( object ):
    """
    The main class for reasoning about a problem description.

    The argument universe and framework are built on first use and kept; adding
    a query which is not in the conclusion pool rebuilds them with the query
    added to the pool, so entailment answers never depend on the pool.

    Attributes
    ----------
    maxAtoms : int
    maxPremises : int
    maxClasses : int
        caps in effect (keyword arguments override the problem's options, which
        override the module defaults)

    See also
    --------
    parse_problem_file
    """

    def __init__( self, problem: Union[ProblemDescription, dict], maxAtoms: Optional[int]=None,
                  maxPremises: Optional[int]=None, maxClasses: Optional[int]=None ):
        """
        Parameters
        ----------
        problem : :class:`ProblemDescription` OR dict
            the problem; a dict is converted with
            ProblemDescription.dict_to_ProblemDescription

        maxAtoms : int, optional
            cap on distinct atoms per truth table

        maxPremises : int, optional
            cap on |S| + |A|

        maxClasses : int, optional
            cap on undecided argument classes during extension enumeration
        """
        if (type(problem) != dict) and not (isinstance(problem, ProblemDescription)):
            raise ValueError('problem must be a ProblemDescription object or a dict.')
        # keep our own copy, since queries may be added to it
        if type(problem) is dict:
            self._problem = ProblemDescription.dict_to_ProblemDescription(problem)
        else:
            self._problem = copy.deepcopy(problem)
        self._problem.validate()
        self.maxAtoms = maxAtoms if maxAtoms is not None else self._problem.getCap("max-atoms", MAX_ATOMS)
        self.maxPremises = maxPremises if maxPremises is not None else self._problem.getCap("max-premises", MAX_PREMISES)
        self.maxClasses = maxClasses if maxClasses is not None else self._problem.getCap("max-classes", MAX_CLASSES)
        self._aba = None   #type: Optional[AbaFramework]
        self._framework = None   #type: Optional[Framework]
        self._cache = ExtensionCache()


    def getProblemDescription( self ) -> ProblemDescription:
        """
        Returns
        -------
        problem : :class:`ProblemDescription`
            A copy of the problem, including any queries added since construction.
        """
        return copy.deepcopy(self._problem)


    @property
    def mode( self ):
        return self._problem.mode


    @property
    def isRuleSystem( self ):
        return self._problem.mode == "aba" and self._problem.effectiveDeduction == RULE_SYSTEM


    def getAbaFramework( self ) -> AbaFramework:
        """
        The (validated) ABA framework of an aba or assumptive problem.
        """
        if self._aba is None:
            aba = self._problem.getAbaFramework(maxAtoms=self.maxAtoms)
            aba.validate()
            self._aba = aba
        return self._aba


    def getPool( self ):
        """
        The conclusion pool used for the argument universe.
        """
        problem = self._problem
        if problem.mode == "aba":
            return aba_default_pool(self.getAbaFramework(), problem.queries)
        rules = problem.effectiveAttackRules
        undercuts = AttackRule.UCUT in rules or AttackRule.DUCUT in rules
        contraries = problem.contraryMap().values() if problem.mode == "assumptive" else ()
        return default_pool(problem.strict, problem.assumptions, contraries, problem.queries,
                            negatedConjunctions=undercuts, maxPremises=self.maxPremises)


    def getFramework( self ) -> Framework:
        """
        The sequent-based framework of the problem (for aba problems, the
        translation of the ABA framework).
        """
        if self._framework is not None:
            return self._framework
        problem = self._problem
        if problem.mode == "aba":
            framework = translate_to_sequent(self.getAbaFramework(), queries=problem.queries,
                                             minimal=problem.effectiveMinimal,
                                             maxPremises=self.maxPremises)
        else:
            universe = build_universe(problem.strict, problem.assumptions, self.getPool(),
                                      minimal=problem.effectiveMinimal, maxPremises=self.maxPremises,
                                      maxAtoms=self.maxAtoms)
            contrary = problem.contraryMap() if problem.mode == "assumptive" else None
            framework = build_framework(universe, problem.effectiveAttackRules, contrary,
                                        maxAtoms=self.maxAtoms)
        self._framework = framework
        self._cache.clear()
        return framework


    def getUniverse( self ) -> ArgumentUniverse:
        return self.getFramework().universe


    def addQuery( self, phi: Union[str, Formula] ):
        """
        Add a query formula; the framework is rebuilt (on next use) if the query
        is not already in the conclusion pool.
        """
        phi = as_formula(phi)
        inPool = self._framework is not None and phi in self._framework.universe.pool
        self._problem.addQuery(phi)
        if not inPool and self._framework is not None:
            log.info("query %s not in the conclusion pool; rebuilding the framework", phi)
            self._framework = None
            self._cache.clear()


    def getExtensions( self, semantics: str ) -> List[Extension]:
        return self._cache.get(self.getFramework(), semantics, maxClasses=self.maxClasses)


    def queryEntailment( self, semantics: str, mode: Union[str, EntailmentMode],
                         phi: Union[str, Formula] ) -> QueryResult:
        """
        Answer an entailment query, rebuilding the framework first if the query
        is outside the conclusion pool.

        Parameters
        ----------
        semantics : str
            "grd", "cmp", "prf" or "stb"

        mode : str or EntailmentMode
            "cap", "cup" or "wcap"

        phi : str or Formula

        Returns
        -------
        result : :class:`~pyseqarg.entailment.QueryResult`
        """
        phi = as_formula(phi)
        self.addQuery(phi)
        return query_entailment(self.getFramework(), semantics, mode, phi, cache=self._cache,
                                maxClasses=self.maxClasses)


    def getMcsFamily( self ) -> McsFamily:
        """
        MCS(S) for flat problems, MCS(S, A) otherwise (for rule systems, the
        maximal assumption sets consistent in the ABA sense).
        """
        problem = self._problem
        if problem.mode == "flat":
            return mcs(problem.strict, maxPremises=self.maxPremises, maxAtoms=self.maxAtoms)
        if self.isRuleSystem:
            AF = self.getAbaFramework()
            return McsFamily(AF.strict, aba_maximal_consistent_sets(AF), assumptions=AF.assumptions)
        return mcs_with_assumptions(problem.strict, problem.assumptions, maxPremises=self.maxPremises,
                                    maxAtoms=self.maxAtoms)


    def getMinimalConflicts( self ):
        """Minimal conflicts of S (flat) or of S together with A."""
        problem = self._problem
        return minimal_conflicts(problem.strict + problem.assumptions, maxPremises=self.maxPremises,
                                 maxAtoms=self.maxAtoms)


    def getFree( self ):
        problem = self._problem
        return free(problem.strict + problem.assumptions, maxPremises=self.maxPremises,
                    maxAtoms=self.maxAtoms)
