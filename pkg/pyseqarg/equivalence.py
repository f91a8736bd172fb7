"""
Cross-checks between the three reasoning engines on a single instance:

    - native ABA entailment against entailment over the translated sequent-based
      framework (all semantics and modes)
    - preferred and stable entailment against MCS-based entailment (all modes)

plus the structural correspondences behind them (argument bijection, attack
correspondence, the MCS characterization by contrary-concluding arguments,
consistency of complete extensions, and MCS <-> stable/preferred extensions).

The structural checks return lists of violation messages (empty when the
property holds).
"""

import logging
from collections import OrderedDict
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .formulas import Formula, canonical_order, is_consistent, MAX_ATOMS
from .arguments import all_assumptions, MAX_PREMISES
from .attacks import Framework
from .semantics import SEMANTICS, MAX_CLASSES, complete_extensions, preferred_extensions
from .semantics import stable_extensions
from .entailment import EntailmentMode, ExtensionCache, entails
from .mcs import mcs, mcs_with_assumptions, cn_contains
from .aba import AbaFramework, AbaArgumentFramework, aba_default_pool, build_aba_framework
from .aba import translate_to_sequent, find_contraposition_violation, format_violation
from .aba import is_aba_consistent, aba_maximal_consistent_sets, aba_cn_contains


__all__ = ['CheckReport', 'check_problem', 'check_aba_instance', 'check_flat_instance',
           'check_argument_bijection', 'check_attack_correspondence', 'check_mcs_characterization',
           'check_complete_consistency', 'check_mcs_stable_correspondence']

log = logging.getLogger(__name__)

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"
NOT_APPLICABLE = "-"

MCS_SEMANTICS = ("prf", "stb")
allModes = [m for m in EntailmentMode]



class CheckReport(object):
    """
    Per-(semantics, mode, query) table of answers from the three engines.

    Attributes
    ----------
        rows : list of OrderedDict
            keys "semantics", "mode", "query", "aba", "sequent", "mcs", "translation", "mcsAgreement";
            answers are bool or None (not computed); statuses are "PASS", "FAIL",
            "SKIP" or "-"
        notes : list of str
            e.g., the contraposition violation responsible for SKIP entries
    """
    def __init__( self ):
        self.rows = []   #type: List[OrderedDict]
        self.notes = []   #type: List[str]

    def addRow( self, semantics: str, mode: EntailmentMode, query: Formula, aba: Optional[bool],
                sequent: bool, mcsAnswer: Optional[bool], translationStatus: str, mcsStatus: str ):
        row = OrderedDict([("semantics", semantics), ("mode", mode.value), ("query", query.text),
                           ("aba", aba), ("sequent", sequent), ("mcs", mcsAnswer),
                           ("translation", translationStatus), ("mcsAgreement", mcsStatus)])
        self.rows.append(row)

    @property
    def failed( self ) -> bool:
        return any(row["translation"] == FAIL or row["mcsAgreement"] == FAIL for row in self.rows)

    def failures( self ) -> List[OrderedDict]:
        return [row for row in self.rows if row["translation"] == FAIL or row["mcsAgreement"] == FAIL]

    def getStringDescription( self ) -> List[str]:
        def show( value ):
            if value is None:
                return "-"
            return "yes" if value else "no"
        lines = ["# semantics mode query: aba sequent mcs | translation mcs-agreement\n"]
        for row in self.rows:
            lines.append("{0} {1} {2}: {3} {4} {5} | {6} {7}\n".format(
                row["semantics"], row["mode"], row["query"], show(row["aba"]), show(row["sequent"]),
                show(row["mcs"]), row["translation"], row["mcsAgreement"]))
        for note in self.notes:
            lines.append("# {0}\n".format(note))
        return lines

    def __str__( self ):
        return "".join(self.getStringDescription())



def _status( expected, actual ) -> str:
    return PASS if expected == actual else FAIL


def _family_answers( AF: AbaFramework, phi: Formula ) -> Dict[EntailmentMode, bool]:
    """MCS-based answers for phi, in the consistency notion matching AF's deduction style."""
    if AF.isCoreLogic:
        family = [m for m in mcs_with_assumptions(AF.strict, AF.assumptions, maxAtoms=AF.maxAtoms)]
        follows = lambda T: cn_contains(T + AF.strict, phi, maxAtoms=AF.maxAtoms)
    else:
        family = aba_maximal_consistent_sets(AF)
        follows = lambda T: aba_cn_contains(AF, T, phi)
    common = frozenset(family[0]) if len(family) > 0 else frozenset()
    for T in family[1:]:
        common &= frozenset(T)
    return {EntailmentMode.CAP: follows(canonical_order(common)),
            EntailmentMode.WCAP: all(follows(T) for T in family),
            EntailmentMode.CUP: any(follows(T) for T in family)}


def check_aba_instance( AF: AbaFramework, queries: Optional[Iterable[Formula]]=None,
                        semantics: Sequence[str]=SEMANTICS, modes: Sequence[EntailmentMode]=allModes,
                        minimal=True, maxPremises=MAX_PREMISES, maxClasses=MAX_CLASSES ) -> CheckReport:
    """
    Compare native ABA, translated sequent-based and MCS-based entailment on
    one ABA framework.

    Parameters
    ----------
    AF : AbaFramework

    queries : iterable of Formula, optional
        defaults to the default goal pool (S, A and the contraries)

    semantics : sequence of str, optional

    modes : sequence of EntailmentMode, optional

    Returns
    -------
    report : :class:`CheckReport`
        MCS comparisons are SKIP when AF violates contraposition for assumptions
    """
    AF.validate()
    queries = canonical_order(queries) if queries is not None else aba_default_pool(AF)
    pool = aba_default_pool(AF, queries)
    native = build_aba_framework(AF, pool, maxPremises=maxPremises)
    translated = translate_to_sequent(AF, pool, minimal=minimal, maxPremises=maxPremises)
    violation = find_contraposition_violation(AF)
    report = CheckReport()
    if violation is not None:
        report.notes.append("contraposition fails: " + format_violation(violation))
    nativeCache = ExtensionCache()
    translatedCache = ExtensionCache()
    for phi in queries:
        mcsAnswers = _family_answers(AF, phi)
        for sem in semantics:
            for mode in modes:
                abaAnswer = entails(native, sem, mode, phi, cache=nativeCache, maxClasses=maxClasses)
                seqAnswer = entails(translated, sem, mode, phi, cache=translatedCache, maxClasses=maxClasses)
                translationStatus = _status(abaAnswer, seqAnswer)
                if sem in MCS_SEMANTICS:
                    mcsAnswer = mcsAnswers[mode]
                    mcsStatus = SKIP if violation is not None else _status(mcsAnswer, seqAnswer)
                else:
                    mcsAnswer = None
                    mcsStatus = NOT_APPLICABLE
                report.addRow(sem, mode, phi, abaAnswer, seqAnswer, mcsAnswer, translationStatus, mcsStatus)
    log.debug("checked %d queries: %d failures", len(queries), len(report.failures()))
    return report


def check_flat_instance( framework: Framework, queries: Iterable[Formula],
                         semantics: Sequence[str]=SEMANTICS, modes: Sequence[EntailmentMode]=allModes,
                         maxPremises=MAX_PREMISES, maxAtoms=MAX_ATOMS,
                         maxClasses=MAX_CLASSES ) -> CheckReport:
    """
    Compare preferred and stable entailment over a flat framework with MCS-based
    entailment from its strict set (the queries must be in the framework's pool).
    """
    S = framework.universe.strict
    family = mcs(S, maxPremises=maxPremises, maxAtoms=maxAtoms)
    common = family.intersection()
    cache = ExtensionCache()
    report = CheckReport()
    for phi in canonical_order(queries):
        mcsAnswers = {EntailmentMode.CAP: cn_contains(common, phi, maxAtoms=maxAtoms),
                      EntailmentMode.WCAP: all(cn_contains(T, phi, maxAtoms=maxAtoms) for T in family),
                      EntailmentMode.CUP: any(cn_contains(T, phi, maxAtoms=maxAtoms) for T in family)}
        for sem in semantics:
            for mode in modes:
                seqAnswer = entails(framework, sem, mode, phi, cache=cache, maxClasses=maxClasses)
                if sem in MCS_SEMANTICS:
                    report.addRow(sem, mode, phi, None, seqAnswer, mcsAnswers[mode], NOT_APPLICABLE,
                                  _status(mcsAnswers[mode], seqAnswer))
                else:
                    report.addRow(sem, mode, phi, None, seqAnswer, None, NOT_APPLICABLE, NOT_APPLICABLE)
    return report


def check_problem( reasoner, semantics: Optional[Sequence[str]]=None,
                   modes: Optional[Sequence[EntailmentMode]]=None ) -> CheckReport:
    """
    Run the equivalence checks appropriate to a problem.

    Parameters
    ----------
    reasoner : Reasoner

    semantics : sequence of str, optional
        defaults to the problem's semantics, or all four

    modes : sequence of EntailmentMode, optional
        defaults to the problem's entailment modes, or all three

    Returns
    -------
    report : :class:`CheckReport`
    """
    problem = reasoner.getProblemDescription()
    if semantics is None:
        semantics = problem.semantics if len(problem.semantics) > 0 else SEMANTICS
    if modes is None:
        modes = [EntailmentMode.fromName(m) for m in problem.entailment] if len(problem.entailment) > 0 else allModes
    queries = problem.queries if len(problem.queries) > 0 else None
    if problem.mode == "flat":
        # the default pool always holds S
        if queries is None:
            queries = problem.strict
        return check_flat_instance(reasoner.getFramework(), queries, semantics, modes,
                                   maxPremises=reasoner.maxPremises, maxAtoms=reasoner.maxAtoms,
                                   maxClasses=reasoner.maxClasses)
    return check_aba_instance(reasoner.getAbaFramework(), queries, semantics, modes,
                              minimal=problem.effectiveMinimal,
                              maxPremises=reasoner.maxPremises, maxClasses=reasoner.maxClasses)



# Structural correspondences

def _key( a ) -> Tuple:
    return (tuple(a.assumptions), tuple(a.support), a.conclusion)


def check_argument_bijection( native: AbaArgumentFramework, translated: Framework ) -> List[str]:
    """
    Every ABA argument has a sequent counterpart with the same assumptions,
    support and conclusion, and vice versa.
    """
    nativeKeys = set(_key(a) for a in native.arguments)
    translatedKeys = set(_key(a) for a in translated.arguments)
    problems = []
    for key in sorted(nativeKeys - translatedKeys, key=str):
        problems.append("ABA argument without sequent counterpart: {0}".format(key))
    for key in sorted(translatedKeys - nativeKeys, key=str):
        problems.append("sequent argument without ABA counterpart: {0}".format(key))
    if len(native.arguments) != len(translated.arguments):
        problems.append("argument counts differ: {0:d} vs {1:d}".format(len(native.arguments), len(translated.arguments)))
    return problems


def check_attack_correspondence( native: AbaArgumentFramework, translated: Framework ) -> List[str]:
    """
    Under the argument bijection, a attacks b natively iff a' attacks b' in the
    translated framework.
    """
    position = {_key(a): i for i, a in enumerate(translated.arguments)}
    try:
        mapping = [position[_key(a)] for a in native.arguments]
    except KeyError:
        return ["no argument bijection"]
    nativePairs = set((mapping[i], mapping[j]) for i, j in native.attackPairs())
    translatedPairs = set(translated.attackPairs())
    problems = []
    for i, j in sorted(nativePairs ^ translatedPairs):
        side = "ABA only" if (i, j) in nativePairs else "sequent only"
        problems.append("attack {0} -> {1} ({2})".format(translated.arguments[i], translated.arguments[j], side))
    return problems


def _consistent_with_strict( AF: AbaFramework, T: Sequence[Formula] ) -> bool:
    if AF.isCoreLogic:
        return is_consistent(tuple(T) + AF.strict, maxAtoms=AF.maxAtoms)
    return is_aba_consistent(AF, T)


def _consistent_family( AF: AbaFramework ) -> List[Tuple[Formula, ...]]:
    if AF.isCoreLogic:
        return list(mcs_with_assumptions(AF.strict, AF.assumptions, maxAtoms=AF.maxAtoms))
    return aba_maximal_consistent_sets(AF)


def check_mcs_characterization( AF: AbaFramework, translated: Framework ) -> List[str]:
    """
    For every T in A consistent with S: T is a maximal consistent subset iff for
    each phi in A - T some argument with assumptions inside T concludes contrary(phi).
    """
    family = set(frozenset(T) for T in _consistent_family(AF))
    A = AF.assumptions
    problems = []
    for size in range(len(A) + 1):
        for T in combinations(A, size):
            if not _consistent_with_strict(AF, T):
                continue
            inside = translated.universe.restrict(T)
            concluded = set(translated.arguments[i].conclusion for i in inside)
            characterized = all(AF.contrary[phi] in concluded for phi in A if phi not in T)
            if characterized != (frozenset(T) in family):
                problems.append("T = {{{0}}}: maximal {1}, attacked-outside {2}".format(
                    ", ".join(f.text for f in T), frozenset(T) in family, characterized))
    return problems


def check_complete_consistency( AF: AbaFramework, translated: Framework,
                                maxClasses=MAX_CLASSES ) -> List[str]:
    """
    The assumptions used by any complete extension are consistent with S.
    """
    problems = []
    for ext in complete_extensions(translated, maxClasses=maxClasses):
        used = canonical_order(all_assumptions(translated.arguments[i] for i in ext))
        if not _consistent_with_strict(AF, used):
            problems.append("complete extension {0} uses inconsistent assumptions {{{1}}}".format(
                sorted(ext.members), ", ".join(f.text for f in used)))
    return problems


def check_mcs_stable_correspondence( AF: AbaFramework, translated: Framework,
                                     maxClasses=MAX_CLASSES ) -> List[str]:
    """
    T -> (arguments with assumptions inside T) maps the maximal consistent
    subsets onto the stable extensions, and every preferred extension arises
    this way.
    """
    family = _consistent_family(AF)
    images = set(translated.universe.restrict(T) for T in family)
    stable = set(ext.members for ext in stable_extensions(translated, maxClasses=maxClasses))
    preferred = set(ext.members for ext in preferred_extensions(translated, maxClasses=maxClasses))
    problems = []
    for members in sorted(images - stable, key=sorted):
        problems.append("image of a maximal consistent subset is not stable: {0}".format(sorted(members)))
    for members in sorted(stable - images, key=sorted):
        problems.append("stable extension not induced by a maximal consistent subset: {0}".format(sorted(members)))
    for members in sorted(preferred - images, key=sorted):
        problems.append("preferred extension not induced by a maximal consistent subset: {0}".format(sorted(members)))
    return problems
