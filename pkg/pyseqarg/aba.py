"""
Native assumption-based argumentation (ABA): inference rules, deductions,
ABA frameworks and their validation, ABA arguments and attacks, and the
translation of an ABA framework into an assumptive sequent-based framework.

Two deduction styles are supported:

    core-logic  -- premises deduce a goal iff they classically entail it
    rule-system -- deductions are forward-chaining sequences over a finite set of
                   inference rules "b1, ..., bn -> h", with formulas treated as
                   opaque tokens matched structurally
"""

import logging
from collections import OrderedDict
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np   # type: ignore

from .formulas import Formula, Impl, Iff, TruthTable, CapExceededError, MAX_ATOMS
from .formulas import canonical_order, entails_classical, is_consistent, fresh_atom, atoms_of
from .arguments import AssumptiveArgument, build_universe, cut, MAX_PREMISES
from .attacks import Attack, AttackRule, Framework, build_framework, negation_contrary
from .attacks import format_witness
from .semantics import AttackGraph


__all__ = ['InferenceRule', 'AbaFramework', 'AbaArgument', 'AbaArgumentFramework',
           'AbaValidationError', 'CORE_LOGIC', 'RULE_SYSTEM', 'deduces', 'build_aba_arguments',
           'aba_attacks', 'build_aba_framework', 'aba_default_pool', 'check_non_triviality',
           'check_contraposition', 'find_contraposition_violation', 'format_violation',
           'translate_to_sequent', 'derive_by_cut',
           'rule_sequents', 'is_aba_consistent', 'aba_maximal_consistent_sets', 'aba_cn_contains']

log = logging.getLogger(__name__)

CORE_LOGIC = "core-logic"
RULE_SYSTEM = "rule-system"
DEDUCTION_STYLES = (CORE_LOGIC, RULE_SYSTEM)


class AbaValidationError(ValueError):
    pass



class InferenceRule(object):
    """
    An inference rule b1, ..., bn -> h (n >= 0).

    Attributes
    ----------
        body : tuple of Formula
        head : Formula
    """
    __slots__ = ('body', 'head')

    def __init__( self, body: Iterable[Formula], head: Formula ):
        self.body = tuple(body)
        self.head = head

    def getStringDescription( self ) -> str:
        # body formulas containing -> or <-> are parenthesized, so the first
        # top-level "->" always separates body from head
        def bodyText( f ):
            if isinstance(f, (Impl, Iff)):
                return "(" + f.text + ")"
            return f.text
        if len(self.body) == 0:
            return "-> " + self.head.text
        return ", ".join(bodyText(f) for f in self.body) + " -> " + self.head.text

    def __eq__( self, rhs ):
        return isinstance(rhs, InferenceRule) and self.body == rhs.body and self.head == rhs.head

    def __hash__( self ):
        return hash((self.body, self.head))

    def __str__( self ):
        return self.getStringDescription()

    def __repr__( self ):
        return "InferenceRule({0!r})".format(self.getStringDescription())



def _rule_closure( rules: Sequence[InferenceRule], premises: Iterable[Formula] ) -> List[Formula]:
    """
    Forward chaining to a fixed point; returns the derived formulas in the order
    they were obtained (premises first, in canonical order).
    """
    derived = list(canonical_order(premises))
    derivedSet = set(derived)
    changed = True
    while changed:
        changed = False
        for rule in rules:
            if rule.head in derivedSet:
                continue
            if all(b in derivedSet for b in rule.body):
                derived.append(rule.head)
                derivedSet.add(rule.head)
                changed = True
    return derived


def deduces( rules: Optional[Sequence[InferenceRule]], premises: Iterable[Formula],
             goal: Formula, maxAtoms=MAX_ATOMS ) -> Optional[List[Formula]]:
    """
    Look for a deduction of goal from premises.

    Parameters
    ----------
    rules : sequence of InferenceRule, or None
        the rule system; None selects the classical core logic

    premises : iterable of Formula

    goal : Formula

    Returns
    -------
    witness : list of Formula, or None
        a deduction sequence ending in goal (each element a premise or the head of a
        rule whose body occurs earlier); for the core logic, the premises followed
        by the goal. None if goal is not deducible.
    """
    premises = canonical_order(premises)
    if rules is None:
        if not entails_classical(premises, goal, maxAtoms=maxAtoms):
            return None
        return [f for f in premises if f != goal] + [goal]
    derived = _rule_closure(rules, premises)
    if goal not in derived:
        return None
    return derived[:derived.index(goal) + 1]



class AbaFramework(object):
    """
    An ABA framework: a deduction style (core logic or a rule system), a strict
    set S, an assumption set A and a contrariness mapping over A.

    Attributes
    ----------
        deduction : str
            "core-logic" or "rule-system"
        rules : tuple of InferenceRule
            (empty for the core logic)
        strict : tuple of Formula
        assumptions : tuple of Formula
        contrary : dict of {Formula: Formula}
            total over A; assumptions without an explicit entry map to their negation

    Methods
    -------
        validate()
            raise AbaValidationError unless A is nonempty, S and A are disjoint,
            the contraries are over A and S is non-trivial

        derives(premises, goal)
            the deduction relation of the framework

        closure(premises)
            (rule-system only) everything deducible from premises
    """
    def __init__( self, strict: Iterable[Formula], assumptions: Iterable[Formula],
                  contrary: Optional[Dict[Formula, Formula]]=None,
                  rules: Optional[Iterable[InferenceRule]]=None, deduction: Optional[str]=None,
                  maxAtoms=MAX_ATOMS ):
        self.strict = canonical_order(strict)
        self.assumptions = canonical_order(assumptions)
        self.rules = tuple(rules) if rules is not None else ()
        if deduction is None:
            deduction = RULE_SYSTEM if rules is not None else CORE_LOGIC
        if deduction not in DEDUCTION_STYLES:
            msg = "Unknown deduction style \"{0}\" (must be {1} or {2})".format(deduction, CORE_LOGIC, RULE_SYSTEM)
            raise AbaValidationError(msg)
        self.deduction = deduction
        self.maxAtoms = maxAtoms
        self._overrides = dict(contrary) if contrary is not None else {}
        self.contrary = negation_contrary(self.assumptions)
        self.contrary.update(self._overrides)
        self._table = None   #type: Optional[TruthTable]
        self._closures = {}   #type: Dict[FrozenSet[Formula], FrozenSet[Formula]]


    @property
    def isCoreLogic( self ):
        return self.deduction == CORE_LOGIC


    @property
    def contraryOverrides( self ):
        """Explicit contrary entries (those not defaulting to negation)."""
        return dict(self._overrides)


    def contraries( self ) -> Tuple[Formula, ...]:
        return canonical_order(self.contrary[a] for a in self.assumptions)


    def validate( self ):
        """
        Check the framework conditions; raises AbaValidationError on failure.
        """
        if len(self.assumptions) == 0:
            raise AbaValidationError("The assumption set must be nonempty.")
        overlap = set(self.strict) & set(self.assumptions)
        if len(overlap) > 0:
            msg = "Strict and assumption sets overlap: {0}".format(", ".join(f.text for f in canonical_order(overlap)))
            raise AbaValidationError(msg)
        unknown = set(self._overrides.keys()) - set(self.assumptions)
        if len(unknown) > 0:
            msg = "Contrary given for non-assumptions: {0}".format(", ".join(f.text for f in canonical_order(unknown)))
            raise AbaValidationError(msg)
        if not check_non_triviality(self):
            raise AbaValidationError("The strict set is trivializing (inconsistent).")


    def closure( self, premises: Iterable[Formula] ) -> FrozenSet[Formula]:
        key = frozenset(premises)
        try:
            return self._closures[key]
        except KeyError:
            pass
        result = frozenset(_rule_closure(self.rules, key))
        self._closures[key] = result
        return result


    def _tableFor( self, formulas: Iterable[Formula] ) -> TruthTable:
        names = set(atoms_of(formulas))
        if self._table is None or not names <= set(self._table.atoms):
            base = list(self.strict) + list(self.assumptions) + list(self.contrary.values())
            names.update(atoms_of(base))
            if self._table is not None:
                names.update(self._table.atoms)
            self._table = TruthTable(names, maxAtoms=self.maxAtoms)
        return self._table


    def derives( self, premises: Iterable[Formula], goal: Formula ) -> bool:
        premises = tuple(premises)
        if self.isCoreLogic:
            return self._tableFor(premises + (goal,)).entails(premises, goal)
        return goal in self.closure(premises)


    def deductionWitness( self, premises: Iterable[Formula], goal: Formula ) -> Optional[List[Formula]]:
        rules = None if self.isCoreLogic else self.rules
        return deduces(rules, premises, goal, maxAtoms=self.maxAtoms)


    def getStringDescription( self ) -> List[str]:
        """
        Returns a list of newline-terminated lines describing the framework.
        """
        lines = ["deduction: {0}\n".format(self.deduction)]
        lines.append("strict: {0}\n".format("; ".join(f.text for f in self.strict)))
        lines.append("assumptions: {0}\n".format("; ".join(f.text for f in self.assumptions)))
        for a in self.assumptions:
            lines.append("contrary: {0} := {1}\n".format(a.text, self.contrary[a].text))
        for rule in self.rules:
            lines.append("rules: {0}\n".format(rule.getStringDescription()))
        return lines


    def __str__( self ):
        return "".join(self.getStringDescription())



class AbaArgument(object):
    """
    An ABA argument: a deduction of a conclusion from assumptions A' and strict
    formulas G, with A' and G jointly subset-minimal.

    Attributes
    ----------
        assumptions : tuple of Formula
        strict : tuple of Formula
        conclusion : Formula
        witness : list of Formula
            a deduction sequence ending in the conclusion
    """
    __slots__ = ('assumptions', 'strict', 'conclusion', 'witness', '_text')

    def __init__( self, assumptions: Iterable[Formula], strict: Iterable[Formula],
                  conclusion: Formula, witness: Optional[Sequence[Formula]]=None ):
        self.assumptions = canonical_order(assumptions)
        self.strict = canonical_order(strict)
        self.conclusion = conclusion
        self.witness = list(witness) if witness is not None else [conclusion]
        premises = [f.text for f in self.assumptions + self.strict]
        if len(premises) > 0:
            self._text = ", ".join(premises) + " |- " + conclusion.text
        else:
            self._text = "|- " + conclusion.text

    @property
    def text( self ):
        return self._text

    @property
    def support( self ):
        return self.strict

    def premises( self ) -> FrozenSet[Formula]:
        return frozenset(self.assumptions) | frozenset(self.strict)

    def asSequent( self ) -> AssumptiveArgument:
        """The assumptive argument with the same assumptions, support and conclusion."""
        return AssumptiveArgument(self.assumptions, self.strict, self.conclusion)

    def __eq__( self, rhs ):
        if not isinstance(rhs, AbaArgument):
            return False
        return (self.assumptions == rhs.assumptions and self.strict == rhs.strict and
                self.conclusion == rhs.conclusion)

    def __hash__( self ):
        return hash((self.assumptions, self.strict, self.conclusion))

    def __str__( self ):
        return self._text

    def __repr__( self ):
        return "AbaArgument({0!r})".format(self._text)



def aba_default_pool( AF: AbaFramework, queries: Iterable[Formula]=() ) -> Tuple[Formula, ...]:
    """
    Default goal pool: S, A, the contraries of A and the queries.
    """
    return canonical_order(list(AF.strict) + list(AF.assumptions) + list(AF.contraries()) + list(queries))


def build_aba_arguments( AF: AbaFramework, pool: Optional[Iterable[Formula]]=None,
                         maxPremises=MAX_PREMISES ) -> List[AbaArgument]:
    """
    Enumerate the ABA arguments of AF for conclusions in the pool: for every
    A' in A, G in S and goal with a deduction from A' and G, keep the
    argument when A' and G together are subset-minimal for that goal.

    Parameters
    ----------
    AF : AbaFramework

    pool : iterable of Formula, optional
        candidate conclusions; defaults to aba_default_pool(AF)

    maxPremises : int, optional
        cap on |S| + |A|

    Returns
    -------
    arguments : list of :class:`AbaArgument`
        ordered by premise-set size, then premise set, then conclusion
    """
    if pool is None:
        pool = aba_default_pool(AF)
    pool = canonical_order(pool)
    premises = list(AF.strict) + list(AF.assumptions)
    n = len(premises)
    if n > maxPremises:
        msg = "{0:d} premises exceed the cap of {1:d}.".format(n, maxPremises)
        raise CapExceededError(msg)
    strictSet = set(AF.strict)

    found = {goal: [] for goal in pool}   #type: Dict[Formula, List[FrozenSet[Formula]]]
    arguments = []
    for size in range(n + 1):
        for subset in combinations(premises, size):
            premiseSet = frozenset(subset)
            for goal in pool:
                if any(earlier <= premiseSet for earlier in found[goal]):
                    continue
                witness = AF.deductionWitness(premiseSet, goal)
                if witness is None:
                    continue
                found[goal].append(premiseSet)
                arguments.append(AbaArgument([f for f in subset if f not in strictSet],
                                             [f for f in subset if f in strictSet], goal, witness))
    log.debug("built %d ABA arguments over a pool of %d formulas", len(arguments), len(pool))
    return arguments


def aba_attacks( a1: AbaArgument, a2: AbaArgument, contrary: Dict[Formula, Formula] ) -> Optional[Tuple[Formula, ...]]:
    """
    ABA attack: returns (psi,) for the first assumption psi of a2 (canonical
    order) whose contrary is structurally equal to conc(a1), or None.
    """
    for psi in a2.assumptions:
        if psi not in contrary:
            raise AbaValidationError("Assumption {0} has no contrary".format(psi))
        if a1.conclusion == contrary[psi]:
            return (psi,)
    return None



class AbaArgumentFramework(AttackGraph):
    """
    The abstract framework induced by an ABA framework: its ABA arguments and
    the ABA attacks between them.

    Attributes
    ----------
        aba : AbaFramework
        arguments : list of AbaArgument
        pool : tuple of Formula
        attacks : list of Attack (rule at-aba)
        attackMatrix : 2D ndarray of bool
    """
    def __init__( self, aba: AbaFramework, arguments: Sequence[AbaArgument], pool: Iterable[Formula] ):
        self.aba = aba
        self.arguments = list(arguments)
        self.pool = canonical_order(pool)
        self.attacks = []   #type: List[Attack]
        for i, a1 in enumerate(self.arguments):
            for j, a2 in enumerate(self.arguments):
                witness = aba_attacks(a1, a2, aba.contrary)
                if witness is not None:
                    self.attacks.append(Attack(i, j, AttackRule.AT_ABA, witness))
        n = len(self.arguments)
        super().__init__(np.zeros((n, n), dtype=bool))
        for attack in self.attacks:
            self.attackMatrix[attack.attacker, attack.attacked] = True


    def getStringDescription( self ) -> List[str]:
        return ["{0} --[{1}:{2}]--> {3}\n".format(self.arguments[a.attacker].text, a.rule.value,
                                                  format_witness(a.witness),
                                                  self.arguments[a.attacked].text)
                for a in self.attacks]


def build_aba_framework( AF: AbaFramework, pool: Optional[Iterable[Formula]]=None,
                         queries: Iterable[Formula]=(), maxPremises=MAX_PREMISES ) -> AbaArgumentFramework:
    """
    Build the ABA arguments of AF (over the given pool, or the default pool
    extended with the queries) and the attacks between them.
    """
    if pool is None:
        pool = aba_default_pool(AF, queries)
    else:
        pool = canonical_order(list(pool) + list(queries))
    arguments = build_aba_arguments(AF, pool, maxPremises=maxPremises)
    framework = AbaArgumentFramework(AF, arguments, pool)
    log.debug("built ABA framework: %d arguments, %d attacks", len(arguments), len(framework.attacks))
    return framework



# Validation

def check_non_triviality( AF: AbaFramework ) -> bool:
    """
    Check that the strict set does not deduce formulas unrelated to it.

    For the core logic this is consistency of S (classical explosion makes
    triviality and inconsistency the same thing); for a rule system, a fresh
    atom absent from S and from every rule must not be deducible from S.
    """
    if AF.isCoreLogic:
        return is_consistent(AF.strict, maxAtoms=AF.maxAtoms)
    ruleFormulas = []
    for rule in AF.rules:
        ruleFormulas.extend(rule.body)
        ruleFormulas.append(rule.head)
    x = fresh_atom(list(AF.strict) + ruleFormulas)
    return not AF.derives(AF.strict, x)


def find_contraposition_violation( AF: AbaFramework, bound: Optional[int]=None ) -> Optional[dict]:
    """
    Look for an instance where contraposition for assumptions fails: for an
    assumption set T (|T| <= bound), phi in T, psi in A and G in S (|G| <= bound),

        T, G deduce contrary(psi)   iff   (T - {phi}), psi, G deduce contrary(phi)

    Returns
    -------
    violation : dict or None
        keys "assumptions", "strict", "phi", "psi", "forward", "backward" describing
        the first failing instance (forward/backward = truth of the two sides)
    """
    A = AF.assumptions
    S = AF.strict
    if bound is None:
        bound = max(len(A), len(S))
    for size in range(1, min(bound, len(A)) + 1):
        for T in combinations(A, size):
            for gSize in range(0, min(bound, len(S)) + 1):
                for G in combinations(S, gSize):
                    for phi in T:
                        for psi in A:
                            forward = AF.derives(T + G, AF.contrary[psi])
                            rest = tuple(f for f in T if f != phi)
                            backward = AF.derives(rest + (psi,) + G, AF.contrary[phi])
                            if forward != backward:
                                return {"assumptions": T, "strict": G, "phi": phi, "psi": psi,
                                        "forward": forward, "backward": backward}
    return None


def check_contraposition( AF: AbaFramework, bound: Optional[int]=None ) -> bool:
    return find_contraposition_violation(AF, bound) is None


def format_violation( violation: dict ) -> str:
    """One-line description of a contraposition violation."""
    return ("assumptions {{{0}}}, strict {{{1}}}, phi = {2}, psi = {3}: forward {4}, backward {5}"
            .format(", ".join(f.text for f in violation["assumptions"]),
                    ", ".join(f.text for f in violation["strict"]),
                    violation["phi"].text, violation["psi"].text,
                    violation["forward"], violation["backward"]))



# Consistency in the ABA sense

def is_aba_consistent( AF: AbaFramework, T: Iterable[Formula] ) -> bool:
    """
    True iff no contrary of a member of T is deducible from T together with S.
    (Deduction is monotone in both styles, so checking the full premise set
    covers every subset of it.)
    """
    T = canonical_order(T)
    premises = T + AF.strict
    return not any(AF.derives(premises, AF.contrary[phi]) for phi in T)


def aba_maximal_consistent_sets( AF: AbaFramework ) -> List[Tuple[Formula, ...]]:
    """
    The subset-maximal assumption sets that are consistent in the ABA sense,
    in canonical order.
    """
    A = AF.assumptions
    maximal = []   #type: List[FrozenSet[Formula]]
    for size in range(len(A), -1, -1):
        for T in combinations(A, size):
            candidate = frozenset(T)
            if any(candidate < m for m in maximal):
                continue
            if is_aba_consistent(AF, T):
                maximal.append(candidate)
    members = [canonical_order(m) for m in maximal]
    members.sort(key=lambda m: [f.text for f in m])
    return members


def aba_cn_contains( AF: AbaFramework, T: Iterable[Formula], phi: Formula ) -> bool:
    """True iff phi is deducible from T together with S."""
    return AF.derives(tuple(T) + AF.strict, phi)



# Translation into the sequent-based setting

def rule_sequents( AF: AbaFramework ) -> List[AssumptiveArgument]:
    """
    The sequents b1, ..., bn => h corresponding to the inference rules of AF.
    """
    return [AssumptiveArgument.flat(rule.body, rule.head) for rule in AF.rules]


def translate_to_sequent( AF: AbaFramework, pool: Optional[Iterable[Formula]]=None,
                          queries: Iterable[Formula]=(), minimal=True,
                          maxPremises=MAX_PREMISES ) -> Framework:
    """
    Translate an ABA framework into the corresponding assumptive sequent-based
    framework: arguments A' |~ G => C with A' in A and G in S, attacks by the
    at-aba rule under the same contrariness mapping.

    For the core logic the sequents are derived classically; for a rule system,
    the rule sequents closed under Cut decide derivability.

    Parameters
    ----------
    AF : AbaFramework
        validated before translation

    pool : iterable of Formula, optional
        conclusion pool; defaults to aba_default_pool(AF, queries)

    queries : iterable of Formula, optional

    minimal : bool, optional
        keep only subset-minimal premise sets (default True)

    Returns
    -------
    framework : :class:`~pyseqarg.attacks.Framework`
    """
    AF.validate()
    if pool is None:
        pool = aba_default_pool(AF, queries)
    else:
        pool = canonical_order(list(pool) + list(queries))
    if AF.isCoreLogic:
        universe = build_universe(AF.strict, AF.assumptions, pool, minimal=minimal,
                                  maxPremises=maxPremises, maxAtoms=AF.maxAtoms)
    else:
        sequents = rule_sequents(AF)
        def derivesBySequents( premises, goal ):
            return goal in derive_by_cut(sequents, premises)
        universe = build_universe(AF.strict, AF.assumptions, pool, minimal=minimal,
                                  derives=derivesBySequents, maxPremises=maxPremises)
    return build_framework(universe, [AttackRule.AT_ABA], AF.contrary)


def derive_by_cut( sequents: Sequence[AssumptiveArgument],
                   premises: Iterable[Formula] ) -> Dict[Formula, AssumptiveArgument]:
    """
    Saturate the identity sequents g => g (g in premises) under Cut against the
    rule sequents.

    Parameters
    ----------
    sequents : sequence of AssumptiveArgument
        flat rule sequents b1, ..., bn => h

    premises : iterable of Formula

    Returns
    -------
    derived : dict of {Formula: AssumptiveArgument}
        for each reachable conclusion, one derived sequent G => c with G a subset
        of the premises
    """
    derived = OrderedDict((g, AssumptiveArgument.flat([g], g)) for g in canonical_order(premises))
    changed = True
    while changed:
        changed = False
        for seq in sequents:
            if seq.conclusion in derived or not all(b in derived for b in seq.support):
                continue
            result = seq
            for b in canonical_order(seq.support):
                result = cut(derived[b], result, b)
            derived[seq.conclusion] = result
            changed = True
    return derived
