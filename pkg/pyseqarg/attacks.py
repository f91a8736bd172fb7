"""
Attack rules (sequent elimination rules) and construction of argumentation
frameworks over an argument universe.

Three rules are implemented:

    ucut   -- Undercut: G1 => c attacks G2, G2' => d when c <-> ~(/\\G2) is valid
              (G2 nonempty)
    ducut  -- Direct Undercut: as ucut, with G2 a single formula g and c <-> ~g valid
    at-aba -- the assumption attack: a1 attacks a2 when conc(a1) is the contrary
              of some assumption of a2 (structural match)

Undercuts fire only between arguments with empty assumption components.
"""

import logging
from enum import Enum
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple, Union

import numpy as np   # type: ignore

from .formulas import Formula, Neg, TruthTable, MAX_ATOMS
from .arguments import AssumptiveArgument, ArgumentUniverse
from .semantics import AttackGraph


__all__ = ['AttackRule', 'Attack', 'Framework', 'AttackRuleError', 'ucut_attacks',
           'ducut_attacks', 'at_aba_attacks', 'build_framework', 'negation_contrary',
           'format_witness']

log = logging.getLogger(__name__)

Witness = Tuple[Formula, ...]
ContraryMap = Dict[Formula, Formula]


class AttackRuleError(ValueError):
    pass



class AttackRule(Enum):
    UCUT = "ucut"
    DUCUT = "ducut"
    AT_ABA = "at-aba"

    @classmethod
    def fromName( cls, name: Union[str, "AttackRule"] ) -> "AttackRule":
        if isinstance(name, AttackRule):
            return name
        try:
            return cls(name.strip().lower())
        except ValueError:
            names = ", ".join(r.value for r in cls)
            raise AttackRuleError("Unknown attack rule \"{0}\" (must be one of {1})".format(name, names))

    @property
    def order( self ) -> int:
        return list(AttackRule).index(self)



def negation_contrary( assumptions: Iterable[Formula] ) -> ContraryMap:
    """
    The default contrariness mapping, sending each assumption a to ~a.
    """
    return {a: Neg(a) for a in assumptions}


def format_witness( witness: Witness ) -> str:
    return "{" + ", ".join(f.text for f in witness) + "}"



class Attack(object):
    """
    One attack (attacker, attacked) licensed by a rule, with the premises of
    the attacked argument it targets.

    Attributes
    ----------
        attacker : int
        attacked : int
        rule : AttackRule
        witness : tuple of Formula
            for undercuts, the attacked support subset; for at-aba, the attacked assumption
    """
    __slots__ = ('attacker', 'attacked', 'rule', 'witness')

    def __init__( self, attacker: int, attacked: int, rule: AttackRule, witness: Witness ):
        self.attacker = attacker
        self.attacked = attacked
        self.rule = rule
        self.witness = tuple(witness)

    def sortKey( self ):
        return (self.attacker, self.attacked, self.rule.order)

    def getStringDescription( self, universe: ArgumentUniverse ) -> str:
        return "{0} --[{1}:{2}]--> {3}".format(universe[self.attacker].text, self.rule.value,
                                               format_witness(self.witness),
                                               universe[self.attacked].text)

    def __eq__( self, rhs ):
        if not isinstance(rhs, Attack):
            return False
        return (self.attacker == rhs.attacker and self.attacked == rhs.attacked and
                self.rule == rhs.rule and self.witness == rhs.witness)

    def __hash__( self ):
        return hash((self.attacker, self.attacked, self.rule, self.witness))

    def __repr__( self ):
        return "Attack({0}, {1}, {2}, {3})".format(self.attacker, self.attacked, self.rule.value,
                                                   format_witness(self.witness))



# Pairwise rule checks

def _undercut_candidates( support: Tuple[Formula, ...], direct: bool ) -> List[Witness]:
    """Nonempty subsets of the support, by size and then in canonical order."""
    if direct:
        return [(g,) for g in support]
    candidates = []
    for size in range(1, len(support) + 1):
        candidates.extend(combinations(support, size))
    return candidates


def _undercut( a1: AssumptiveArgument, a2: AssumptiveArgument, direct: bool,
               table: Optional[TruthTable], maxAtoms: int ) -> Optional[Witness]:
    if not (a1.isFlat and a2.isFlat) or len(a2.support) == 0:
        return None
    if table is None:
        table = TruthTable.forFormulas(a2.support + (a1.conclusion,), maxAtoms=maxAtoms)
    concColumn = table.column(a1.conclusion)
    for witness in _undercut_candidates(a2.support, direct):
        if np.array_equal(concColumn, ~table.conjunction(witness)):
            return witness
    return None


def ucut_attacks( a1: AssumptiveArgument, a2: AssumptiveArgument, table: Optional[TruthTable]=None,
                  maxAtoms=MAX_ATOMS ) -> Optional[Witness]:
    """
    Undercut check: returns the first nonempty subset G2 of supp(a2) such that
    conc(a1) <-> ~(/\\G2) is valid, or None.

    Parameters
    ----------
    a1, a2 : AssumptiveArgument
        attacker and attacked; both must have empty assumptions for the rule to fire

    table : TruthTable, optional
        shared evaluation context covering the atoms of both arguments

    Returns
    -------
    witness : tuple of Formula, or None
    """
    return _undercut(a1, a2, False, table, maxAtoms)


def ducut_attacks( a1: AssumptiveArgument, a2: AssumptiveArgument, table: Optional[TruthTable]=None,
                   maxAtoms=MAX_ATOMS ) -> Optional[Witness]:
    """
    Direct undercut check: returns (g,) for the first g in supp(a2) with
    conc(a1) <-> ~g valid, or None.
    """
    return _undercut(a1, a2, True, table, maxAtoms)


def at_aba_attacks( a1: AssumptiveArgument, a2: AssumptiveArgument,
                    contrary: ContraryMap ) -> Optional[Witness]:
    """
    Assumption attack: returns (phi,) for the first assumption phi of a2 whose
    contrary is structurally equal to conc(a1), or None.

    Raises
    ------
    AttackRuleError
        if some assumption of a2 has no contrary
    """
    for phi in a2.assumptions:
        try:
            target = contrary[phi]
        except KeyError:
            raise AttackRuleError("Assumption {0} has no contrary".format(phi))
        if a1.conclusion == target:
            return (phi,)
    return None



class Framework(AttackGraph):
    """
    An (assumptive) sequent-based argumentation framework: an argument universe
    plus the attacks licensed by a set of attack rules.

    Attributes
    ----------
        universe : ArgumentUniverse
        attacks : list of Attack
            one entry per (attacker, attacked, rule), in canonical order
        rules : tuple of AttackRule
        contrary : dict of {Formula: Formula} or None
        attackMatrix : 2D ndarray of bool

    Methods
    -------
        recompute()
            rebuild the attack list from scratch with the pairwise rule checks

        getStringDescription()
            one line per attack
    """
    def __init__( self, universe: ArgumentUniverse, attacks: Iterable[Attack],
                  rules: Iterable[AttackRule], contrary: Optional[ContraryMap]=None ):
        self.universe = universe
        self.attacks = sorted(attacks, key=lambda a: a.sortKey())
        self.rules = tuple(sorted(set(rules), key=lambda r: r.order))
        self.contrary = contrary
        n = len(universe)
        M = np.zeros((n, n), dtype=bool)
        for attack in self.attacks:
            M[attack.attacker, attack.attacked] = True
        super().__init__(M)


    @property
    def arguments( self ):
        return self.universe.arguments


    def recompute( self, maxAtoms=MAX_ATOMS ) -> "Framework":
        """
        Returns a new Framework over the same universe, with attacks computed by
        checking every ordered pair of arguments with the pairwise rule functions.
        """
        universe = self.universe
        table = None
        if AttackRule.UCUT in self.rules or AttackRule.DUCUT in self.rules:
            table = TruthTable.forFormulas(_universe_formulas(universe), maxAtoms=maxAtoms)
        attacks = []
        for i, a1 in enumerate(universe):
            for j, a2 in enumerate(universe):
                for rule in self.rules:
                    if rule is AttackRule.UCUT:
                        witness = ucut_attacks(a1, a2, table)
                    elif rule is AttackRule.DUCUT:
                        witness = ducut_attacks(a1, a2, table)
                    else:
                        witness = at_aba_attacks(a1, a2, self.contrary)
                    if witness is not None:
                        attacks.append(Attack(i, j, rule, witness))
        return Framework(universe, attacks, self.rules, self.contrary)


    def getStringDescription( self ) -> List[str]:
        return [attack.getStringDescription(self.universe) + "\n" for attack in self.attacks]


    def __str__( self ):
        return "".join(self.getStringDescription())



def _universe_formulas( universe: ArgumentUniverse ) -> List[Formula]:
    formulas = list(universe.strict) + list(universe.assumptions) + list(universe.pool)
    formulas.extend(a.conclusion for a in universe)
    return formulas


def _undercut_attacks( universe: ArgumentUniverse, rule: AttackRule, table: TruthTable ) -> List[Attack]:
    # for each flat target, map the truth-table column of every candidate ~(/\G2)
    # to its first witness; an attacker fires iff its conclusion's column is a key
    direct = (rule is AttackRule.DUCUT)
    targets = []
    for a in universe:
        found = {}   #type: Dict[bytes, Witness]
        if a.isFlat:
            for witness in _undercut_candidates(a.support, direct):
                found.setdefault((~table.conjunction(witness)).tobytes(), witness)
        targets.append(found)
    attacks = []
    for i, a1 in enumerate(universe):
        if not a1.isFlat:
            continue
        key = table.column(a1.conclusion).tobytes()
        for j, found in enumerate(targets):
            if key in found:
                attacks.append(Attack(i, j, rule, found[key]))
    return attacks


def build_framework( universe: ArgumentUniverse, rules: Iterable[Union[str, AttackRule]],
                     contrary: Optional[ContraryMap]=None, maxAtoms=MAX_ATOMS ) -> Framework:
    """
    Compute every attack licensed by the active rules over the universe.

    Parameters
    ----------
    universe : ArgumentUniverse

    rules : iterable of AttackRule or str
        active rules ("ucut", "ducut", "at-aba")

    contrary : dict of {Formula: Formula}, optional
        contrariness mapping; required if "at-aba" is active

    maxAtoms : int, optional

    Returns
    -------
    framework : :class:`Framework`
    """
    rules = [AttackRule.fromName(r) for r in rules]
    if AttackRule.AT_ABA in rules and contrary is None:
        raise AttackRuleError("The at-aba rule requires a contrariness mapping.")
    table = None
    if AttackRule.UCUT in rules or AttackRule.DUCUT in rules:
        table = TruthTable.forFormulas(_universe_formulas(universe), maxAtoms=maxAtoms)

    attacks = []   #type: List[Attack]
    for rule in set(rules):
        if rule is AttackRule.AT_ABA:
            # index arguments by conclusion, so each assumption needs one lookup
            byConclusion = {}   #type: Dict[Formula, List[int]]
            for i, a in enumerate(universe):
                byConclusion.setdefault(a.conclusion, []).append(i)
            for j, a2 in enumerate(universe):
                attackers = {}   #type: Dict[int, Formula]
                for phi in a2.assumptions:
                    try:
                        target = contrary[phi]
                    except KeyError:
                        raise AttackRuleError("Assumption {0} has no contrary".format(phi))
                    for i in byConclusion.get(target, []):
                        attackers.setdefault(i, phi)
                for i, phi in attackers.items():
                    attacks.append(Attack(i, j, rule, (phi,)))
        else:
            attacks.extend(_undercut_attacks(universe, rule, table))

    framework = Framework(universe, attacks, rules, contrary)
    log.debug("built framework: %d arguments, %d attacks (%s)", len(universe), len(framework.attacks),
              ", ".join(r.value for r in framework.rules))
    return framework
