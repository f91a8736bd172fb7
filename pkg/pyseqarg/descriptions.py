"""
Classes describing a reasoning problem: premises, assumptions, contraries,
inference rules, attack rules, queries, and the options (semantics, entailment
modes, caps) that go with them.

A ProblemDescription is usually obtained from a problem file via
ProblemDescription.load (see config.py), or from a dict via
ProblemDescription.dict_to_ProblemDescription.
"""

from copy import copy
from collections import OrderedDict

from typing import Dict, List, Optional, Sequence, Union

from .formulas import Formula, as_formula, canonical_order
from .attacks import AttackRule, negation_contrary
from .aba import AbaFramework, InferenceRule, CORE_LOGIC, RULE_SYSTEM, DEDUCTION_STYLES
from .semantics import SEMANTICS
from .entailment import EntailmentMode


__all__ = ['ProblemDescription', 'ProblemValidationError', 'PROBLEM_MODES']


PROBLEM_MODES = ("flat", "assumptive", "aba")

# problem-file names of the cap options, with the corresponding keyword names
CAP_OPTIONS = OrderedDict([("max-atoms", "maxAtoms"), ("max-premises", "maxPremises"),
                           ("max-classes", "maxClasses")])


class ProblemValidationError(ValueError):
    pass


def _formula_line( key: str, formulas: Sequence[Formula] ) -> str:
    if len(formulas) == 0:
        return key + ":\n"
    return "{0}: {1}\n".format(key, "; ".join(f.text for f in formulas))



class ProblemDescription(object):
    """
    Holds information describing a reasoning problem.

    Attributes
    ----------
        mode : str
            "flat", "assumptive" or "aba"
        strict : list of Formula
            the strict premises S
        assumptions : list of Formula
            the assumptions A (empty in flat mode)
        contrary : dict of {Formula: Formula}
            explicit contrary entries; assumptions not listed map to their negation
        rules : list of InferenceRule
            inference rules (aba mode, rule-system deduction only)
        attackRules : list of str
            explicitly selected attack rules ("ucut", "ducut", "at-aba")
        queries : list of Formula
        semantics : list of str
            selected semantics ("grd", "cmp", "prf", "stb")
        entailment : list of str
            selected entailment modes ("cap", "cup", "wcap")
        deduction : str or None
            "core-logic" or "rule-system" (aba mode)
        minimal : bool or None
            explicit minimal-support setting
        options : OrderedDict of {str: int}
            caps, keyed by problem-file name ("max-atoms", "max-premises", "max-classes")

    Class methods
    -------------
        load(fname)
            Returns a new instance of this class based on a problem file (`fname`).

        dict_to_ProblemDescription(inputDict)
            Returns a new instance of this class based on a dict

    Methods
    -------
        validate()
            Check the combination of settings; raises ProblemValidationError

        contraryMap()
            The full contrariness mapping over the assumptions

        getAbaFramework()
            The ABA framework described by an aba-mode (or assumptive) problem

        getStringDescription()
            Returns the problem as a list of lines in problem-file format
    """

    def __init__( self, mode="flat", strict: Optional[Sequence[Union[str, Formula]]]=None,
                  assumptions: Optional[Sequence[Union[str, Formula]]]=None,
                  contrary: Optional[Dict]=None, rules: Optional[Sequence[InferenceRule]]=None,
                  attackRules: Optional[Sequence[str]]=None,
                  queries: Optional[Sequence[Union[str, Formula]]]=None,
                  semantics: Optional[Sequence[str]]=None, entailment: Optional[Sequence[str]]=None,
                  deduction: Optional[str]=None, minimal: Optional[bool]=None,
                  options: Optional[Dict[str, int]]=None ):
        if mode not in PROBLEM_MODES:
            raise ValueError("Unknown problem mode \"{0}\" (must be one of {1})".format(mode, ", ".join(PROBLEM_MODES)))
        self.mode = mode
        self.strict = [as_formula(f) for f in (strict or [])]
        self.assumptions = [as_formula(f) for f in (assumptions or [])]
        self.contrary = OrderedDict()   #type: Dict[Formula, Formula]
        if contrary is not None:
            for a, f in contrary.items():
                self.contrary[as_formula(a)] = as_formula(f)
        self.rules = list(rules or [])
        self.attackRules = []   #type: List[str]
        for r in (attackRules or []):
            self.addAttackRule(r)
        self.queries = []   #type: List[Formula]
        for q in (queries or []):
            self.addQuery(q)
        self.semantics = []   #type: List[str]
        for s in (semantics or []):
            self.addSemantics(s)
        self.entailment = []   #type: List[str]
        for m in (entailment or []):
            self.addEntailmentMode(m)
        if deduction is not None and deduction not in DEDUCTION_STYLES:
            raise ValueError("Unknown deduction style \"{0}\"".format(deduction))
        self.deduction = deduction
        self.minimal = minimal
        self.options = OrderedDict()   #type: Dict[str, int]
        if options is not None:
            self.updateOptions(options)


    @classmethod
    def load( cls, fileName: str ):
        """
        A convenience method to generate a ProblemDescription object from a
        problem file.

        Parameters
        ----------
        fileName : string
            Path to the problem file.

        Returns
        -------
        problem : :class:`ProblemDescription`

        See also
        --------
        parse_problem_file
        """
        # imported here, since config.py depends on this module
        from .config import parse_problem_file

        return parse_problem_file(fileName)


    @classmethod
    def dict_to_ProblemDescription( cls, inputDict: dict ):
        """
        A convenience method to generate a ProblemDescription object from a dict.

        Parameters
        ----------
        inputDict : dict
            dict describing the problem; formulas are given as strings. Keys:
                "mode" : str (default "flat")
                "strict", "assumptions", "queries" : list of str
                "contrary" : dict of {str: str}
                "rules" : list of [list of str, str] (body, head)
                "attack", "semantics", "entailment" : list of str
                "deduction" : str
                "minimal" : bool
                "options" : dict of {str: int}

        Returns
        -------
        problem : :class:`ProblemDescription`
        """
        rules = [InferenceRule([as_formula(b) for b in body], as_formula(head))
                 for body, head in inputDict.get("rules", [])]
        return ProblemDescription(mode=inputDict.get("mode", "flat"),
                                  strict=inputDict.get("strict"),
                                  assumptions=inputDict.get("assumptions"),
                                  contrary=inputDict.get("contrary"), rules=rules,
                                  attackRules=inputDict.get("attack"),
                                  queries=inputDict.get("queries"),
                                  semantics=inputDict.get("semantics"),
                                  entailment=inputDict.get("entailment"),
                                  deduction=inputDict.get("deduction"),
                                  minimal=inputDict.get("minimal"),
                                  options=inputDict.get("options"))


    def addAttackRule( self, name: str ):
        rule = AttackRule.fromName(name).value
        if rule not in self.attackRules:
            self.attackRules.append(rule)


    def addQuery( self, phi: Union[str, Formula] ):
        phi = as_formula(phi)
        if phi not in self.queries:
            self.queries.append(phi)


    def addSemantics( self, name: str ):
        if name not in SEMANTICS:
            raise ValueError("Unknown semantics \"{0}\" (must be one of {1})".format(name, ", ".join(SEMANTICS)))
        if name not in self.semantics:
            self.semantics.append(name)


    def addEntailmentMode( self, name: str ):
        mode = EntailmentMode.fromName(name).value
        if mode not in self.entailment:
            self.entailment.append(mode)


    def updateOptions( self, optionsDict: Dict[str, int] ):
        """
        Updates the cap options with the input dict (keys "max-atoms",
        "max-premises", "max-classes"; values must be positive integers).
        """
        for key, value in optionsDict.items():
            if key not in CAP_OPTIONS:
                raise ValueError("Unknown option \"{0}\"".format(key))
            value = int(value)
            if value <= 0:
                raise ValueError("Option {0} must be a positive integer".format(key))
            self.options[key] = value


    def getCap( self, name: str, default: int ) -> int:
        return self.options.get(name, default)


    @property
    def effectiveAttackRules( self ) -> List[AttackRule]:
        """
        Active attack rules: the selected ones, or ucut for flat problems and
        at-aba otherwise.
        """
        if len(self.attackRules) > 0:
            return [AttackRule.fromName(r) for r in self.attackRules]
        if self.mode == "flat":
            return [AttackRule.UCUT]
        return [AttackRule.AT_ABA]


    @property
    def effectiveDeduction( self ) -> str:
        if self.deduction is not None:
            return self.deduction
        return RULE_SYSTEM if len(self.rules) > 0 else CORE_LOGIC


    @property
    def effectiveMinimal( self ) -> bool:
        """Minimal supports are on by default for assumptive and aba problems."""
        if self.minimal is not None:
            return self.minimal
        return self.mode != "flat"


    def contraryMap( self ) -> Dict[Formula, Formula]:
        contrary = negation_contrary(self.assumptions)
        contrary.update(self.contrary)
        return contrary


    def validate( self ):
        """
        Check that the settings fit together; raises ProblemValidationError.
        """
        if self.mode == "flat" and len(self.assumptions) > 0:
            raise ProblemValidationError("Flat problems cannot have assumptions.")
        if self.mode != "flat":
            overlap = set(self.strict) & set(self.assumptions)
            if len(overlap) > 0:
                msg = "Strict and assumption sets overlap: {0}".format(", ".join(f.text for f in canonical_order(overlap)))
                raise ProblemValidationError(msg)
        unknown = [a for a in self.contrary if a not in self.assumptions]
        if len(unknown) > 0:
            msg = "Contrary given for non-assumptions: {0}".format(", ".join(f.text for f in unknown))
            raise ProblemValidationError(msg)
        if self.mode != "aba":
            if len(self.rules) > 0:
                raise ProblemValidationError("Inference rules are only allowed in aba problems.")
            if self.deduction is not None:
                raise ProblemValidationError("A deduction style is only allowed in aba problems.")
        elif self.effectiveDeduction == CORE_LOGIC and len(self.rules) > 0:
            raise ProblemValidationError("Inference rules require rule-system deduction.")
        if self.mode == "aba" and self.effectiveAttackRules != [AttackRule.AT_ABA]:
            raise ProblemValidationError("aba problems use the at-aba attack rule only.")


    def getAbaFramework( self, maxAtoms: Optional[int]=None ) -> AbaFramework:
        """
        Returns the ABA framework described by this problem (aba or assumptive
        mode; assumptive problems are read as core-logic ABA frameworks).
        """
        if self.mode == "flat":
            raise ProblemValidationError("Flat problems do not describe an ABA framework.")
        kwargs = {}
        if maxAtoms is not None:
            kwargs["maxAtoms"] = maxAtoms
        if self.mode == "aba" and self.effectiveDeduction == RULE_SYSTEM:
            return AbaFramework(self.strict, self.assumptions, self.contrary, rules=self.rules,
                                deduction=RULE_SYSTEM, **kwargs)
        return AbaFramework(self.strict, self.assumptions, self.contrary, deduction=CORE_LOGIC, **kwargs)


    def getStringDescription( self ) -> List[str]:
        """
        Get list of strings in problem-file format.

        Returns
        -------
        outputLines : list of string
            list of newline-terminated strings describing the problem
        """
        outputLines = ["mode: {0}\n".format(self.mode)]
        if self.deduction is not None:
            outputLines.append("deduction: {0}\n".format(self.deduction))
        outputLines.append(_formula_line("strict", self.strict))
        if self.mode != "flat" or len(self.assumptions) > 0:
            outputLines.append(_formula_line("assumptions", self.assumptions))
        for a, f in self.contrary.items():
            outputLines.append("contrary: {0} := {1}\n".format(a.text, f.text))
        for rule in self.rules:
            outputLines.append("rules: {0}\n".format(rule.getStringDescription()))
        for r in self.attackRules:
            outputLines.append("attack: {0}\n".format(r))
        for q in self.queries:
            outputLines.append("query: {0}\n".format(q.text))
        for s in self.semantics:
            outputLines.append("semantics: {0}\n".format(s))
        for m in self.entailment:
            outputLines.append("entailment: {0}\n".format(m))
        if self.minimal is not None:
            outputLines.append("minimal: {0}\n".format("yes" if self.minimal else "no"))
        for key, value in self.options.items():
            outputLines.append("{0}: {1:d}\n".format(key, value))
        return outputLines


    def getProblemAsDict( self ) -> dict:
        """
        Returns the problem in dict form (suitable for use in dict_to_ProblemDescription)
        """
        problemDict = OrderedDict()   #type: dict
        problemDict["mode"] = self.mode
        problemDict["strict"] = [f.text for f in self.strict]
        problemDict["assumptions"] = [f.text for f in self.assumptions]
        if len(self.contrary) > 0:
            problemDict["contrary"] = OrderedDict((a.text, f.text) for a, f in self.contrary.items())
        if len(self.rules) > 0:
            problemDict["rules"] = [[[b.text for b in rule.body], rule.head.text] for rule in self.rules]
        if len(self.attackRules) > 0:
            problemDict["attack"] = list(self.attackRules)
        problemDict["queries"] = [q.text for q in self.queries]
        if len(self.semantics) > 0:
            problemDict["semantics"] = list(self.semantics)
        if len(self.entailment) > 0:
            problemDict["entailment"] = list(self.entailment)
        if self.deduction is not None:
            problemDict["deduction"] = self.deduction
        if self.minimal is not None:
            problemDict["minimal"] = self.minimal
        if len(self.options) > 0:
            problemDict["options"] = OrderedDict(self.options)
        return problemDict


    def __eq__( self, rhs ):
        if not isinstance(rhs, ProblemDescription):
            return False
        return (self.mode == rhs.mode and self.strict == rhs.strict and
                self.assumptions == rhs.assumptions and dict(self.contrary) == dict(rhs.contrary) and
                self.rules == rhs.rules and self.attackRules == rhs.attackRules and
                self.queries == rhs.queries and self.semantics == rhs.semantics and
                self.entailment == rhs.entailment and self.deduction == rhs.deduction and
                self.minimal == rhs.minimal and dict(self.options) == dict(rhs.options))


    def __str__( self ):
        return "".join(self.getStringDescription())


    def __deepcopy__( self, memo ):
        # formulas and rules are immutable, so shallow copies of the containers suffice
        problem = type(self)(mode=self.mode)
        problem.strict = list(self.strict)
        problem.assumptions = list(self.assumptions)
        problem.contrary = copy(self.contrary)
        problem.rules = list(self.rules)
        problem.attackRules = list(self.attackRules)
        problem.queries = list(self.queries)
        problem.semantics = list(self.semantics)
        problem.entailment = list(self.entailment)
        problem.deduction = self.deduction
        problem.minimal = self.minimal
        problem.options = copy(self.options)
        return problem
