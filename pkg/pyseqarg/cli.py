"""
Command-line front end: pyseqarg <command> [options] problem-file

Commands
--------
    args        list the argument universe
    attacks     list the attack relation, with rule and witness
    extensions  list the extensions under one or more semantics
    entails     answer entailment queries
    mcs         list the maximally consistent subsets, minimal conflicts and Free
    check       compare ABA, sequent-based and MCS-based entailment on the problem

Exit codes: 0 success, 1 usage or parse error, 2 validation error, 3 check failure.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from . import __version__
from .formulas import FormulaSyntaxError, CapExceededError, parse
from .arguments import InconsistentStrictError
from .attacks import AttackRuleError
from .semantics import SEMANTICS
from .entailment import EntailmentMode
from .aba import AbaValidationError
from .config import ProblemFileError, parse_problem_file
from .descriptions import ProblemValidationError
from .reasoner import Reasoner
from .equivalence import check_problem


__all__ = ['main', 'build_parser']

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_CHECK_FAILED = 3

modeNames = [m.value for m in EntailmentMode]



class _ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors with exit code 1."""
    def error( self, message ):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "{0}: error: {1}\n".format(self.prog, message))



def _positive_int( text: str ) -> int:
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value <= 0:
        raise argparse.ArgumentTypeError("expected a positive integer, but got \"{0}\"".format(text))
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("problem", help="problem file")
    common.add_argument("--json", action="store_true", default=False,
                        help="machine-readable output")
    common.add_argument("--max-atoms", dest="maxAtoms", type=_positive_int, default=None,
                        help="cap on distinct atoms per truth table (default: 16)")
    common.add_argument("--max-premises", dest="maxPremises", type=_positive_int, default=None,
                        help="cap on |S| + |A| (default: 12)")
    common.add_argument("--max-classes", dest="maxClasses", type=_positive_int, default=None,
                        help="cap on undecided argument classes (default: 20)")
    common.add_argument("-v", "--verbose", action="store_true", default=False,
                        help="debug logging on stderr")

    parser = _ArgumentParser(prog="pyseqarg",
                             description="Assumptive sequent-based argumentation and ABA reasoning")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    subparsers = parser.add_subparsers(dest="command", metavar="command", parser_class=_ArgumentParser)
    subparsers.required = True

    subparsers.add_parser("args", parents=[common], help="list the argument universe")
    subparsers.add_parser("attacks", parents=[common], help="list the attack relation")
    p = subparsers.add_parser("extensions", parents=[common], help="list extensions")
    p.add_argument("--semantics", action="append", choices=SEMANTICS, default=None,
                   help="semantics (repeatable; default: the problem's, or all)")
    p = subparsers.add_parser("entails", parents=[common], help="answer entailment queries")
    p.add_argument("--semantics", action="append", choices=SEMANTICS, default=None,
                   help="semantics (repeatable; default: the problem's, or prf)")
    p.add_argument("--mode", action="append", choices=modeNames, default=None,
                   help="entailment mode (repeatable; default: the problem's, or cap)")
    p.add_argument("--query", action="append", default=None,
                   help="query formula (repeatable; default: the problem's queries)")
    subparsers.add_parser("mcs", parents=[common], help="list maximally consistent subsets")
    p = subparsers.add_parser("check", parents=[common], help="run the equivalence checks")
    p.add_argument("--semantics", action="append", choices=SEMANTICS, default=None)
    p.add_argument("--mode", action="append", choices=modeNames, default=None)
    return parser



def _formula_texts( formulas ) -> List[str]:
    return [f.text for f in formulas]


def _emit( lines: List[str], payload: dict, asJson: bool ):
    if asJson:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write("".join(lines))


def _pick( given, fromProblem, default ) -> list:
    if given:
        return given
    if len(fromProblem) > 0:
        return list(fromProblem)
    return list(default)



def cmd_args( reasoner: Reasoner, options ) -> int:
    universe = reasoner.getUniverse()
    payload = {"arguments": [{"index": i, "text": a.text, "assumptions": _formula_texts(a.assumptions),
                              "support": _formula_texts(a.support), "conclusion": a.conclusion.text}
                             for i, a in enumerate(universe)]}
    _emit(universe.getStringDescription(), payload, options.json)
    return EXIT_OK


def cmd_attacks( reasoner: Reasoner, options ) -> int:
    framework = reasoner.getFramework()
    payload = {"attacks": [{"attacker": a.attacker, "attacked": a.attacked, "rule": a.rule.value,
                            "witness": _formula_texts(a.witness),
                            "text": a.getStringDescription(framework.universe)}
                           for a in framework.attacks]}
    _emit(framework.getStringDescription(), payload, options.json)
    return EXIT_OK


def cmd_extensions( reasoner: Reasoner, options ) -> int:
    problem = reasoner.getProblemDescription()
    universe = reasoner.getUniverse()
    lines = []
    payload = {"extensions": {}}
    for sem in _pick(options.semantics, problem.semantics, SEMANTICS):
        exts = reasoner.getExtensions(sem)
        payload["extensions"][sem] = [sorted(ext.members) for ext in exts]
        if len(exts) == 0:
            lines.append("{0}: no extensions\n".format(sem))
        for ext in exts:
            members = "; ".join(universe[i].text for i in ext)
            lines.append("{0}: {{{1}}}\n".format(sem, members))
    _emit(lines, payload, options.json)
    return EXIT_OK


def cmd_entails( reasoner: Reasoner, options ) -> int:
    problem = reasoner.getProblemDescription()
    if options.query:
        queries = [parse(q) for q in options.query]
    else:
        queries = problem.queries
    if len(queries) == 0:
        log.error("no query given (use --query or a query: line)")
        return EXIT_USAGE
    semantics = _pick(options.semantics, problem.semantics, ["prf"])
    modes = _pick(options.mode, problem.entailment, ["cap"])
    lines = []
    payload = {"results": []}
    for phi in queries:
        for sem in semantics:
            for mode in modes:
                result = reasoner.queryEntailment(sem, mode, phi)
                universe = reasoner.getUniverse()
                lines.append("{0} {1} {2}: {3}\n".format(sem, result.mode.value, phi.text,
                                                         "yes" if result.entailed else "no"))
                if result.noExtensions:
                    lines.append("    no extensions\n")
                for ext, w in zip(result.extensions, result.witnesses):
                    witness = universe[w].text if w is not None else "none"
                    lines.append("    {{{0}}}: {1}\n".format(", ".join(str(i) for i in ext), witness))
                payload["results"].append({"query": phi.text, "semantics": sem, "mode": result.mode.value,
                                           "entailed": result.entailed, "noExtensions": result.noExtensions,
                                           "extensions": [sorted(ext.members) for ext in result.extensions],
                                           "witnesses": [universe[w].text if w is not None else None
                                                         for w in result.witnesses]})
    _emit(lines, payload, options.json)
    return EXIT_OK


def cmd_mcs( reasoner: Reasoner, options ) -> int:
    family = reasoner.getMcsFamily()
    lines = ["mcs: " + m for m in family.getStringDescription()]
    lines.append("intersection: {{{0}}}\n".format(", ".join(_formula_texts(family.intersection()))))
    payload = {"mcs": [_formula_texts(m) for m in family],
               "intersection": _formula_texts(family.intersection())}
    if not reasoner.isRuleSystem:
        conflicts = reasoner.getMinimalConflicts()
        freeFormulas = reasoner.getFree()
        for c in conflicts:
            lines.append("conflict: {{{0}}}\n".format(", ".join(_formula_texts(c))))
        lines.append("free: {{{0}}}\n".format(", ".join(_formula_texts(freeFormulas))))
        payload["conflicts"] = [_formula_texts(c) for c in conflicts]
        payload["free"] = _formula_texts(freeFormulas)
    _emit(lines, payload, options.json)
    return EXIT_OK


def cmd_check( reasoner: Reasoner, options ) -> int:
    modes = [EntailmentMode.fromName(m) for m in options.mode] if options.mode else None
    report = check_problem(reasoner, semantics=options.semantics, modes=modes)
    payload = {"rows": report.rows, "notes": report.notes, "failed": report.failed}
    _emit(report.getStringDescription(), payload, options.json)
    return EXIT_CHECK_FAILED if report.failed else EXIT_OK


commands = {"args": cmd_args, "attacks": cmd_attacks, "extensions": cmd_extensions,
            "entails": cmd_entails, "mcs": cmd_mcs, "check": cmd_check}



def main( argv: Optional[List[str]]=None ) -> int:
    """
    Run the command line; returns the exit code.
    """
    options = build_parser().parse_args(argv)
    logging.basicConfig(format='%(levelname)s: %(message)s',
                        level=logging.DEBUG if options.verbose else logging.WARNING)
    try:
        problem = parse_problem_file(options.problem)
        reasoner = Reasoner(problem, maxAtoms=options.maxAtoms, maxPremises=options.maxPremises,
                            maxClasses=options.maxClasses)
        return commands[options.command](reasoner, options)
    except (ProblemFileError, FormulaSyntaxError, OSError) as err:
        log.error("%s", err)
        return EXIT_USAGE
    except (ProblemValidationError, AbaValidationError, InconsistentStrictError, CapExceededError,
            AttackRuleError) as err:
        log.error("%s", err)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
