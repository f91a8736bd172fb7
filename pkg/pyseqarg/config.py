"""
Functions for parsing problem files, returning instances of the
ProblemDescription class in descriptions.py

The main useful function is parse_problem_file, which returns an instance of the
ProblemDescription class.

Problem files are UTF-8, line-oriented "key: value" files; '#' starts a comment.
Recognized keys:

    mode: flat | assumptive | aba
    deduction: core-logic | rule-system
    strict: f1; f2; ...
    assumptions: a1; a2; ...
    contrary: a := f                (repeatable)
    rules: b1, b2 -> h              (repeatable; empty body written "-> h")
    attack: ucut | ducut | at-aba   (repeatable)
    query: f                        (repeatable)
    semantics: grd | cmp | prf | stb
    entailment: cap | cup | wcap
    minimal: yes | no
    max-atoms: N ; max-premises: N ; max-classes: N
"""

from typing import List, Tuple

from .formulas import Formula, FormulaSyntaxError, parse
from .aba import InferenceRule
from .descriptions import ProblemDescription, PROBLEM_MODES, CAP_OPTIONS

__all__ = ['parse_problem_file', 'parse_problem', 'ProblemFileError']


commentChar = '#'
formulaSeparator = ';'
contrarySeparator = ':='

# keys which may appear at most once
singleKeys = ["mode", "deduction", "strict", "assumptions", "minimal"] + list(CAP_OPTIONS.keys())
repeatableKeys = ["contrary", "rules", "attack", "query", "semantics", "entailment"]
recognizedKeys = singleKeys + repeatableKeys

flagValues = {"yes": True, "true": True, "on": True, "no": False, "false": False, "off": False}



class ProblemFileError(ValueError):
    """
    Raised for malformed problem files.

    Attributes
    ----------
    lineNumber : int or None
        1-based line number in the file where the problem was found
    """
    def __init__( self, message: str, lineNumber=None ):
        if lineNumber is not None:
            message = "line {0:d}: {1}".format(lineNumber, message)
        super().__init__(message)
        self.lineNumber = lineNumber



def parse_problem_file( fileName: str ) -> ProblemDescription:
    """
    Read and parse a problem file.

    Parameters
    ----------
    fileName : str
        Path to the problem file.

    Returns
    -------
    problem : :class:`~pyseqarg.ProblemDescription`
    """
    with open(fileName, encoding="utf-8") as fd:
        return parse_problem(fd.readlines())




def parse_problem( lines: List[str] ) -> ProblemDescription:
    """
    Parse a problem from a list of strings.

    Parameters
    ----------
    lines : list of str
        String representation of the problem file.

    Returns
    -------
    problem : :class:`~pyseqarg.ProblemDescription`

    Raises
    ------
    ProblemFileError
        for unknown keys, repeated single keys, malformed values, or formula syntax
        errors (the message carries the line number)

    See also
    --------
    parse_problem_file
    """
    problem = ProblemDescription()
    seen = set()
    for lineNumber, line in clean_lines(lines):
        key, value = read_key_value(line, lineNumber)
        if key in singleKeys:
            if key in seen:
                raise ProblemFileError("key \"{0}\" given more than once".format(key), lineNumber)
            seen.add(key)
        try:
            if key == "mode":
                problem.mode = read_choice(value, PROBLEM_MODES)
            elif key == "deduction":
                problem.deduction = read_choice(value, ("core-logic", "rule-system"))
            elif key == "strict":
                problem.strict = read_formula_list(value)
            elif key == "assumptions":
                problem.assumptions = read_formula_list(value)
            elif key == "contrary":
                a, f = read_contrary(value)
                if a in problem.contrary:
                    raise ValueError("contrary of {0} given more than once".format(a))
                problem.contrary[a] = f
            elif key == "rules":
                problem.rules.append(read_rule(value))
            elif key == "attack":
                problem.addAttackRule(value)
            elif key == "query":
                problem.addQuery(read_formula(value))
            elif key == "semantics":
                problem.addSemantics(value)
            elif key == "entailment":
                problem.addEntailmentMode(value)
            elif key == "minimal":
                problem.minimal = read_flag(value)
            else:
                problem.updateOptions({key: read_cap(value)})
        except ProblemFileError:
            raise
        except ValueError as err:
            # includes FormulaSyntaxError (which reports the byte offset within the value)
            raise ProblemFileError(str(err), lineNumber)

    if "strict" not in seen and "assumptions" not in seen:
        raise ProblemFileError("no strict or assumptions section in problem file")
    return problem




def clean_lines( lines: List[str] ) -> List[Tuple[int, str]]:
    """
    Returns a list of (line number, line) pairs for the input lines, with comments
    and empty lines stripped out (line numbers are 1-based and refer to the input).

    Parameters
    ----------
    lines : list of str

    Returns
    -------
    cleaned_lines : list of (int, str)
    """
    cleaned_lines = []
    for i, line in enumerate(lines):
        # Clean the comments.
        line = line.split(commentChar, 1)[0]
        # Remove leading and trailing whitespace.
        line = line.strip()
        # Skip the empty lines.
        if line == '':
            continue
        cleaned_lines.append((i + 1, line))
    return cleaned_lines




def read_key_value( line: str, lineNumber=None ) -> Tuple[str, str]:
    """
    Splits a line of the form "key: value" (value may be empty).
    """
    if ':' not in line:
        raise ProblemFileError("expected \"key: value\"", lineNumber)
    key, value = line.split(':', 1)
    key = key.strip().lower()
    if key not in recognizedKeys:
        raise ProblemFileError("unknown key \"{0}\"".format(key), lineNumber)
    return key, value.strip()


def read_formula( text: str ) -> Formula:
    return parse(text.strip())


def read_formula_list( text: str ) -> List[Formula]:
    """
    Parses a ';'-separated list of formulas (possibly empty).

    Parameters
    ----------
    text : str
        e.g., "p; p -> q; ~q"

    Returns
    -------
    formulas : list of Formula
    """
    formulas = []
    for piece in text.split(formulaSeparator):
        if piece.strip() == '':
            continue
        formulas.append(read_formula(piece))
    return formulas


def read_contrary( text: str ) -> Tuple[Formula, Formula]:
    """
    Parses "a := f" into the pair (a, f).
    """
    if contrarySeparator not in text:
        raise ValueError("contrary entries must have the form \"a := f\"")
    a, f = text.split(contrarySeparator, 1)
    return read_formula(a), read_formula(f)


def _split_rule( text: str ) -> Tuple[str, str]:
    # find the first "->" outside parentheses which is not part of "<->"
    depth = 0
    for i, c in enumerate(text):
        if c == '(':
            depth += 1
        elif c == ')':
            depth -= 1
        elif depth == 0 and text.startswith("->", i) and (i == 0 or text[i - 1] != '<'):
            return text[:i], text[i + 2:]
    raise ValueError("rule lines must have the form \"b1, b2 -> h\"")


def read_rule( text: str ) -> InferenceRule:
    """
    Parses an inference rule "b1, b2 -> h". The body is separated from the head at
    the first top-level "->", so body formulas containing "->" must be parenthesized.

    Returns
    -------
    rule : :class:`~pyseqarg.aba.InferenceRule`
    """
    bodyText, headText = _split_rule(text)
    body = [read_formula(b) for b in bodyText.split(',') if b.strip() != '']
    return InferenceRule(body, read_formula(headText))


def read_choice( text: str, allowed ) -> str:
    value = text.strip().lower()
    if value not in allowed:
        raise ValueError("\"{0}\" is not one of {1}".format(text, ", ".join(allowed)))
    return value


def read_flag( text: str ) -> bool:
    try:
        return flagValues[text.strip().lower()]
    except KeyError:
        raise ValueError("expected yes or no, but got \"{0}\"".format(text))


def read_cap( text: str ) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ValueError("expected a positive integer, but got \"{0}\"".format(text))
    if value <= 0:
        raise ValueError("expected a positive integer, but got \"{0}\"".format(text))
    return value
