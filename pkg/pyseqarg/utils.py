# Random instance generators for the property suites (and for experimenting
# with the engines interactively)

from typing import List, Sequence

import numpy as np   # type: ignore

from .formulas import Formula, Atom, Neg, And, Or, Impl, Iff, canonical_order, is_consistent
from .semantics import AttackGraph
from .aba import AbaFramework, InferenceRule, check_non_triviality


__all__ = ['random_formula', 'random_formula_set', 'random_aba_instance', 'random_rule_system',
           'random_attack_graph']


binaryConnectives = [And, Or, Impl, Iff]

defaultAtomNames = ["p", "q", "r", "s", "t"]



def _rng( rng ) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def random_formula( rng, atoms: Sequence[str]=defaultAtomNames[:3], maxDepth=2 ) -> Formula:
    """
    Returns a random formula over the given atom names, of depth at most maxDepth.

    Parameters
    ----------
    rng : numpy.random.Generator or int
        generator, or seed for a new one

    atoms : sequence of str, optional

    maxDepth : int, optional
        0 gives an atom; each level adds a negation or a binary connective

    Returns
    -------
    phi : :class:`~pyseqarg.formulas.Formula`
    """
    rng = _rng(rng)
    if maxDepth <= 0 or rng.random() < 0.3:
        return Atom(atoms[rng.integers(len(atoms))])
    if rng.random() < 0.3:
        return Neg(random_formula(rng, atoms, maxDepth - 1))
    connective = binaryConnectives[rng.integers(len(binaryConnectives))]
    return connective(random_formula(rng, atoms, maxDepth - 1), random_formula(rng, atoms, maxDepth - 1))


def random_formula_set( rng, size: int, atoms: Sequence[str]=defaultAtomNames[:3],
                        maxDepth=2 ) -> List[Formula]:
    """A list of `size` distinct random formulas (fewer if duplicates keep turning up)."""
    rng = _rng(rng)
    formulas = set()
    for _ in range(10 * size):
        if len(formulas) == size:
            break
        formulas.add(random_formula(rng, atoms, maxDepth))
    return list(canonical_order(formulas))


def random_aba_instance( rng, maxAssumptions=4, maxStrict=2, nAtoms=5, maxDepth=2,
                         maxTries=100 ) -> AbaFramework:
    """
    A random valid core-logic ABA framework: 1 to maxAssumptions assumptions and
    up to maxStrict consistent strict formulas over at most nAtoms atoms, with
    negation as the contrary (so contraposition for assumptions holds).

    Raises
    ------
    RuntimeError
        if no valid framework turns up in maxTries draws
    """
    rng = _rng(rng)
    atoms = defaultAtomNames[:nAtoms]
    for _ in range(maxTries):
        nStrict = int(rng.integers(maxStrict + 1))
        nAssumptions = int(rng.integers(1, maxAssumptions + 1))
        strict = random_formula_set(rng, nStrict, atoms, maxDepth)
        assumptions = [f for f in random_formula_set(rng, nAssumptions, atoms, maxDepth) if f not in strict]
        if len(assumptions) == 0 or not is_consistent(strict):
            continue
        AF = AbaFramework(strict, assumptions)
        AF.validate()
        return AF
    raise RuntimeError("no valid ABA instance found in {0:d} tries".format(maxTries))


def random_rule_system( rng, nAssumptions=3, nRules=4, maxBody=2, maxTries=100 ) -> AbaFramework:
    """
    A random non-trivial rule-system ABA framework over atoms: assumptions a0..,
    contraries c0.., one strict fact and rules with random bodies.
    """
    rng = _rng(rng)
    assumptions = [Atom("a{0:d}".format(i)) for i in range(nAssumptions)]
    contraries = [Atom("c{0:d}".format(i)) for i in range(nAssumptions)]
    others = [Atom("f"), Atom("g")]
    universe = assumptions + contraries + others
    for _ in range(maxTries):
        rules = []
        for _ in range(nRules):
            size = int(rng.integers(maxBody + 1))
            body = [universe[k] for k in rng.choice(len(universe), size=size, replace=False)]
            head = (contraries + others)[rng.integers(len(contraries) + len(others))]
            if head not in body:
                rules.append(InferenceRule(body, head))
        AF = AbaFramework([others[0]], assumptions, dict(zip(assumptions, contraries)), rules=rules)
        if check_non_triviality(AF):
            return AF
    raise RuntimeError("no non-trivial rule system found in {0:d} tries".format(maxTries))


def random_attack_graph( rng, nArguments: int, density=0.25, selfAttacks=False ) -> AttackGraph:
    """
    A random abstract framework: each ordered pair is an attack with
    probability `density`.
    """
    rng = _rng(rng)
    M = rng.random((nArguments, nArguments)) < density
    if not selfAttacks:
        np.fill_diagonal(M, False)
    return AttackGraph(M)
