import logging
from ..tools.defs import Consistency
from ..tools.formula import Box, FALSUM, VERUM, transform
from .ipc import G4ip, Sequent
from .prover import _require_reflection_off

log = logging.getLogger('truthbench')


def erase_box(formula):
    """@TRUTHBENCH
    Replace every boxed subformula by true.
    """
    return transform(formula, lambda f: VERUM if isinstance(f, Box) else f)

def consistency_check(theory, budget = None):
    """@TRUTHBENCH
    Consistency of a theory via its box-erased form: with every box read as true, co-reflection and
    distribution instances become tautologies, so an underivable falsum from the erased definitions and
    axioms shows the theory consistent.

    * `theory` The theory, with the reflection rule off.
    * `budget` Node budget of the search.

    Returns CONSISTENT or INCONSISTENT (Consistency).
    """
    _require_reflection_off(theory, 'Consistency check')
    hypotheses = frozenset(erase_box(f) for f in list(theory.biconditionals()) + list(theory.axioms))
    derivation = G4ip(budget).prove(Sequent(hypotheses, FALSUM))
    if derivation is not None:
        log.debug('Box-erased theory derives false in {} steps'.format(derivation.size()))
        return Consistency.INCONSISTENT

    return Consistency.CONSISTENT
