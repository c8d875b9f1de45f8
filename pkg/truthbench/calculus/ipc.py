import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Optional, Tuple
from ..tools.defs import Decision
from ..tools.formula import Formula, And, Or, Imp, FALSUM, format_formula
from ..tools.errors import ResourceBoundError
from ..tools import options

log = logging.getLogger('truthbench')


@dataclass(frozen = True)
class Sequent(object):
    hypotheses: FrozenSet[Formula]
    goal: Formula

    def __str__(self):
        return '{} |- {}'.format(', '.join(sorted(format_formula(h) for h in self.hypotheses)), format_formula(self.goal))

@dataclass(frozen = True)
class Derivation(object):
    """@TRUTHBENCH
    A G4ip derivation tree.

    * `rule` Rule name, e.g. "imp-r" or "imp-imp".
    * `sequent` The derived sequent.
    * `principal` The hypothesis the rule acts on, None for axioms and right rules.
    * `children` Derivations of the premises.
    """
    rule: str
    sequent: Sequent
    principal: Optional[Formula] = None
    children: Tuple['Derivation', ...] = ()

    def size(self):
        return 1 + sum(child.size() for child in self.children)

@lru_cache(maxsize = None)
def _order_key(formula):
    return format_formula(formula, resugar = False)

class G4ip(object):
    """@TRUTHBENCH
    Contraction-free sequent calculus for intuitionistic propositional logic. Boxed formulas and truth
    predicates are atoms. Invertible rules are applied first, in a fixed hypothesis order, so results are deterministic.

    * `budget` Maximum number of searched sequents, defaults to the "calculus.budget" option.
    """
    def __init__(self, budget = None):
        self.budget = options.Main.get('calculus', 'budget', override = budget)
        self.nodes = 0
        self._proved = {}
        self._failed = set()

    def prove(self, sequent):
        """@TRUTHBENCH
        Search a derivation of the sequent.

        Returns the derivation (Derivation), or None if the sequent is not derivable.
        """
        derivation = self._search(frozenset(sequent.hypotheses), sequent.goal)
        log.debug('Searched {} sequents for {}: {}'.format(self.nodes, sequent, 'derived' if derivation else 'underivable'))

        return derivation

    def _search(self, gamma, goal):
        key = (gamma, goal)
        if key in self._proved:
            return self._proved[key]
        if key in self._failed:
            return None
        self.nodes += 1
        if self.nodes > self.budget:
            log.error('Proof search exceeded the budget of {} sequents'.format(self.budget))
            raise ResourceBoundError('Proof search exceeded the budget of {} sequents'.format(self.budget))
        derivation = self._expand(gamma, goal)
        if derivation is None:
            self._failed.add(key)
        else:
            self._proved[key] = derivation

        return derivation

    def _node(self, rule, gamma, goal, principal = None, children = ()):
        if any(child is None for child in children):
            return None

        return Derivation(rule, Sequent(gamma, goal), principal, tuple(children))

    def _expand(self, gamma, goal):
        if goal in gamma:
            return self._node('ax', gamma, goal)
        if FALSUM in gamma:
            return self._node('efq', gamma, goal)
        ordered = sorted(gamma, key = _order_key)
        ## Invertible left rules
        for h in ordered:
            rest = gamma - {h}
            if isinstance(h, And):
                return self._node('and-l', gamma, goal, h, [self._search(rest | {h.left, h.right}, goal)])
            if isinstance(h, Or):
                left = self._search(rest | {h.left}, goal)
                if left is None:
                    return None
                return self._node('or-l', gamma, goal, h, [left, self._search(rest | {h.right}, goal)])
            if not isinstance(h, Imp): continue
            if h.left == FALSUM:
                return self._node('drop', gamma, goal, h, [self._search(rest, goal)])
            if h.left in gamma:
                return self._node('mp', gamma, goal, h, [self._search(rest | {h.right}, goal)])
            if isinstance(h.left, And):
                curried = Imp(h.left.left, Imp(h.left.right, h.right))
                return self._node('and-imp', gamma, goal, h, [self._search(rest | {curried}, goal)])
            if isinstance(h.left, Or):
                split = {Imp(h.left.left, h.right), Imp(h.left.right, h.right)}
                return self._node('or-imp', gamma, goal, h, [self._search(rest | split, goal)])
        ## Invertible right rules
        if isinstance(goal, And):
            left = self._search(gamma, goal.left)
            if left is None:
                return None
            return self._node('and-r', gamma, goal, None, [left, self._search(gamma, goal.right)])
        if isinstance(goal, Imp):
            return self._node('imp-r', gamma, goal, None, [self._search(gamma | {goal.left}, goal.right)])
        ## Non-invertible rules, first success wins
        if isinstance(goal, Or):
            for rule, part in (('or-r1', goal.left), ('or-r2', goal.right)):
                derivation = self._search(gamma, part)
                if derivation is not None:
                    return self._node(rule, gamma, goal, None, [derivation])
        for h in ordered:
            if not (isinstance(h, Imp) and isinstance(h.left, Imp)): continue
            inner = h.left
            rest = gamma - {h}
            first = self._search(rest | {Imp(inner.right, h.right)}, inner)
            if first is None: continue
            second = self._search(rest | {h.right}, goal)
            if second is not None:
                return self._node('imp-imp', gamma, goal, h, [first, second])

        return None

def ipc_decide(sequent, budget = None):
    """@TRUTHBENCH
    Decide intuitionistic propositional derivability of a sequent.

    * `sequent` The sequent.
    * `budget` Node budget of the search.

    Returns PROVABLE or UNPROVABLE (Decision).
    """
    derivation = G4ip(budget).prove(sequent)

    return Decision.PROVABLE if derivation is not None else Decision.UNPROVABLE
