import logging
from collections import OrderedDict
from dataclasses import dataclass
from typing import Optional
from ..tools.defs import Reason
from ..tools.formula import Falsum, Atom, TruthOf, TruthAt, Box, And, Or, Imp, truth_occurrences, has_box, erase_indices
from ..tools.system import SentenceSystem
from ..tools.errors import UnindexedOccurrenceError, UnsupportedConnectiveError, MissingAtomError

log = logging.getLogger('truthbench')


class LevelMap(object):
    """@TRUTHBENCH
    Hierarchy levels of the sentences of a system.

    * `levels` Map of sentence name to level, 0 means no truth predicate is involved.
    * `indices` Map of sentence name to the indices chosen for its inferred (T?) occurrences, left to right.
    """
    def __init__(self, levels, indices = None):
        self.levels = OrderedDict(levels)
        self.indices = OrderedDict(indices or {})

    def __getitem__(self, name):
        return self.levels[name]

    def __eq__(self, other):
        return isinstance(other, LevelMap) and dict(self.levels) == dict(other.levels)

    def __repr__(self):
        return format_levels(self)

@dataclass(frozen = True)
class LevelViolation(object):
    name: str
    ## Index is None for an inferred occurrence
    index: Optional[int]
    target: str
    reason: Reason

def _occurrences(system, name, allow_unknown):
    formula = system.definitions[name]
    if has_box(formula):
        log.error('Definition of "{}" contains box, which the hierarchy does not interpret'.format(name))
        raise UnsupportedConnectiveError('box in definition of {}'.format(name))
    occurrences = truth_occurrences(formula)
    for occurrence in occurrences:
        if isinstance(occurrence, TruthOf) or (occurrence.level is None and not allow_unknown):
            log.error('Definition of "{}" contains the unindexed occurrence {}'.format(name, occurrence))
            raise UnindexedOccurrenceError('Unindexed truth predicate {} in definition of {}'.format(occurrence, name))

    return occurrences

def check_levels(system):
    """@TRUTHBENCH
    Check that every truth predicate T_k(s) only applies to sentences s of level below k.
    The level of a sentence is the largest index in its definition.

    * `system` Sentence system with indexed truth predicates only.

    Returns the level map (LevelMap), or the first violation in definition order (LevelViolation).
    """
    occurrences = OrderedDict((name, _occurrences(system, name, False)) for name in system.definitions)
    levels = OrderedDict((name, max([o.level for o in occs], default = 0)) for name, occs in occurrences.items())
    for name, occs in occurrences.items():
        for occurrence in occs:
            if levels[occurrence.target] >= occurrence.level:
                log.debug('Index too low: {} in definition of {}'.format(occurrence, name))
                return LevelViolation(name, occurrence.level, occurrence.target, Reason.INDEX_TOO_LOW)

    return LevelMap(levels)

def _reaches(graph, start, goal):
    seen = set()
    stack = [start]
    while stack:
        node = stack.pop()
        if node == goal:
            return True
        if node in seen: continue
        seen.add(node)
        stack.extend(graph[node])

    return False

def infer_levels(system):
    """@TRUTHBENCH
    Choose the smallest indices for inferred occurrences T?(s), as longest paths in the dependency graph.
    Explicit indices are kept and checked.

    * `system` Sentence system, occurrences may be indexed or use T?.

    Returns the level map with the chosen indices (LevelMap), or the first violation (LevelViolation).
    """
    occurrences = OrderedDict((name, _occurrences(system, name, True)) for name in system.definitions)
    graph = {name: [o.target for o in occs] for name, occs in occurrences.items()}
    ## Any cycle through a truth predicate is unsatisfiable
    for name, occs in occurrences.items():
        for occurrence in occs:
            if _reaches(graph, occurrence.target, name):
                log.debug('Cyclic dependency through {} in definition of {}'.format(occurrence, name))
                return LevelViolation(name, occurrence.level, occurrence.target, Reason.CYCLIC_DEPENDENCY)
    levels = {}
    def level(name):
        if name not in levels:
            indices = [o.level if o.level is not None else level(o.target) + 1 for o in occurrences[name]]
            levels[name] = max(indices, default = 0)
        return levels[name]
    for name in occurrences:
        level(name)
    for name, occs in occurrences.items():
        for occurrence in occs:
            if occurrence.level is not None and levels[occurrence.target] >= occurrence.level:
                log.debug('Index too low: {} in definition of {}'.format(occurrence, name))
                return LevelViolation(name, occurrence.level, occurrence.target, Reason.INDEX_TOO_LOW)
    indices = OrderedDict()
    for name, occs in occurrences.items():
        indices[name] = [levels[o.target] + 1 for o in occs if o.level is None]

    return LevelMap(OrderedDict((name, levels[name]) for name in occurrences), indices)

def apply_levels(system, level_map):
    """@TRUTHBENCH
    Substitute the indices chosen by `infer_levels` for the T? markers of a system.

    Returns the fully indexed system (SentenceSystem).
    """
    definitions = OrderedDict()
    for name, body in system.definitions.items():
        chosen = iter(level_map.indices.get(name, []))
        definitions[name] = _substitute_indices(body, chosen)

    return SentenceSystem(definitions, system.base_facts, system.axioms, system.goals, system.options)

def _substitute_indices(formula, chosen):
    ## Left-to-right, matching the order of truth_occurrences
    if isinstance(formula, TruthAt) and formula.level is None:
        return TruthAt(next(chosen), formula.target)
    if isinstance(formula, (And, Or, Imp)):
        left = _substitute_indices(formula.left, chosen)
        return type(formula)(left, _substitute_indices(formula.right, chosen))

    return formula

def _classical(formula, values, base, owner):
    if isinstance(formula, Falsum):
        return False
    if isinstance(formula, Atom):
        if formula.name not in base:
            log.error('Atom "{}" in definition of "{}" has no base value'.format(formula.name, owner))
            raise MissingAtomError(formula.name)
        return base[formula.name]
    if isinstance(formula, TruthAt):
        if formula.level is None:
            log.error('Uninferred index T?({}) in definition of "{}"'.format(formula.target, owner))
            raise UnindexedOccurrenceError('T?({}) in definition of {}'.format(formula.target, owner))
        return values[formula.target]
    if isinstance(formula, (TruthOf, Box)):
        log.error('Cannot evaluate {} classically in definition of "{}"'.format(formula, owner))
        raise UnindexedOccurrenceError('{} in definition of {}'.format(formula, owner))
    left = _classical(formula.left, values, base, owner)
    right = _classical(formula.right, values, base, owner)
    if isinstance(formula, And):
        return left and right
    if isinstance(formula, Imp):
        return (not left) or right

    return left or right

def tarski_eval(system, level_map):
    """@TRUTHBENCH
    Classical evaluation, level by level. A truth predicate T_k(s) reads off the value of s computed at a lower level.

    * `system` Well-leveled sentence system.
    * `level_map` Its levels from `check_levels`.

    Returns the map of sentence name to boolean (OrderedDict).
    """
    order = sorted(system.definitions, key = lambda name: level_map[name])
    values = {}
    for name in order:
        values[name] = _classical(system.definitions[name], values, system.base_facts, name)

    return OrderedDict((name, values[name]) for name in system.definitions)

def erase_system_indices(system):
    """@TRUTHBENCH
    The Kripke system obtained by replacing every T_k(s) by T(s).
    """
    definitions = OrderedDict((name, erase_indices(body)) for name, body in system.definitions.items())

    return SentenceSystem(definitions, system.base_facts, system.axioms, system.goals, system.options)

def format_levels(level_map):
    return ' '.join(['levels:'] + ['{}={}'.format(name, level_map[name]) for name in sorted(level_map.levels)])

def format_violation(violation):
    index = '?' if violation.index is None else violation.index

    return 'violation: {} T{}({}) {}'.format(violation.name, index, violation.target, violation.reason.value)

def format_values(values):
    return ' '.join(['values:'] + ['{}={}'.format(name, 'true' if values[name] else 'false') for name in sorted(values)])
