import logging
import itertools
from collections import OrderedDict
from dataclasses import dataclass
from typing import Optional
from ..tools.defs import TruthValue, Classification, Comparison
from ..tools.formula import Falsum, Atom, TruthOf, TruthAt, Box, And, Or, Imp
from ..tools.errors import UnsupportedConnectiveError, MissingAtomError, CapExceededError, DomainMismatchError, UndefinedNameError
from ..tools.printer import Printer
from ..tools import options

log = logging.getLogger('truthbench')

## Strong Kleene ranks, conjunction is min and disjunction is max
_rank = {TruthValue.FALSE: 0, TruthValue.UNDEFINED: 1, TruthValue.TRUE: 2}
_value = {0: TruthValue.FALSE, 1: TruthValue.UNDEFINED, 2: TruthValue.TRUE}
## Candidate order of the fixed point enumeration
ENUMERATION_ORDER = (TruthValue.FALSE, TruthValue.TRUE, TruthValue.UNDEFINED)


class Interpretation(object):
    """@TRUTHBENCH
    Three-valued interpretation of the truth predicate over sentence names.

    * `assignment` Map of sentence name to TruthValue.
    """
    def __init__(self, assignment):
        self._assignment = OrderedDict((name, assignment[name]) for name in sorted(assignment))

    @classmethod
    def undefined(cls, names):
        return cls({name: TruthValue.UNDEFINED for name in names})

    def __getitem__(self, name):
        return self._assignment[name]

    def __contains__(self, name):
        return name in self._assignment

    def __iter__(self):
        return iter(self._assignment)

    def __len__(self):
        return len(self._assignment)

    def __eq__(self, other):
        return isinstance(other, Interpretation) and self._assignment == other._assignment

    def __hash__(self):
        return hash(tuple(self._assignment.items()))

    def __repr__(self):
        return 'Interpretation({})'.format(self.format())

    @property
    def names(self):
        return list(self._assignment)

    @property
    def extension(self):
        return frozenset(name for name, val in self._assignment.items() if val is TruthValue.TRUE)

    @property
    def anti_extension(self):
        return frozenset(name for name, val in self._assignment.items() if val is TruthValue.FALSE)

    def leq(self, other):
        """@TRUTHBENCH
        Information order: every name determined here has the same value in `other`.
        """
        return self.extension <= other.extension and self.anti_extension <= other.anti_extension

    def format(self):
        return ' '.join('{}={}'.format(name, val.value) for name, val in self._assignment.items())

class StageTrace(object):
    """@TRUTHBENCH
    The stages of the least fixed point construction, stage 0 leaves every name undefined.
    """
    def __init__(self, stages):
        self.stages = list(stages)

    def __len__(self):
        return len(self.stages)

    def __getitem__(self, k):
        return self.stages[k]

    def __iter__(self):
        return iter(self.stages)

    @property
    def final(self):
        return self.stages[-1]

@dataclass(frozen = True)
class Verdict(object):
    kind: Classification
    witness_true: Optional[Interpretation] = None
    witness_other: Optional[Interpretation] = None

def _eval_rank(formula, interpretation, base):
    if isinstance(formula, Falsum):
        return 0
    if isinstance(formula, Atom):
        if formula.name in base:
            return 2 if base[formula.name] else 0
        if formula.name in interpretation:
            log.error('Sentence "{}" is referenced without truth predicate'.format(formula.name))
            raise UnsupportedConnectiveError('Bare sentence reference "{}", use T({})'.format(formula.name, formula.name))
        log.error('Atom "{}" has no base value'.format(formula.name))
        raise MissingAtomError(formula.name)
    if isinstance(formula, TruthOf):
        if formula.target not in interpretation:
            log.error('Interpretation has no value for "{}"'.format(formula.target))
            raise UndefinedNameError(formula.target)
        return _rank[interpretation[formula.target]]
    if isinstance(formula, (TruthAt, Box)):
        connective = 'box' if isinstance(formula, Box) else 'indexed truth predicate'
        log.error('The Kripke semantics does not interpret the {}'.format(connective))
        raise UnsupportedConnectiveError('Kripke semantics cannot evaluate {}'.format(connective))
    left = _eval_rank(formula.left, interpretation, base)
    right = _eval_rank(formula.right, interpretation, base)
    if isinstance(formula, And):
        return min(left, right)
    if isinstance(formula, Or):
        return max(left, right)

    return max(2 - left, right)

def sk_eval(formula, interpretation, base):
    """@TRUTHBENCH
    Strong Kleene evaluation of a formula.

    * `formula` Formula without box and indexed truth predicates.
    * `interpretation` Interpretation of the truth predicate.
    * `base` Map of atom name to boolean.

    Returns the value (TruthValue).
    """
    return _value[_eval_rank(formula, interpretation, base)]

def jump(system, interpretation):
    """@TRUTHBENCH
    Re-evaluate every definition of the system under the interpretation, all names at once.

    Returns the next interpretation (Interpretation).
    """
    base = system.base_facts

    return Interpretation({name: sk_eval(body, interpretation, base) for name, body in system.definitions.items()})

def least_fixed_point(system):
    """@TRUTHBENCH
    Iterate the jump from the all-undefined interpretation until it is stable.
    The trace ends with the first stage that the jump maps to itself.

    Returns the least fixed point and the stage trace (tuple).
    """
    stage = Interpretation.undefined(system.definitions)
    stages = [stage]
    while True:
        next_stage = jump(system, stage)
        if next_stage == stage: break
        stages.append(next_stage)
        stage = next_stage
    log.debug('Least fixed point reached at stage {}'.format(len(stages) - 1))

    return stage, StageTrace(stages)

def _default_printer():
    return Printer(verbosity = options.Main.verbosity, bar_mode = options.Main.bar_mode)

def enumerate_fixed_points(system, cap = None, printer = None):
    """@TRUTHBENCH
    All fixed points of the jump, found by checking every three-valued interpretation.

    * `system` The sentence system.
    * `cap` Maximum number of sentence names, defaults to the "kripke.cap" option.
    * `printer` Printer used for the progress bar.

    Returns the fixed points in lexicographic order, names sorted and values ordered f < t < u (list).
    """
    cap = options.Main.get('kripke', 'cap', system, cap)
    names = system.names
    if len(names) > cap:
        log.error('Cannot enumerate fixed points of {} sentences (cap is {})'.format(len(names), cap))
        raise CapExceededError('{} sentence names exceed the enumeration cap of {}'.format(len(names), cap))
    printer = printer or _default_printer()
    definitions = system.definitions
    base = system.base_facts
    fixed_points = []
    candidates = itertools.product(ENUMERATION_ORDER, repeat = len(names))
    for values in printer.progress(candidates, total = 3**len(names), desc = 'fixed points', unit = 'interpretation'):
        candidate = dict(zip(names, values))
        ## Stop at the first name the jump changes
        if all(sk_eval(definitions[name], candidate, base) is candidate[name] for name in names):
            fixed_points.append(Interpretation(candidate))
    log.debug('Found {} fixed points among {} interpretations'.format(len(fixed_points), 3**len(names)))

    return fixed_points

def classify(system, name, cap = None, printer = None):
    """@TRUTHBENCH
    Classify a sentence as grounded, paradoxical or ungrounded.

    * `system` The sentence system.
    * `name` Sentence name.
    * `cap` Enumeration cap, see `enumerate_fixed_points`. If it is exceeded only groundedness is reported.

    Returns the classification (Verdict).
    """
    if name not in system:
        log.error('Cannot classify undefined sentence "{}"'.format(name))
        raise UndefinedNameError(name, 'classification target')
    lfp, _ = least_fixed_point(system)
    if lfp[name] is TruthValue.TRUE:
        return Verdict(Classification.GROUNDED_TRUE)
    if lfp[name] is TruthValue.FALSE:
        return Verdict(Classification.GROUNDED_FALSE)
    try:
        fixed_points = enumerate_fixed_points(system, cap, printer)
    except CapExceededError:
        log.warning('Falling back to groundedness only for "{}"'.format(name))
        return Verdict(Classification.GROUNDEDNESS_ONLY)
    determined = [fp for fp in fixed_points if fp[name] is not TruthValue.UNDEFINED]
    if not determined:
        return Verdict(Classification.PARADOXICAL)
    witness_true = next((fp for fp in fixed_points if fp[name] is TruthValue.TRUE), determined[0])
    witness_other = next(fp for fp in fixed_points if fp[name] is not witness_true[name])

    return Verdict(Classification.UNGROUNDED, witness_true, witness_other)

def compare(first, second):
    """@TRUTHBENCH
    Compare two interpretations in the information order.

    Returns SUBORDINATE if `first` is below `second`, EXTENDS for the converse (Comparison).
    """
    if set(first.names) != set(second.names):
        log.error('Cannot compare interpretations over different names')
        raise DomainMismatchError('Interpretations have different domains: {} and {}'.format(first.names, second.names))
    below = first.leq(second)
    above = second.leq(first)
    if below and above:
        return Comparison.EQUAL
    if below:
        return Comparison.SUBORDINATE
    if above:
        return Comparison.EXTENDS

    return Comparison.INCOMPARABLE

def scope(interpretation):
    ## Range of application of the truth predicate
    return interpretation.extension | interpretation.anti_extension

def unsound_stages(trace):
    """@TRUTHBENCH
    Stages of a trace that are not below its final stage. Empty for every trace of `least_fixed_point`.

    Returns the stage numbers (list).
    """
    return [k for k, stage in enumerate(trace) if not stage.leq(trace.final)]

def never_true(name, trace, fixed_points = ()):
    """@TRUTHBENCH
    Meta-level check that a sentence is true at no stage of the trace and in none of the given fixed points.
    """
    interpretations = list(trace) + list(fixed_points)

    return all(interpretation[name] is not TruthValue.TRUE for interpretation in interpretations)

def format_stage(k, stage):
    return ' '.join(['stage {}:'.format(k)] + stage.format().split())

def format_trace(trace):
    return [format_stage(k, stage) for k, stage in enumerate(trace)]

def format_verdict(name, verdict):
    """@TRUTHBENCH
    Report line for a classification, e.g. "K: ungrounded (witnesses: {K=t}, {K=f})".
    """
    if verdict.kind is Classification.UNGROUNDED:
        return '{}: ungrounded (witnesses: {{{}}}, {{{}}})'.format(name, verdict.witness_true.format(), verdict.witness_other.format())

    return '{}: {}'.format(name, verdict.kind.value)
