import os
import logging
from collections import OrderedDict
from types import MappingProxyType
from .formula import Atom, iff, truth_occurrences, closure_of, format_formula
from .parser import parse_scenario_lines
from .errors import ValidationError, UndefinedNameError, NamespaceClashError, DuplicateNameError

log = logging.getLogger('truthbench')

## Scenario option keys and their parsers
_switch_values = {'on': True, 'off': False, 'true': True, 'false': False}
option_parsers = {
    'reflection': lambda val: _switch_values[val.lower()],
    'cap': int,
    'depth': int,
    'budget': int,
    }


class SentenceSystem(object):
    """@TRUTHBENCH
    A finite system of named, possibly self-referential sentences.

    * `definitions` Map of sentence name to defining formula, order is kept.
    * `base_facts` Map of atom name to boolean value.
    * `axioms` List of axiom formulas.
    * `goals` List of (label, formula) pairs.
    * `options` Map of scenario option to value.

    Raises a ValidationError if sentence and atom names overlap or a truth predicate names an undefined sentence.
    """
    def __init__(self, definitions = None, base_facts = None, axioms = None, goals = None, options = None):
        self._definitions = OrderedDict(definitions or {})
        self._base_facts = OrderedDict(base_facts or {})
        self.axioms = tuple(axioms or ())
        self.goals = tuple((label, formula) for label, formula in (goals or ()))
        self._options = OrderedDict(options or {})
        self._validate()

    @property
    def definitions(self):
        return MappingProxyType(self._definitions)

    @property
    def base_facts(self):
        return MappingProxyType(self._base_facts)

    @property
    def options(self):
        return MappingProxyType(self._options)

    @property
    def names(self):
        """@TRUTHBENCH
        Sentence names in lexicographic order.
        """
        return sorted(self._definitions)

    def __len__(self):
        return len(self._definitions)

    def __contains__(self, name):
        return name in self._definitions

    def __repr__(self):
        return format_system(self)

    def _validate(self):
        for name in self._definitions:
            if name in self._base_facts:
                log.error('Name "{}" is both a sentence and an atom'.format(name))
                raise NamespaceClashError(name)
        labels = set()
        for label, _ in self.goals:
            if label in labels:
                log.error('Goal label "{}" is used twice'.format(label))
                raise DuplicateNameError(label, 'goal')
            labels.add(label)
        checks = [(formula, 'definition of {}'.format(name)) for name, formula in self._definitions.items()]
        checks += [(formula, 'axiom') for formula in self.axioms]
        checks += [(formula, 'goal {}'.format(label)) for label, formula in self.goals]
        for formula, context in checks:
            for occurrence in truth_occurrences(formula):
                if occurrence.target in self._definitions: continue
                log.error('Truth predicate in {} refers to undefined sentence "{}"'.format(context, occurrence.target))
                raise UndefinedNameError(occurrence.target, context)

    def goal(self, label):
        """@TRUTHBENCH
        Look up a goal formula by its label.

        * `label` The goal label.

        Returns the goal (Formula).
        """
        for goal_label, formula in self.goals:
            if goal_label == label:
                return formula
        log.error('No goal with label "{}"'.format(label))
        raise UndefinedNameError(label, 'goal label')

    def option(self, key, default = None):
        return self._options.get(key, default)

    def biconditionals(self):
        """@TRUTHBENCH
        The definitional biconditionals `name <-> body`, in definition order.
        """
        return [iff(Atom(name), body) for name, body in self._definitions.items()]

def parse_system(text):
    """@TRUTHBENCH
    Parse and validate a scenario.

    * `text` Scenario text, see the howto for the line format.

    Returns the validated system (SentenceSystem).
    """
    definitions = OrderedDict()
    base_facts = OrderedDict()
    axioms = []
    goals = []
    options = OrderedDict()
    for lineno, keyword, args in parse_scenario_lines(text):
        if keyword == 'sentence':
            name, formula = args
            if name in definitions:
                log.error('Line {}: sentence "{}" is defined twice'.format(lineno, name))
                raise DuplicateNameError(name, 'sentence')
            definitions[name] = formula
        elif keyword == 'atom':
            name, value = args
            if name in base_facts:
                log.error('Line {}: atom "{}" is declared twice'.format(lineno, name))
                raise DuplicateNameError(name, 'atom')
            base_facts[name] = (value == 'true')
        elif keyword == 'axiom':
            axioms.append(args[0])
        elif keyword == 'goal':
            goals.append((args[0], args[1]))
        elif keyword == 'option':
            key, value = args
            if key not in option_parsers:
                log.warning('Line {}: ignoring unknown option "{}"'.format(lineno, key))
                continue
            try:
                options[key] = option_parsers[key](value)
            except (KeyError, ValueError):
                log.error('Line {}: bad value "{}" for option "{}"'.format(lineno, value, key))
                raise ValidationError('Bad value "{}" for option "{}"'.format(value, key))

    return SentenceSystem(definitions, base_facts, axioms, goals, options)

def load_system(file_name):
    """@TRUTHBENCH
    Read and parse a UTF-8 scenario file.

    * `file_name` Path to the scenario file.

    Returns the validated system (SentenceSystem).
    """
    try:
        with open(file_name, 'r', encoding = 'utf-8') as in_file:
            text = in_file.read()
    except (IOError, OSError, UnicodeDecodeError) as e:
        log.error('Cannot read scenario file {}: {}'.format(file_name, e))
        raise ValidationError('Cannot read {}: {}'.format(file_name, e))
    log.debug('Loaded scenario file {}'.format(os.path.abspath(file_name)))

    return parse_system(text)

def format_option(value):
    if isinstance(value, bool):
        return 'on' if value else 'off'

    return str(value)

def format_system(system):
    """@TRUTHBENCH
    Canonical scenario text of a system, parseable by `parse_system`.
    """
    lines = []
    for key, value in system.options.items():
        lines.append('option {} = {}'.format(key, format_option(value)))
    for name, value in system.base_facts.items():
        lines.append('atom {} = {}'.format(name, 'true' if value else 'false'))
    for name, formula in system.definitions.items():
        lines.append('sentence {} := {}'.format(name, format_formula(formula)))
    for formula in system.axioms:
        lines.append('axiom {}'.format(format_formula(formula)))
    for label, formula in system.goals:
        lines.append('goal {}: {}'.format(label, format_formula(formula)))

    return '\n'.join(lines)

def closure(system, extra = ()):
    """@TRUTHBENCH
    Subformula closure of a system's definitional biconditionals, its axioms and extra formulas,
    closed under a single negation.

    * `system` A SentenceSystem or any object with `definitions` and `axioms`.
    * `extra` Additional formulas.

    Returns the closure members in deterministic order (list).
    """
    biconditionals = [iff(Atom(name), body) for name, body in system.definitions.items()]

    return closure_of(biconditionals + list(system.axioms) + list(extra))
