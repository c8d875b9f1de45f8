import logging
from collections import OrderedDict
from types import MappingProxyType
from ..tools.formula import Atom, Imp, iff
from ..tools import options

log = logging.getLogger('truthbench')


class Theory(object):
    """@TRUTHBENCH
    A theory of the provability calculus. Every definition induces the biconditional `name <-> body`,
    usable in both directions. Truth predicates are opaque atoms here.

    * `definitions` Map of sentence name to defining formula.
    * `axioms` List of axiom formulas.
    * `reflection` Enable the reflection rule (from a proven box A conclude A).
    """
    def __init__(self, definitions = None, axioms = None, reflection = False):
        self._definitions = OrderedDict(definitions or {})
        self.axioms = tuple(axioms or ())
        self.reflection = reflection

    @classmethod
    def from_system(cls, system, reflection = None):
        """@TRUTHBENCH
        Theory view of a scenario. The reflection rule follows the "reflection" option unless given.
        """
        reflection = options.Main.get('calculus', 'reflection', system, reflection)

        return cls(system.definitions, system.axioms, reflection)

    @property
    def definitions(self):
        return MappingProxyType(self._definitions)

    def __repr__(self):
        return 'Theory(definitions = {}, axioms = {}, reflection = {})'.format(
            ', '.join('{} := {}'.format(name, body) for name, body in self._definitions.items()),
            [str(axiom) for axiom in self.axioms], self.reflection)

    def def_left(self, name):
        ## name -> body
        return Imp(Atom(name), self._definitions[name])

    def def_right(self, name):
        ## body -> name
        return Imp(self._definitions[name], Atom(name))

    def biconditionals(self):
        return [iff(Atom(name), body) for name, body in self._definitions.items()]
