from dataclasses import dataclass
from typing import Optional
from collections import OrderedDict
import logging

log = logging.getLogger('truthbench')


class Formula(object):
    """@TRUTHBENCH
    Base class of the object language. All formulas are immutable and compare structurally.
    Negation, verum and the biconditional are sugar: see `neg`, `VERUM` and `iff`.
    """
    def __str__(self):
        return format_formula(self)

@dataclass(frozen = True)
class Falsum(Formula):
    pass

@dataclass(frozen = True)
class Atom(Formula):
    name: str

@dataclass(frozen = True)
class TruthOf(Formula):
    target: str

@dataclass(frozen = True)
class TruthAt(Formula):
    ## None marks an index to be inferred (T?)
    level: Optional[int]
    target: str

@dataclass(frozen = True)
class Box(Formula):
    body: Formula

@dataclass(frozen = True)
class And(Formula):
    left: Formula
    right: Formula

@dataclass(frozen = True)
class Or(Formula):
    left: Formula
    right: Formula

@dataclass(frozen = True)
class Imp(Formula):
    left: Formula
    right: Formula

FALSUM = Falsum()
VERUM = Imp(FALSUM, FALSUM)

def neg(formula):
    return Imp(formula, FALSUM)

def iff(left, right):
    return And(Imp(left, right), Imp(right, left))

def is_negation(formula):
    return isinstance(formula, Imp) and formula.right == FALSUM

def is_iff(formula):
    if not isinstance(formula, And): return False
    left, right = formula.left, formula.right
    if not isinstance(left, Imp) or not isinstance(right, Imp): return False

    return left.left == right.right and left.right == right.left

def is_atomic(formula):
    """@TRUTHBENCH
    Atomic for the intuitionistic core: atoms, truth predicates and boxed formulas.
    """
    return isinstance(formula, (Atom, TruthOf, TruthAt, Box))

## Printing precedence levels
IMP, OR, AND, UN, PRIM = range(5)

def format_formula(formula, resugar = True):
    """@TRUTHBENCH
    Print a formula in minimal-parenthesis concrete syntax.

    * `formula` The formula to print.
    * `resugar` Print negation, biconditional and verum as `~`, `<->` and `true`.

    Returns the concrete syntax (str).
    """
    return _format(formula, IMP, resugar)

def _format(formula, prec, resugar):
    text, level = _format_level(formula, resugar)
    if level < prec:
        return '({})'.format(text)

    return text

def _format_level(f, resugar):
    if isinstance(f, Falsum):
        return 'false', PRIM
    if isinstance(f, Atom):
        return f.name, PRIM
    if isinstance(f, TruthOf):
        return 'T({})'.format(f.target), PRIM
    if isinstance(f, TruthAt):
        index = '?' if f.level is None else f.level
        return 'T{}({})'.format(index, f.target), PRIM
    if isinstance(f, Box):
        return 'box {}'.format(_format(f.body, UN, resugar)), UN
    if resugar:
        if f == VERUM:
            return 'true', PRIM
        if is_negation(f):
            return '~{}'.format(_format(f.left, UN, resugar)), UN
        if is_iff(f):
            return '{} <-> {}'.format(_format(f.left.left, OR, resugar), _format(f.left.right, IMP, resugar)), IMP
    if isinstance(f, And):
        return '{} & {}'.format(_format(f.left, AND, resugar), _format(f.right, UN, resugar)), AND
    if isinstance(f, Or):
        return '{} | {}'.format(_format(f.left, OR, resugar), _format(f.right, AND, resugar)), OR
    if isinstance(f, Imp):
        return '{} -> {}'.format(_format(f.left, OR, resugar), _format(f.right, IMP, resugar)), IMP
    log.error('Cannot format object of type {}'.format(type(f).__name__))
    raise TypeError('Not a formula: {!r}'.format(f))

def children(formula):
    if isinstance(formula, Box):
        return (formula.body,)
    if isinstance(formula, (And, Or, Imp)):
        return (formula.left, formula.right)

    return ()

def subformulas(formula):
    """@TRUTHBENCH
    All subformulas of a formula, the formula itself included, in pre-order without duplicates.

    Returns the subformulas (list).
    """
    seen = OrderedDict()
    stack = [formula]
    while stack:
        current = stack.pop()
        if current in seen: continue
        seen[current] = None
        ## Reverse so that left children come first
        stack.extend(reversed(children(current)))

    return list(seen)

def node_count(formula):
    return 1 + sum(node_count(child) for child in children(formula))

def truth_occurrences(formula):
    """@TRUTHBENCH
    Truth predicate occurrences of a formula, left to right, duplicates kept.

    Returns the TruthOf and TruthAt nodes (list).
    """
    if isinstance(formula, (TruthOf, TruthAt)):
        return [formula]
    occurrences = []
    for child in children(formula):
        occurrences.extend(truth_occurrences(child))

    return occurrences

def has_box(formula):
    return any(isinstance(f, Box) for f in subformulas(formula))

def prop_atoms(formula):
    """@TRUTHBENCH
    The atomic formulas seen by the intuitionistic core, i.e. without descending into boxes.

    Returns the atomic formulas (set).
    """
    if is_atomic(formula):
        return {formula}
    atoms = set()
    for child in children(formula):
        atoms |= prop_atoms(child)

    return atoms

def head(formula):
    ## Rightmost consequent of a chain of implications
    while isinstance(formula, Imp):
        formula = formula.right

    return formula

def transform(formula, func):
    """@TRUTHBENCH
    Bottom-up structural map. `func` is applied to every node after its children were rebuilt;
    it returns a replacement node or None to keep the rebuilt node.
    """
    if isinstance(formula, Box):
        rebuilt = Box(transform(formula.body, func))
    elif isinstance(formula, (And, Or, Imp)):
        rebuilt = type(formula)(transform(formula.left, func), transform(formula.right, func))
    else:
        rebuilt = formula
    replaced = func(rebuilt)

    return rebuilt if replaced is None else replaced

def erase_indices(formula):
    """@TRUTHBENCH
    Replace every indexed truth predicate T_k(s) by the unindexed T(s).
    """
    return transform(formula, lambda f: TruthOf(f.target) if isinstance(f, TruthAt) else None)

def unfold(formula, definitions):
    """@TRUTHBENCH
    Replace sentence references outside boxes by their definitions, once.

    * `formula` The formula to unfold.
    * `definitions` Map of sentence name to defining formula.
    """
    if isinstance(formula, Atom):
        return definitions.get(formula.name, formula)
    if isinstance(formula, (And, Or, Imp)):
        return type(formula)(unfold(formula.left, definitions), unfold(formula.right, definitions))

    return formula

def closure_of(formulas):
    """@TRUTHBENCH
    Subformula closure of a list of formulas, together with falsum and one negation of every member.

    * `formulas` The input formulas.

    Returns the closure in deterministic order (list).
    """
    members = OrderedDict()
    for formula in list(formulas) + [FALSUM]:
        for sub in subformulas(formula):
            members[sub] = None
    for member in list(members):
        members[neg(member)] = None

    return list(members)
