import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple
from ..tools.defs import Rule
from ..tools.formula import Formula, Box, And, Or, Imp, FALSUM, format_formula
from ..tools.parser import parse_formula, parse_step_fields, parse_header
from ..tools.errors import ParseError, ValidationError

log = logging.getLogger('truthbench')

## Number of premises per rule
_arity = {
    Rule.PREMISE: 0, Rule.ASSUME: 0, Rule.DEF_L: 0, Rule.DEF_R: 0, Rule.COREFLECTION: 0, Rule.K_DIST: 0,
    Rule.IMP_INTRO: 2, Rule.IMP_ELIM: 2, Rule.AND_INTRO: 2,
    Rule.AND_ELIM_L: 1, Rule.AND_ELIM_R: 1, Rule.OR_INTRO_L: 1, Rule.OR_INTRO_R: 1, Rule.EFQ: 1, Rule.REFLECTION: 1,
    Rule.OR_ELIM: 5,
    }


@dataclass(frozen = True)
class Step(object):
    """@TRUTHBENCH
    One line of a proof script.

    * `index` Step number, counting from 1.
    * `formula` The formula established by the step.
    * `rule` Its justification.
    * `premises` Step numbers the justification refers to.
    * `depth` Number of open assumptions, the step's own assumption included.
    * `name` Sentence name of the def-l and def-r rules.
    """
    index: int
    formula: Formula
    rule: Rule
    premises: Tuple[int, ...] = ()
    depth: int = 0
    name: Optional[str] = None

@dataclass
class ProofScript(object):
    """@TRUTHBENCH
    A Fitch-style proof: a labelled list of steps. The last top-level step is the conclusion.
    """
    label: str
    steps: list = field(default_factory = list)
    goal: Optional[Formula] = None

    @property
    def conclusion(self):
        return self.steps[-1].formula if self.steps else None

    def add(self, formula, rule, premises = (), depth = 0, name = None):
        index = len(self.steps) + 1
        self.steps.append(Step(index, formula, rule, tuple(premises), depth, name))

        return index

@dataclass(frozen = True)
class ProofVerdict(object):
    valid: bool
    step: Optional[int] = None
    reason: Optional[str] = None

    def format(self):
        if self.valid:
            return 'valid'

        return 'invalid: step {}: {}'.format(self.step, self.reason)

VALID = ProofVerdict(True)

def _check_rule(theory, step, path, paths, formulas):
    ## Returns the reason the step is wrong, or None
    rule = step.rule
    f = step.formula
    premises = step.premises
    if len(premises) != _arity[rule]:
        return '{} expects {} premises'.format(rule.value, _arity[rule])
    for premise in premises:
        if premise not in paths or premise >= step.index:
            return 'premise {} does not precede the step'.format(premise)
    ## Subproof premises of imp-intro and or-elim are checked separately
    subproof_slots = {Rule.IMP_INTRO: (0, 1), Rule.OR_ELIM: (1, 2, 3, 4)}.get(rule, ())
    for slot, premise in enumerate(premises):
        if slot in subproof_slots: continue
        if paths[premise] != path[:len(paths[premise])]:
            return 'premise {} is not visible'.format(premise)
    p = [formulas[premise] for premise in premises]
    if rule is Rule.PREMISE:
        if f not in theory.axioms:
            return 'not an axiom of the theory'
    elif rule is Rule.ASSUME:
        pass
    elif rule in (Rule.DEF_L, Rule.DEF_R):
        if step.name not in theory.definitions:
            return 'no definition for "{}"'.format(step.name)
        expected = theory.def_left(step.name) if rule is Rule.DEF_L else theory.def_right(step.name)
        if f != expected:
            return '{} {} yields {}'.format(rule.value, step.name, format_formula(expected))
    elif rule is Rule.COREFLECTION:
        if not (isinstance(f, Imp) and f.right == Box(f.left)):
            return 'not of the form A -> box A'
    elif rule is Rule.K_DIST:
        if not (isinstance(f, Imp) and isinstance(f.left, Box) and isinstance(f.left.body, Imp)
                and f.right == Imp(Box(f.left.body.left), Box(f.left.body.right))):
            return 'not of the form box (A -> B) -> box A -> box B'
    elif rule is Rule.IMP_ELIM:
        if p[0] != Imp(p[1], f):
            return 'premises do not match A -> B and A'
    elif rule is Rule.IMP_INTRO:
        reason = _check_subproof(premises[0], premises[1], path, paths, step.rule)
        if reason:
            return reason
        if f != Imp(p[0], p[1]):
            return 'conclusion is not the implication of the subproof'
    elif rule is Rule.AND_INTRO:
        if f != And(p[0], p[1]):
            return 'conclusion is not the conjunction of the premises'
    elif rule is Rule.AND_ELIM_L:
        if not (isinstance(p[0], And) and p[0].left == f):
            return 'premise is not a conjunction with this left part'
    elif rule is Rule.AND_ELIM_R:
        if not (isinstance(p[0], And) and p[0].right == f):
            return 'premise is not a conjunction with this right part'
    elif rule is Rule.OR_INTRO_L:
        if not (isinstance(f, Or) and f.left == p[0]):
            return 'conclusion is not a disjunction with the premise on the left'
    elif rule is Rule.OR_INTRO_R:
        if not (isinstance(f, Or) and f.right == p[0]):
            return 'conclusion is not a disjunction with the premise on the right'
    elif rule is Rule.OR_ELIM:
        if not isinstance(p[0], Or):
            return 'premise {} is not a disjunction'.format(premises[0])
        for assumption, result, case in ((premises[1], premises[2], p[0].left), (premises[3], premises[4], p[0].right)):
            reason = _check_subproof(assumption, result, path, paths, step.rule)
            if reason:
                return reason
            if formulas[assumption] != case or formulas[result] != f:
                return 'cases do not match the disjunction and the conclusion'
    elif rule is Rule.EFQ:
        if p[0] != FALSUM:
            return 'premise is not false'
    elif rule is Rule.REFLECTION:
        if not theory.reflection:
            return 'reflection disabled'
        if step.depth != 0 or paths[premises[0]] != ():
            return 'reflection applies to top-level theorems only'
        if p[0] != Box(f):
            return 'premise is not box of the conclusion'

    return None

def _check_subproof(assumption, result, path, paths, rule):
    ## The subproof opened by `assumption` must sit directly in the current scope
    if paths[assumption] != path + (assumption,):
        return 'step {} does not open a closed subproof of the current scope'.format(assumption)
    inner = paths[assumption]
    if paths[result] != inner[:len(paths[result])]:
        return 'step {} is not visible inside the subproof of step {}'.format(result, assumption)

    return None

def check_proof(theory, script, goal = None):
    """@TRUTHBENCH
    Check a proof script step by step.

    * `theory` The theory whose axioms and definitions the script may cite.
    * `script` The proof script.
    * `goal` Formula the conclusion has to match, defaults to the script's own goal.

    Returns the verdict with the first offending step (ProofVerdict).
    """
    steps = script.steps
    if not steps:
        return ProofVerdict(False, 0, 'empty proof')
    ## Open assumptions and the scope path of every step
    stack = []
    paths = {}
    formulas = {}
    for position, step in enumerate(steps, 1):
        if step.index != position:
            return ProofVerdict(False, step.index, 'expected step number {}'.format(position))
        if step.rule is Rule.ASSUME:
            if not 1 <= step.depth <= len(stack) + 1:
                return ProofVerdict(False, step.index, 'bad assumption nesting')
            stack = stack[:step.depth - 1] + [step.index]
        else:
            if step.depth > len(stack):
                return ProofVerdict(False, step.index, 'bad nesting')
            stack = stack[:step.depth]
        path = tuple(stack)
        reason = _check_rule(theory, step, path, paths, formulas)
        if reason:
            log.debug('Step {} of proof {} is invalid: {}'.format(step.index, script.label, reason))
            return ProofVerdict(False, step.index, reason)
        paths[step.index] = path
        formulas[step.index] = step.formula
    last = steps[-1]
    if last.depth != 0:
        return ProofVerdict(False, last.index, 'last step is inside a subproof')
    goal = goal if goal is not None else script.goal
    if goal is not None and last.formula != goal:
        return ProofVerdict(False, last.index, 'conclusion is not the goal {}'.format(format_formula(goal)))

    return VALID

def format_step(step):
    stars = '*' * step.depth + ' ' if step.depth else ''
    justification = step.rule.value
    if step.name is not None:
        justification += ' {}'.format(step.name)
    if step.premises:
        justification += ' {}'.format(', '.join(str(p) for p in step.premises))

    return '{}{} | {} | {}'.format(stars, step.index, format_formula(step.formula), justification)

def format_script(script):
    """@TRUTHBENCH
    Text form of a proof script: a "proof LABEL" header and one step per line.

    Returns the lines (list).
    """
    return ['proof {}'.format(script.label)] + [format_step(step) for step in script.steps]

def parse_script(text):
    """@TRUTHBENCH
    Parse the text form of a proof script. Comments start with "#".

    * `text` Script text, see `format_script`.

    Returns the script (ProofScript).
    """
    script = None
    for lineno, raw_line in enumerate(text.splitlines(), 1):
        line = raw_line.split('#', 1)[0]
        if not line.strip(): continue
        if script is None:
            script = ProofScript(parse_header(line, lineno))
            continue
        ## Formulas may contain "|", the justification never does
        if line.count('|') < 2:
            log.error('Line {}: expected "<n> | <formula> | <justification>"'.format(lineno))
            raise ParseError(lineno, 1, 'Expected "<n> | <formula> | <justification>"')
        number_text, rest = line.split('|', 1)
        formula_text, justification_text = rest.rsplit('|', 1)
        depth, index, rule, name, premises = parse_step_fields(number_text, justification_text, lineno)
        if rule in (Rule.DEF_L, Rule.DEF_R) and name is None:
            log.error('Line {}: {} needs a sentence name'.format(lineno, rule.value))
            raise ParseError(lineno, len(number_text) + len(formula_text) + 3, 'Expected sentence name after {}'.format(rule.value))
        formula = parse_formula(formula_text, lineno)
        script.steps.append(Step(index, formula, rule, tuple(premises), depth, name))
    if script is None:
        log.error('Proof script has no "proof" header')
        raise ParseError(1, 1, 'Expected "proof LABEL"')

    return script

def load_script(file_name):
    try:
        with open(file_name, 'r', encoding = 'utf-8') as in_file:
            text = in_file.read()
    except (IOError, OSError, UnicodeDecodeError) as e:
        log.error('Cannot read proof script {}: {}'.format(file_name, e))
        raise ValidationError('Cannot read {}: {}'.format(file_name, e))

    return parse_script(text)
