import logging
from collections import OrderedDict
from ..tools.defs import Rule, WeakFalsity
from ..tools.formula import Atom, Box, And, Or, Imp, FALSUM, unfold, head, prop_atoms, is_atomic, format_formula
from ..tools.system import closure
from ..tools.errors import ReflectionEnabledError, TruthbenchError
from ..tools import options
from .ipc import G4ip, Sequent
from .proof import ProofScript, check_proof

log = logging.getLogger('truthbench')


def unfoldings(formula, definitions, depth):
    """@TRUTHBENCH
    The formula and its successive unfoldings, up to `depth` of them.
    """
    result = [formula]
    for _ in range(depth):
        unfolded = unfold(result[-1], definitions)
        if unfolded == result[-1]: break
        result.append(unfolded)

    return result

def schema_instances(theory, goal, depth = 1):
    """@TRUTHBENCH
    Hypotheses available to the prover, each with the rule that justifies it.
    Theory axioms, both directions of every definition, co-reflection F -> box F for every closure member F,
    and distribution instances box (F -> G) -> box F -> box G for the implications F -> G of the closure
    whose boxed form or boxed antecedent can occur.

    * `theory` The theory.
    * `goal` The goal formula, added to the closure with its unfoldings.
    * `depth` Number of definition unfoldings of the goal.

    Returns the map of hypothesis to (rule, sentence name) (OrderedDict).
    """
    hypotheses = OrderedDict()
    for axiom in theory.axioms:
        hypotheses.setdefault(axiom, (Rule.PREMISE, None))
    for name in theory.definitions:
        hypotheses.setdefault(theory.def_left(name), (Rule.DEF_L, name))
        hypotheses.setdefault(theory.def_right(name), (Rule.DEF_R, name))
    members = closure(theory, unfoldings(goal, theory.definitions, depth))
    for member in members:
        hypotheses.setdefault(Imp(member, Box(member)), (Rule.COREFLECTION, None))
    ## Bodies that can occur boxed, grown by the consequents of admitted distribution instances
    boxed = set(member.body for member in members if isinstance(member, Box))
    implications = [member for member in members if isinstance(member, Imp)]
    admitted = set()
    changed = True
    while changed:
        changed = False
        for implication in implications:
            if implication in admitted: continue
            if implication not in boxed and implication.left not in boxed: continue
            admitted.add(implication)
            boxed.add(implication.right)
            changed = True
    for implication in implications:
        if implication not in admitted: continue
        instance = Imp(Box(implication), Imp(Box(implication.left), Box(implication.right)))
        hypotheses.setdefault(instance, (Rule.K_DIST, None))

    return hypotheses

def instantiate_schemas(theory, goal, depth = 1):
    """@TRUTHBENCH
    The schema instances for a goal: co-reflection and distribution instances, the definitional
    biconditionals and the theory axioms.

    Returns the instances (frozenset).
    """
    instances = set(theory.biconditionals()) | set(theory.axioms)
    for formula, (rule, _) in schema_instances(theory, goal, depth).items():
        if rule in (Rule.COREFLECTION, Rule.K_DIST):
            instances.add(formula)

    return frozenset(instances)

def relevant_hypotheses(hypotheses, goal):
    """@TRUTHBENCH
    Drop schema instances whose head atom occurs nowhere else. Replacing such atoms by true turns the
    dropped instances into tautologies and leaves everything else unchanged, so derivability is preserved.

    * `hypotheses` Map of hypothesis to (rule, sentence name), see `schema_instances`.
    * `goal` The goal formula.

    Returns the kept hypotheses (OrderedDict).
    """
    needed = set(prop_atoms(goal))
    live = OrderedDict()
    pending = []
    for formula, justification in hypotheses.items():
        if justification[0] in (Rule.COREFLECTION, Rule.K_DIST):
            pending.append(formula)
        else:
            live[formula] = justification
            needed |= prop_atoms(formula)
    changed = True
    while changed:
        changed = False
        for formula in pending:
            if formula in live: continue
            consequent = head(formula)
            if is_atomic(consequent) and consequent not in needed: continue
            live[formula] = hypotheses[formula]
            needed |= prop_atoms(formula)
            changed = True
    log.debug('Kept {} of {} hypotheses'.format(len(live), len(hypotheses)))

    ## Keep the original order
    return OrderedDict((formula, hypotheses[formula]) for formula in hypotheses if formula in live)

class ScriptBuilder(object):
    """@TRUTHBENCH
    Turns a G4ip derivation into a natural deduction proof script. Hypotheses are cited lazily,
    in the innermost scope that uses them.

    * `hypotheses` Map of hypothesis to (rule, sentence name).
    * `label` Label of the resulting script.
    """
    def __init__(self, hypotheses, label):
        self._hypotheses = hypotheses
        self.script = ProofScript(label)

    def build(self, derivation, goal):
        self.script.goal = goal
        conclusion = self._emit(derivation, {}, 0)
        if conclusion != len(self.script.steps):
            ## Repeat an earlier step as the conclusion
            both = self.script.add(And(goal, goal), Rule.AND_INTRO, [conclusion, conclusion])
            self.script.add(goal, Rule.AND_ELIM_L, [both])

        return self.script

    def _lookup(self, formula, context, depth):
        if formula in context:
            return context[formula]
        if formula not in self._hypotheses:
            log.error('No step proves {}'.format(format_formula(formula)))
            raise TruthbenchError('Cannot cite {} in proof {}'.format(format_formula(formula), self.script.label))
        rule, name = self._hypotheses[formula]
        index = self.script.add(formula, rule, [], depth, name)
        context[formula] = index

        return index

    def _emit(self, node, context, depth):
        add = self.script.add
        rule = node.rule
        goal = node.sequent.goal
        h = node.principal
        if rule == 'ax':
            return self._lookup(goal, context, depth)
        if rule == 'efq':
            falsum = self._lookup(FALSUM, context, depth)
            return falsum if goal == FALSUM else add(goal, Rule.EFQ, [falsum], depth)
        if rule == 'drop':
            return self._emit(node.children[0], context, depth)
        if rule == 'and-l':
            both = self._lookup(h, context, depth)
            context[h.left] = add(h.left, Rule.AND_ELIM_L, [both], depth)
            context[h.right] = add(h.right, Rule.AND_ELIM_R, [both], depth)
            return self._emit(node.children[0], context, depth)
        if rule == 'or-l':
            either = self._lookup(h, context, depth)
            cases = []
            for part, child in zip((h.left, h.right), node.children):
                inner = dict(context)
                assumption = add(part, Rule.ASSUME, [], depth + 1)
                inner[part] = assumption
                cases += [assumption, self._emit(child, inner, depth + 1)]
            return add(goal, Rule.OR_ELIM, [either] + cases, depth)
        if rule == 'mp':
            implication = self._lookup(h, context, depth)
            antecedent = self._lookup(h.left, context, depth)
            context[h.right] = add(h.right, Rule.IMP_ELIM, [implication, antecedent], depth)
            return self._emit(node.children[0], context, depth)
        if rule == 'and-imp':
            ## (A & B) -> C gives A -> B -> C
            implication = self._lookup(h, context, depth)
            a = add(h.left.left, Rule.ASSUME, [], depth + 1)
            b = add(h.left.right, Rule.ASSUME, [], depth + 2)
            both = add(h.left, Rule.AND_INTRO, [a, b], depth + 2)
            c = add(h.right, Rule.IMP_ELIM, [implication, both], depth + 2)
            bc = add(Imp(h.left.right, h.right), Rule.IMP_INTRO, [b, c], depth + 1)
            curried = Imp(h.left.left, Imp(h.left.right, h.right))
            context[curried] = add(curried, Rule.IMP_INTRO, [a, bc], depth)
            return self._emit(node.children[0], context, depth)
        if rule == 'or-imp':
            ## (A | B) -> C gives A -> C and B -> C
            implication = self._lookup(h, context, depth)
            for part, intro in ((h.left.left, Rule.OR_INTRO_L), (h.left.right, Rule.OR_INTRO_R)):
                assumption = add(part, Rule.ASSUME, [], depth + 1)
                either = add(h.left, intro, [assumption], depth + 1)
                c = add(h.right, Rule.IMP_ELIM, [implication, either], depth + 1)
                context[Imp(part, h.right)] = add(Imp(part, h.right), Rule.IMP_INTRO, [assumption, c], depth)
            return self._emit(node.children[0], context, depth)
        if rule == 'imp-imp':
            ## (A -> B) -> C gives B -> C, then C once A -> B is derived
            implication = self._lookup(h, context, depth)
            a, b, c = h.left.left, h.left.right, h.right
            b_step = add(b, Rule.ASSUME, [], depth + 1)
            a_step = add(a, Rule.ASSUME, [], depth + 2)
            ab = add(h.left, Rule.IMP_INTRO, [a_step, b_step], depth + 1)
            c_step = add(c, Rule.IMP_ELIM, [implication, ab], depth + 1)
            context[Imp(b, c)] = add(Imp(b, c), Rule.IMP_INTRO, [b_step, c_step], depth)
            derived = self._emit(node.children[0], context, depth)
            context[c] = add(c, Rule.IMP_ELIM, [implication, derived], depth)
            return self._emit(node.children[1], context, depth)
        if rule == 'imp-r':
            inner = dict(context)
            assumption = add(goal.left, Rule.ASSUME, [], depth + 1)
            inner[goal.left] = assumption
            result = self._emit(node.children[0], inner, depth + 1)
            return add(goal, Rule.IMP_INTRO, [assumption, result], depth)
        if rule == 'and-r':
            left = self._emit(node.children[0], context, depth)
            right = self._emit(node.children[1], context, depth)
            return add(goal, Rule.AND_INTRO, [left, right], depth)
        if rule in ('or-r1', 'or-r2'):
            part = self._emit(node.children[0], context, depth)
            return add(goal, Rule.OR_INTRO_L if rule == 'or-r1' else Rule.OR_INTRO_R, [part], depth)
        log.error('Unknown derivation rule "{}"'.format(rule))
        raise TruthbenchError('Unknown derivation rule "{}"'.format(rule))

def _require_reflection_off(theory, operation):
    if theory.reflection:
        log.error('{} is not available with the reflection rule enabled'.format(operation))
        raise ReflectionEnabledError('{} requires the reflection rule to be off'.format(operation))

def prove(theory, goal, depth = None, label = 'goal', budget = None):
    """@TRUTHBENCH
    Bounded proof search. Decides whether the schema instances for the goal derive it intuitionistically,
    boxed formulas being atoms, and emits a checkable proof script. A failure is not a refutation.

    * `theory` The theory, with the reflection rule off.
    * `goal` The goal formula.
    * `depth` Number of definition unfoldings of the goal, defaults to the "calculus.depth" option.
    * `label` Label of the emitted script.
    * `budget` Node budget of the search.

    Returns the proof (ProofScript), or None if no proof was found.
    """
    _require_reflection_off(theory, 'Proof search')
    depth = options.Main.get('calculus', 'depth', override = depth)
    hypotheses = relevant_hypotheses(schema_instances(theory, goal, depth), goal)
    derivation = G4ip(budget).prove(Sequent(frozenset(hypotheses), goal))
    if derivation is None:
        log.debug('No proof of {} at depth {}'.format(format_formula(goal), depth))
        return None
    script = ScriptBuilder(hypotheses, label).build(derivation, goal)
    verdict = check_proof(theory, script)
    if not verdict.valid:
        log.error('Emitted proof {} does not check: {}'.format(label, verdict.format()))
        raise TruthbenchError('Emitted proof {} does not check: {}'.format(label, verdict.format()))

    return script

def weak_falsity(theory, formula, depth = None, budget = None):
    """@TRUTHBENCH
    A formula is weakly false if it entails that falsum is provable, i.e. `formula -> box false` is provable.

    Returns WEAKLY_FALSE or UNKNOWN (WeakFalsity).
    """
    script = prove(theory, Imp(formula, Box(FALSUM)), depth, 'weak-falsity', budget)

    return WeakFalsity.WEAKLY_FALSE if script is not None else WeakFalsity.UNKNOWN

def check_instances(theory, pairs, depth = None, budget = None):
    """@TRUTHBENCH
    Prove finitely many instances `antecedent -> consequent` of a schema, e.g. T1(A) -> T2(A) for a
    subordination claim or T1(A) -> A for soundness of a partial truth predicate. Universal claims stay meta-level.

    * `theory` The theory.
    * `pairs` List of (antecedent, consequent) formulas.

    Returns the list of (instance, proof or None) pairs (list).
    """
    results = []
    for antecedent, consequent in pairs:
        instance = Imp(antecedent, consequent)
        results.append((instance, prove(theory, instance, depth, 'instance', budget)))

    return results
