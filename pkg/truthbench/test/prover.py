import os
import random
import unittest
from ..tools.defs import Rule, WeakFalsity, Decision
from ..tools.formula import Atom, TruthAt, Box, And, Or, Imp, FALSUM, VERUM, neg
from ..tools.parser import parse_formula
from ..tools.system import load_system, closure
from ..tools.errors import ReflectionEnabledError
from ..tools.workbench import SCENARIO_DIR
from ..calculus.theory import Theory
from ..calculus.proof import check_proof
from ..calculus.ipc import Sequent, ipc_decide
from ..calculus.prover import prove, weak_falsity, check_instances, instantiate_schemas, schema_instances, relevant_hypotheses, unfoldings
from .ipc import CORPUS

def random_modal_formula(rng, depth):
    if depth <= 1:
        return rng.choice([FALSUM, Atom('a'), Atom('b')])
    kind = rng.choice([Box, And, Or, Imp, neg])
    if kind in (Box, neg):
        return kind(random_modal_formula(rng, depth - 1))

    return kind(random_modal_formula(rng, depth - 1), random_modal_formula(rng, depth - 1))

def scenario(file_name):
    system = load_system(os.path.join(SCENARIO_DIR, file_name))

    return Theory.from_system(system), system


class Test(unittest.TestCase):
    def assertProves(self, file_name, label, depth = 2):
        theory, system = scenario(file_name)
        script = prove(theory, system.goal(label), depth, label)
        self.assertIsNotNone(script, label)
        self.assertEqual(script.label, label)
        self.assertEqual(script.conclusion, system.goal(label))
        self.assertTrue(check_proof(theory, script, system.goal(label)).valid)

        return script

    def test_provable_liar(self):
        for label in ['notL', 'notnotboxL']:
            self.assertProves('provable-liar.sys', label)

    def test_box_negation_liar(self):
        for label in ['notnotL2', 'weakL2']:
            self.assertProves('box-negation-liar.sys', label)
        theory, _ = scenario('box-negation-liar.sys')
        self.assertIs(weak_falsity(theory, Atom('L2'), 2), WeakFalsity.WEAKLY_FALSE)

    def test_global_truth(self):
        script = self.assertProves('global-truth-boxed.sys', 'boxfalse')
        self.assertIn(Rule.K_DIST, [step.rule for step in script.steps])

    def test_proof_paradox(self):
        for label in ['notnotR', 'weakR']:
            self.assertProves('proof-paradox.sys', label)
        theory, _ = scenario('proof-paradox.sys')
        self.assertIs(weak_falsity(theory, Atom('R'), 2), WeakFalsity.WEAKLY_FALSE)

    def test_no_collapse(self):
        theory, _ = scenario('combined.sys')
        self.assertIsNone(prove(theory, FALSUM, 8))
        self.assertIsNone(prove(Theory(), parse_formula('box a -> a'), 3))
        theory, system = scenario('provable-liar.sys')
        self.assertIsNone(prove(theory, system.goal('L'), 3))
        ## The liar is refutable, hence weakly false
        self.assertIs(weak_falsity(theory, Atom('L'), 2), WeakFalsity.WEAKLY_FALSE)
        self.assertIs(weak_falsity(Theory(), Atom('a'), 2), WeakFalsity.UNKNOWN)

    def test_conservativity(self):
        ## Over box-free formulas the prover is intuitionistic logic
        for text, provable in CORPUS:
            script = prove(Theory(), parse_formula(text), 1, 'corpus')
            self.assertEqual(script is not None, provable, text)
            if script is not None:
                self.assertTrue(check_proof(Theory(), script, parse_formula(text)).valid, text)

    def test_emitted_rules(self):
        ## Left rules of the search become natural deduction steps
        hypotheses = ['a & b -> c', '(a | b) -> c', '(a -> b) -> c', 'a | b']
        theory = Theory(axioms = [parse_formula(h) for h in hypotheses])
        for text in ['b -> a -> c', 'b -> c', 'c', 'b | a']:
            goal = parse_formula(text)
            script = prove(theory, goal, 1, 'emitted')
            self.assertIsNotNone(script, text)
            self.assertTrue(check_proof(theory, script, goal).valid, text)

    def test_coreflection_totality(self):
        theory, system = scenario('provable-liar.sys')
        goal = system.goal('notL')
        for member in closure(theory, unfoldings(goal, theory.definitions, 2)):
            self.assertIsNotNone(prove(theory, Imp(member, Box(member)), 0), str(member))

    def test_coreflection_corpus(self):
        ## Every formula of a random corpus is provably co-reflected without axioms
        rng = random.Random(20)
        for _ in range(200):
            formula = random_modal_formula(rng, rng.randint(1, 4))
            goal = Imp(formula, Box(formula))
            script = prove(Theory(), goal, 1, 'coreflection')
            self.assertIsNotNone(script, str(formula))
            self.assertTrue(check_proof(Theory(), script, goal).valid, str(formula))

    def test_weak_falsity_of_truth(self):
        ## With global truth asserted provable even the true sentence entails that falsum is provable
        theory, _ = scenario('global-truth-boxed.sys')
        self.assertIs(weak_falsity(theory, VERUM, 2), WeakFalsity.WEAKLY_FALSE)
        self.assertIs(weak_falsity(Theory(), VERUM, 2), WeakFalsity.UNKNOWN)

    def test_schemas(self):
        theory, system = scenario('box-negation-liar.sys')
        instances = instantiate_schemas(theory, system.goal('weakL2'))
        self.assertIn(parse_formula('box (L2 -> false) -> box L2 -> box false'), instances)
        self.assertIn(parse_formula('L2 -> box L2'), instances)
        self.assertIn(parse_formula('L2 <-> box ~L2'), instances)
        ## Every closure member is co-reflected
        for member in closure(theory, [system.goal('weakL2')]):
            self.assertIn(Imp(member, Box(member)), instances)
        ## Reflexive implications are distributed too
        theory = Theory(axioms = [parse_formula('box (a -> a)'), parse_formula('box a')])
        instances = instantiate_schemas(theory, Atom('a'))
        self.assertIn(parse_formula('box (a -> a) -> box a -> box a'), instances)

    def test_relevance(self):
        theory, system = scenario('provable-liar.sys')
        goal = system.goal('notL')
        hypotheses = schema_instances(theory, goal, 2)
        relevant = relevant_hypotheses(hypotheses, goal)
        self.assertLess(len(relevant), len(hypotheses))
        self.assertIn(parse_formula('L -> box L'), relevant)
        self.assertEqual(relevant[parse_formula('L -> ~box L')], (Rule.DEF_L, 'L'))
        ## Pruning keeps derivability
        for label, formula in system.goals:
            full = ipc_decide(Sequent(frozenset(hypotheses), formula))
            pruned = ipc_decide(Sequent(frozenset(relevant_hypotheses(hypotheses, formula)), formula))
            self.assertIs(full, pruned, label)
        self.assertIs(ipc_decide(Sequent(frozenset(relevant), goal)), Decision.PROVABLE)

    def test_instances(self):
        theory = Theory({'s': Atom('p')}, [Imp(TruthAt(1, 's'), Atom('s')), Imp(Atom('s'), TruthAt(2, 's'))])
        results = check_instances(theory, [(TruthAt(1, 's'), TruthAt(2, 's')), (TruthAt(2, 's'), TruthAt(1, 's'))])
        self.assertEqual([instance for instance, _ in results], [parse_formula('T1(s) -> T2(s)'), parse_formula('T2(s) -> T1(s)')])
        self.assertIsNotNone(results[0][1])
        self.assertIsNone(results[1][1])

    def test_reflection(self):
        theory, system = scenario('provable-liar.sys')
        with self.assertRaises(ReflectionEnabledError):
            prove(Theory(theory.definitions, theory.axioms, reflection = True), system.goal('notL'))

if __name__ == '__main__':
    unittest.main()
