import unittest
import random
from ..tools.defs import TruthValue, Classification, Comparison
from ..tools.formula import Atom, TruthOf, TruthAt, Box, And, Or, Imp, FALSUM, neg
from ..tools.system import SentenceSystem, parse_system
from ..tools.errors import UnsupportedConnectiveError, MissingAtomError, CapExceededError, DomainMismatchError, UndefinedNameError
from ..semantics.kripke import (Interpretation, StageTrace, sk_eval, jump, least_fixed_point, enumerate_fixed_points, classify, compare,
                                scope, unsound_stages, never_true, format_trace, format_verdict)

T, F, U = TruthValue.TRUE, TruthValue.FALSE, TruthValue.UNDEFINED

def random_body(rng, names, depth):
    if depth <= 1 or rng.random() < 0.25:
        return rng.choice([FALSUM, Atom('p'), Atom('q')] + [TruthOf(name) for name in names]*2)
    kind = rng.choice([And, Or, Imp, neg])
    if kind is neg:
        return neg(random_body(rng, names, depth - 1))

    return kind(random_body(rng, names, depth - 1), random_body(rng, names, depth - 1))

def random_system(rng, size = None):
    ## Between one and six sentence names unless given
    size = size or rng.randint(1, 6)
    names = ['s{}'.format(k) for k in range(size)]
    definitions = {name: random_body(rng, names, 4) for name in names}

    return SentenceSystem(definitions, {'p': True, 'q': False})

def random_interpretation(rng, names):
    return Interpretation({name: rng.choice([T, F, U]) for name in names})

def random_classical_body(rng, depth):
    if depth <= 1 or rng.random() < 0.25:
        return rng.choice([FALSUM, Atom('p'), Atom('q')])
    kind = rng.choice([And, Or, Imp, neg])
    if kind is neg:
        return neg(random_classical_body(rng, depth - 1))

    return kind(random_classical_body(rng, depth - 1), random_classical_body(rng, depth - 1))

def classical_value(formula, base):
    if formula == FALSUM:
        return False
    if isinstance(formula, Atom):
        return base[formula.name]
    if isinstance(formula, And):
        return classical_value(formula.left, base) and classical_value(formula.right, base)
    if isinstance(formula, Or):
        return classical_value(formula.left, base) or classical_value(formula.right, base)

    return (not classical_value(formula.left, base)) or classical_value(formula.right, base)

def refine(rng, interpretation):
    ## Some undefined names become defined
    return Interpretation({name: rng.choice([T, F]) if interpretation[name] is U and rng.random() < 0.5 else interpretation[name]
                           for name in interpretation})


class Test(unittest.TestCase):
    def setUp(self):
        self.liar = parse_system('sentence L := ~T(L)')
        self.truth_teller = parse_system('sentence K := T(K)')
        self.chain = parse_system('atom snow = true\nsentence s1 := T(s2)\nsentence s2 := snow')

    def test_strong_kleene(self):
        i = Interpretation({'u': U, 't': T, 'f': F})
        value = lambda formula: sk_eval(formula, i, {})
        self.assertIs(value(And(TruthOf('u'), TruthOf('f'))), F)
        self.assertIs(value(And(TruthOf('u'), TruthOf('t'))), U)
        self.assertIs(value(Or(TruthOf('u'), TruthOf('t'))), T)
        self.assertIs(value(Or(TruthOf('u'), TruthOf('f'))), U)
        self.assertIs(value(Imp(TruthOf('u'), TruthOf('u'))), U)
        self.assertIs(value(Imp(TruthOf('f'), TruthOf('u'))), T)
        self.assertIs(value(Imp(TruthOf('u'), TruthOf('t'))), T)
        self.assertIs(value(neg(TruthOf('u'))), U)
        self.assertIs(value(FALSUM), F)
        self.assertIs(sk_eval(Atom('p'), i, {'p': True}), T)

    def test_unsupported(self):
        i = Interpretation({'L': U})
        with self.assertRaises(UnsupportedConnectiveError):
            sk_eval(Box(TruthOf('L')), i, {})
        with self.assertRaises(UnsupportedConnectiveError):
            sk_eval(TruthAt(1, 'L'), i, {})
        with self.assertRaises(UnsupportedConnectiveError):
            sk_eval(Atom('L'), i, {})
        with self.assertRaises(MissingAtomError):
            sk_eval(Atom('p'), i, {})
        with self.assertRaises(UnsupportedConnectiveError):
            least_fixed_point(parse_system('sentence L := ~box L'))

    def test_liar(self):
        lfp, trace = least_fixed_point(self.liar)
        self.assertIs(lfp['L'], U)
        self.assertEqual(len(trace), 1)
        fixed_points = enumerate_fixed_points(self.liar)
        self.assertEqual(fixed_points, [Interpretation({'L': U})])
        self.assertIs(classify(self.liar, 'L').kind, Classification.PARADOXICAL)
        self.assertTrue(never_true('L', trace, fixed_points))

    def test_truth_teller(self):
        fixed_points = enumerate_fixed_points(self.truth_teller)
        self.assertEqual([fp['K'] for fp in fixed_points], [F, T, U])
        verdict = classify(self.truth_teller, 'K')
        self.assertIs(verdict.kind, Classification.UNGROUNDED)
        self.assertIs(verdict.witness_true['K'], T)
        self.assertIs(verdict.witness_other['K'], F)
        self.assertEqual(format_verdict('K', verdict), 'K: ungrounded (witnesses: {K=t}, {K=f})')
        _, trace = least_fixed_point(self.truth_teller)
        self.assertFalse(never_true('K', trace, fixed_points))

    def test_chain(self):
        lfp, trace = least_fixed_point(self.chain)
        self.assertLessEqual(len(trace), 3)
        self.assertIs(lfp['s1'], T)
        self.assertIs(classify(self.chain, 's1').kind, Classification.GROUNDED_TRUE)
        self.assertEqual(format_trace(trace), ['stage 0: s1=u s2=u', 'stage 1: s1=u s2=t', 'stage 2: s1=t s2=t'])
        self.assertEqual(format_verdict('s1', classify(self.chain, 's1')), 's1: grounded-true')
        falsity = parse_system('atom snow = false\nsentence s := T(t)\nsentence t := snow')
        self.assertIs(classify(falsity, 's').kind, Classification.GROUNDED_FALSE)

    def test_empty(self):
        lfp, trace = least_fixed_point(SentenceSystem())
        self.assertEqual(len(lfp), 0)
        self.assertEqual(len(trace), 1)
        self.assertEqual(enumerate_fixed_points(SentenceSystem()), [Interpretation({})])

    def test_cap(self):
        with self.assertRaises(CapExceededError):
            enumerate_fixed_points(self.liar, cap = 0)
        self.assertIs(classify(self.liar, 'L', cap = 0).kind, Classification.GROUNDEDNESS_ONLY)
        self.assertIs(classify(parse_system('option cap = 0\nsentence L := ~T(L)'), 'L').kind, Classification.GROUNDEDNESS_ONLY)
        ## Grounded verdicts need no enumeration
        self.assertIs(classify(self.chain, 's1', cap = 0).kind, Classification.GROUNDED_TRUE)
        with self.assertRaises(UndefinedNameError):
            classify(self.liar, 'K')

    def test_compare(self):
        undefined = Interpretation({'a': U, 'b': U})
        partial = Interpretation({'a': T, 'b': U})
        other = Interpretation({'a': U, 'b': F})
        self.assertIs(compare(undefined, partial), Comparison.SUBORDINATE)
        self.assertIs(compare(partial, undefined), Comparison.EXTENDS)
        self.assertIs(compare(partial, partial), Comparison.EQUAL)
        self.assertIs(compare(partial, other), Comparison.INCOMPARABLE)
        with self.assertRaises(DomainMismatchError):
            compare(partial, Interpretation({'a': T}))
        self.assertEqual(scope(partial), {'a'})
        self.assertEqual(partial.extension, {'a'})
        self.assertEqual(other.anti_extension, {'b'})

    def test_monotonicity(self):
        rng = random.Random(10)
        sizes = set()
        for _ in range(1000):
            system = random_system(rng)
            sizes.add(len(system))
            smaller = random_interpretation(rng, system.names)
            larger = refine(rng, smaller)
            self.assertTrue(smaller.leq(larger))
            self.assertTrue(jump(system, smaller).leq(jump(system, larger)))
        self.assertEqual(sizes, set(range(1, 7)))

    def test_fixed_points(self):
        rng = random.Random(11)
        for _ in range(1000):
            system = random_system(rng)
            lfp, trace = least_fixed_point(system)
            fixed_points = enumerate_fixed_points(system)
            ## Leastness, the least fixed point is below every fixed point
            self.assertIn(lfp, fixed_points)
            for fixed_point in fixed_points:
                self.assertEqual(jump(system, fixed_point), fixed_point)
                self.assertTrue(lfp.leq(fixed_point))
            ## Stages grow and are sound
            self.assertEqual(unsound_stages(trace), [])
            for earlier, later in zip(trace, list(trace)[1:]):
                self.assertTrue(earlier.leq(later))
            self.assertLessEqual(len(trace), len(system) + 1)

    def test_classical_agreement(self):
        ## Without truth predicates the least fixed point is the classical valuation, reached at stage 1
        system = parse_system('atom p = true\natom q = false\nsentence a := p & ~q\nsentence b := q | (p -> q)\nsentence c := ~p -> q')
        lfp, trace = least_fixed_point(system)
        self.assertEqual([lfp[name] for name in 'abc'], [T, F, T])
        self.assertEqual(trace[1], lfp)
        rng = random.Random(12)
        for _ in range(500):
            base = {'p': rng.choice([True, False]), 'q': rng.choice([True, False])}
            names = ['s{}'.format(k) for k in range(rng.randint(1, 6))]
            definitions = {name: random_classical_body(rng, 4) for name in names}
            lfp, trace = least_fixed_point(SentenceSystem(definitions, base))
            self.assertEqual(len(trace), 2)
            for name in names:
                self.assertIs(trace[1][name], T if classical_value(definitions[name], base) else F)
                self.assertIs(lfp[name], trace[1][name])

    def test_unsound_stages(self):
        stages = [Interpretation({'a': U}), Interpretation({'a': T}), Interpretation({'a': F})]
        self.assertEqual(unsound_stages(StageTrace(stages)), [1])

if __name__ == '__main__':
    unittest.main()
