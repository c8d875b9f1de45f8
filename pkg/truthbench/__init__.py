name = 'truthbench'
import logging
logging.basicConfig(level = logging.INFO)
from .tools.defs import TruthValue, Classification, Comparison, Reason, Rule, Decision, Consistency, WeakFalsity, Status
from .tools import options
from .tools.formula import Falsum, Atom, TruthOf, TruthAt, Box, And, Or, Imp, FALSUM, VERUM, neg, iff, format_formula
from .tools.parser import parse_formula
from .tools.system import SentenceSystem, parse_system, load_system, format_system, closure
from .semantics.kripke import Interpretation, sk_eval, jump, least_fixed_point, enumerate_fixed_points, classify, compare, unsound_stages, never_true, format_verdict
from .semantics.tarski import LevelMap, LevelViolation, check_levels, infer_levels, apply_levels, tarski_eval
from .calculus.theory import Theory
from .calculus.proof import ProofScript, check_proof, parse_script, format_script
from .calculus.ipc import Sequent, ipc_decide
from .calculus.prover import instantiate_schemas, prove, weak_falsity, check_instances
from .calculus.consistency import erase_box, consistency_check
from .tools.workbench import Command, run, demo

def bar_mode(mode = True):
    options.Main.bar_mode = mode
