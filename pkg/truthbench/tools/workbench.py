import os
import logging
import argparse
from dataclasses import dataclass, field
from typing import Optional
from .defs import Status, Classification, Consistency
from .system import load_system, format_system
from .formula import Atom
from .printer import Printer
from .errors import (TruthbenchError, ParseError, ValidationError, UnsupportedConnectiveError, MissingAtomError, UnindexedOccurrenceError,
                     DomainMismatchError, ReflectionEnabledError, UnknownDemoError, CapExceededError, ResourceBoundError)
from . import options
from ..semantics.kripke import least_fixed_point, enumerate_fixed_points, classify, never_true, format_trace, format_verdict
from ..semantics.tarski import LevelViolation, check_levels, infer_levels, apply_levels, tarski_eval, erase_system_indices, format_levels, format_violation, format_values
from ..calculus.theory import Theory
from ..calculus.proof import check_proof, load_script, format_script
from ..calculus.prover import prove, weak_falsity
from ..calculus.consistency import consistency_check

log = logging.getLogger('truthbench')

## Directory of the bundled scenarios and proof scripts
SCENARIO_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'scenarios')

_ill_formed = (ParseError, ValidationError, UnsupportedConnectiveError, MissingAtomError, UnindexedOccurrenceError,
               DomainMismatchError, ReflectionEnabledError, UnknownDemoError)
_bound_exceeded = (CapExceededError, ResourceBoundError)
## Accepted values of --log
LOG_LEVELS = ['debug', 'info', 'warning', 'error', 'critical']


@dataclass(frozen = True)
class Command(object):
    """@TRUTHBENCH
    A workbench command.

    * `action` One of parse, kripke, classify, tarski, check, prove, consistency, demo.
    * `file` Scenario file, or a bundled scenario name.
    * `name` Sentence name (classify), goal label (prove) or demo name (demo).
    * `script` Proof script file (check).
    * `trace` Print the stages of the least fixed point (kripke).
    * `all_fixpoints` Print every fixed point (kripke).
    * `cap` Enumeration cap (kripke).
    * `infer` Infer the indices of T? occurrences (tarski).
    * `depth` Unfolding depth of the proof search (prove).
    """
    action: str
    file: Optional[str] = None
    name: Optional[str] = None
    script: Optional[str] = None
    trace: bool = False
    all_fixpoints: bool = False
    cap: Optional[int] = None
    infer: bool = False
    depth: Optional[int] = None

@dataclass
class Report(object):
    status: Status = Status.OK
    lines: list = field(default_factory = list)

def resolve_path(file_name):
    """@TRUTHBENCH
    Resolve a file name, falling back to the bundled scenarios if no such file exists.
    """
    if os.path.exists(file_name):
        return file_name
    bundled = os.path.join(SCENARIO_DIR, file_name)
    if os.path.exists(bundled):
        log.debug('Using bundled scenario {}'.format(bundled))
        return bundled

    return file_name

def _load(file_name):
    return load_system(resolve_path(file_name))

def _run_parse(command):
    system = _load(command.file)
    text = format_system(system)

    return Report(Status.OK, text.split('\n') if text else [])

def _run_kripke(command):
    system = _load(command.file)
    lfp, trace = least_fixed_point(system)
    lines = format_trace(trace) if command.trace else []
    lines.append(' '.join(['lfp:'] + lfp.format().split()))
    if command.all_fixpoints:
        for k, fixed_point in enumerate(enumerate_fixed_points(system, command.cap), 1):
            lines.append(' '.join(['fixed point {}:'.format(k)] + fixed_point.format().split()))

    return Report(Status.OK, lines)

def _run_classify(command):
    system = _load(command.file)
    verdict = classify(system, command.name)
    lines = [format_verdict(command.name, verdict)]
    if verdict.kind is Classification.PARADOXICAL:
        _, trace = least_fixed_point(system)
        if never_true(command.name, trace):
            ## Meta-level statement, the object language cannot quantify over stages
            lines.append('{}: never evaluates as true at any stage'.format(command.name))

    return Report(Status.OK, lines)

def _run_tarski(command):
    system = _load(command.file)
    result = infer_levels(system) if command.infer else check_levels(system)
    if isinstance(result, LevelViolation):
        return Report(Status.FAILED, [format_violation(result)])
    if command.infer:
        system = apply_levels(system, result)

    return Report(Status.OK, [format_levels(result), format_values(tarski_eval(system, result))])

def _run_check(command):
    system = _load(command.file)
    script = load_script(resolve_path(command.script))
    goal = None
    if script.label in [label for label, _ in system.goals]:
        goal = system.goal(script.label)
    else:
        log.warning('Proof {} has no matching goal in {}, checking the steps only'.format(script.label, command.file))
    verdict = check_proof(Theory.from_system(system), script, goal)

    return Report(Status.OK if verdict.valid else Status.FAILED, [verdict.format()])

def _run_prove(command):
    system = _load(command.file)
    goal = system.goal(command.name)
    depth = options.Main.get('calculus', 'depth', system, command.depth)
    budget = options.Main.get('calculus', 'budget', system)
    script = prove(Theory.from_system(system), goal, depth, command.name, budget)
    if script is None:
        return Report(Status.FAILED, ['unproved: {} (no proof at depth {}; not a refutation)'.format(command.name, depth)])

    return Report(Status.OK, ['proved: {}'.format(command.name)] + format_script(script))

def _run_consistency(command):
    system = _load(command.file)
    result = consistency_check(Theory.from_system(system), options.Main.get('calculus', 'budget', system))

    return Report(Status.OK if result is Consistency.CONSISTENT else Status.FAILED, [result.value])

## Demo checks, each computes one verdict string for a bundled scenario
def _classified(file_name, name):
    return classify(_load(file_name), name).kind.value

def _fixed_point_count(file_name):
    return str(len(enumerate_fixed_points(_load(file_name))))

def _never_true(file_name, name):
    _, trace = least_fixed_point(_load(file_name))

    return 'never true' if never_true(name, trace) else 'true at some stage'

def _levels(file_name, infer = False):
    system = _load(file_name)
    result = infer_levels(system) if infer else check_levels(system)

    return result.reason.value if isinstance(result, LevelViolation) else 'well-leveled'

def _erased_classified(file_name, name):
    return classify(erase_system_indices(_load(file_name)), name).kind.value

def _proved(file_name, label):
    system = _load(file_name)
    depth = options.Main.get('calculus', 'depth', system)
    script = prove(Theory.from_system(system), system.goal(label), depth, label)

    return 'proved' if script is not None else 'unproved'

def _checked(file_name, script_name):
    system = _load(file_name)
    script = load_script(resolve_path(script_name))

    return check_proof(Theory.from_system(system), script, system.goal(script.label)).format()

def _consistency(file_name):
    return consistency_check(Theory.from_system(_load(file_name))).value

def _weakly_false(file_name, name):
    system = _load(file_name)
    depth = options.Main.get('calculus', 'depth', system)

    return weak_falsity(Theory.from_system(system), Atom(name), depth).value

## Demo name: list of (description, expected, check, arguments)
DEMOS = {
    'liar': [
        ('classify L', 'paradoxical', _classified, ('liar.sys', 'L')),
        ('fixed points', '1', _fixed_point_count, ('liar.sys',)),
        ('levels of the indexed liar', 'index-too-low', _levels, ('tarski-liar.sys',)),
        ],
    'truth-teller': [
        ('classify K', 'ungrounded', _classified, ('truth-teller.sys', 'K')),
        ('fixed points', '3', _fixed_point_count, ('truth-teller.sys',)),
        ],
    'revenge': [
        ('classify R', 'paradoxical', _classified, ('revenge.sys', 'R')),
        ('stages of R', 'never true', _never_true, ('revenge.sys', 'R')),
        ('classify J', 'paradoxical', _classified, ('revenge.sys', 'J')),
        ],
    'tarski-liar': [
        ('levels', 'index-too-low', _levels, ('tarski-liar.sys',)),
        ('inferred levels', 'cyclic-dependency', _levels, ('tarski-open-liar.sys', True)),
        ('classify Lam without indices', 'paradoxical', _erased_classified, ('tarski-liar.sys', 'Lam')),
        ('stratified levels', 'well-leveled', _levels, ('tarski-stratified.sys',)),
        ],
    'provable-liar': [
        ('prove notL', 'proved', _proved, ('provable-liar.sys', 'notL')),
        ('prove notnotboxL', 'proved', _proved, ('provable-liar.sys', 'notnotboxL')),
        ('check notL.proof', 'valid', _checked, ('provable-liar.sys', 'notL.proof')),
        ('check notnotboxL.proof', 'valid', _checked, ('provable-liar.sys', 'notnotboxL.proof')),
        ('prove L', 'unproved', _proved, ('provable-liar.sys', 'L')),
        ('consistency', 'consistent', _consistency, ('provable-liar.sys',)),
        ],
    'box-negation-liar': [
        ('prove notnotL2', 'proved', _proved, ('box-negation-liar.sys', 'notnotL2')),
        ('prove weakL2', 'proved', _proved, ('box-negation-liar.sys', 'weakL2')),
        ('check notnotL2.proof', 'valid', _checked, ('box-negation-liar.sys', 'notnotL2.proof')),
        ('check weakL2.proof', 'valid', _checked, ('box-negation-liar.sys', 'weakL2.proof')),
        ('weak falsity of L2', 'weakly-false', _weakly_false, ('box-negation-liar.sys', 'L2')),
        ('consistency', 'consistent', _consistency, ('box-negation-liar.sys',)),
        ],
    'global-truth': [
        ('consistency', 'inconsistent', _consistency, ('global-truth.sys',)),
        ('prove boxfalse with boxed axiom', 'proved', _proved, ('global-truth-boxed.sys', 'boxfalse')),
        ('consistency with boxed axiom', 'consistent', _consistency, ('global-truth-boxed.sys',)),
        ],
    'proof-paradox': [
        ('prove notnotR', 'proved', _proved, ('proof-paradox.sys', 'notnotR')),
        ('prove weakR', 'proved', _proved, ('proof-paradox.sys', 'weakR')),
        ('check notnotR.proof', 'valid', _checked, ('proof-paradox.sys', 'notnotR.proof')),
        ('weak falsity of R', 'weakly-false', _weakly_false, ('proof-paradox.sys', 'R')),
        ('consistency', 'consistent', _consistency, ('proof-paradox.sys',)),
        ],
    }

def demo(name):
    """@TRUTHBENCH
    Run a bundled scenario end-to-end and compare the computed verdicts with the expected ones.

    * `name` Demo name, one of the keys of `DEMOS`.

    Returns the report, status OK iff every verdict matches (Report).
    """
    if name not in DEMOS:
        log.error('Unknown demo "{}", available demos: {}'.format(name, sorted(DEMOS)))
        raise UnknownDemoError('Unknown demo "{}"'.format(name))
    lines = []
    mismatches = 0
    for description, expected, check, args in DEMOS[name]:
        computed = check(*args)
        if computed != expected:
            mismatches += 1
        lines.append('{}: expected {}, computed {}{}'.format(description, expected, computed, '' if computed == expected else ' MISMATCH'))
    if mismatches:
        lines.append('demo {}: {} of {} checks differ'.format(name, mismatches, len(lines)))
        return Report(Status.FAILED, lines)
    lines.append('demo {}: all {} checks match'.format(name, len(lines)))

    return Report(Status.OK, lines)

def _run_demo(command):
    return demo(command.name)

_handlers = {
    'parse': _run_parse,
    'kripke': _run_kripke,
    'classify': _run_classify,
    'tarski': _run_tarski,
    'check': _run_check,
    'prove': _run_prove,
    'consistency': _run_consistency,
    'demo': _run_demo,
    }

def run(command):
    """@TRUTHBENCH
    Execute a workbench command.

    * `command` The command.

    Returns the report and the exit code, 0 ok, 1 failed, 2 ill-formed input, 3 bound exceeded (tuple).
    """
    try:
        report = _handlers[command.action](command)
    except _ill_formed as e:
        report = Report(Status.ILL_FORMED, ['error: {}'.format(e)])
    except _bound_exceeded as e:
        report = Report(Status.BOUND_EXCEEDED, ['error: {}'.format(e)])
    except RecursionError:
        ## Formulas are walked recursively, their nesting is bounded by the recursion limit
        log.error('Formula nesting exceeds the recursion limit')
        report = Report(Status.BOUND_EXCEEDED, ['error: formula nesting exceeds the recursion limit'])
    except TruthbenchError as e:
        report = Report(Status.FAILED, ['error: {}'.format(e)])

    return report, report.status.value

def _non_negative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError('expected a non-negative integer, got {}'.format(text))

    return value

def get_parser():
    parser = argparse.ArgumentParser(prog = 'truthbench', description = 'Workbench for self-referential sentence systems')
    parser.add_argument('--log', help = 'Logging level', type = str.lower, choices = LOG_LEVELS)
    parser.add_argument('-b', '--bar', dest = 'bar', help = 'Show progress bars', action = 'store_true', default = False)
    subparsers = parser.add_subparsers(dest = 'action', metavar = 'command')
    subparsers.required = True
    sub = subparsers.add_parser('parse', help = 'Parse and validate a scenario, print it canonically')
    sub.add_argument('file')
    sub = subparsers.add_parser('kripke', help = 'Least fixed point of the Kripke construction')
    sub.add_argument('file')
    sub.add_argument('--trace', action = 'store_true', default = False, help = 'Print every stage')
    sub.add_argument('--all-fixpoints', dest = 'all_fixpoints', action = 'store_true', default = False, help = 'Enumerate every fixed point')
    sub.add_argument('--cap', type = _non_negative, help = 'Maximum number of sentence names to enumerate')
    sub = subparsers.add_parser('classify', help = 'Classify a sentence')
    sub.add_argument('file')
    sub.add_argument('name')
    sub = subparsers.add_parser('tarski', help = 'Check the hierarchy levels and evaluate')
    sub.add_argument('file')
    sub.add_argument('--infer', action = 'store_true', default = False, help = 'Infer the indices of T? occurrences')
    sub = subparsers.add_parser('check', help = 'Check a proof script')
    sub.add_argument('file')
    sub.add_argument('script')
    sub = subparsers.add_parser('prove', help = 'Search a proof of a goal')
    sub.add_argument('file')
    sub.add_argument('name', metavar = 'goal')
    sub.add_argument('--depth', type = _non_negative, help = 'Number of definition unfoldings of the goal')
    sub = subparsers.add_parser('consistency', help = 'Check consistency of the box-erased theory')
    sub.add_argument('file')
    sub = subparsers.add_parser('demo', help = 'Run a bundled demo, one of {}'.format(', '.join(sorted(DEMOS))))
    sub.add_argument('name')

    return parser

def parse_command(argv = None):
    """@TRUTHBENCH
    Parse command line arguments into a workbench command.

    Returns the command and the parsed arguments (tuple).
    """
    args = get_parser().parse_args(argv)
    fields = {key: val for key, val in vars(args).items() if key in Command.__dataclass_fields__}

    return Command(**fields), args

def main(argv = None):
    command, args = parse_command(argv)
    if args.log:
        log.setLevel(getattr(logging, args.log.upper()))
    if args.bar:
        options.Main.bar_mode = True
    report, code = run(command)
    Printer(verbosity = options.Main.verbosity, bar_mode = options.Main.bar_mode).print_report(report)

    return code
