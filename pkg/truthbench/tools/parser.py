import logging
import pyparsing as pp
from .formula import Atom, TruthOf, TruthAt, Box, And, Or, Imp, FALSUM, VERUM, neg, iff
from .errors import ParseError
from .defs import Rule

log = logging.getLogger('truthbench')

pp.ParserElement.enablePackrat()


def _truth(tokens):
    marker, target = tokens
    if marker == 'T':
        return TruthOf(target)
    if marker == 'T?':
        return TruthAt(None, target)

    return TruthAt(int(marker[1:]), target)

def _fold(cls):
    def action(tokens):
        result = tokens[0]
        for token in tokens[1:]:
            result = cls(result, token)
        return result

    return action

def _implication(tokens):
    if len(tokens) == 1:
        return tokens[0]
    left, arrow, right = tokens
    if arrow == '<->':
        return iff(left, right)

    return Imp(left, right)

## Formula grammar
LPAR, RPAR = map(pp.Suppress, '()')
RESERVED = pp.Keyword('box') | pp.Keyword('true') | pp.Keyword('false')
NAME = ~RESERVED + pp.Regex(r'[A-Za-z][A-Za-z0-9_]*')
NAME.setName('name')
TRUTH = pp.Regex(r'T([1-9][0-9]*|\?)?(?=\s*\()') + LPAR + NAME + RPAR
TRUTH.setParseAction(_truth)
ATOM = (~RESERVED + pp.Regex(r'[A-Za-z][A-Za-z0-9_]*')).setParseAction(lambda t: Atom(t[0]))
FORMULA = pp.Forward()
UNARY = pp.Forward()
PRIM = (pp.Keyword('false').setParseAction(lambda: FALSUM)
        | pp.Keyword('true').setParseAction(lambda: VERUM)
        | TRUTH
        | ATOM
        | LPAR + FORMULA + RPAR)
UNARY <<= ((pp.Suppress('~') + UNARY).setParseAction(lambda t: neg(t[0]))
           | (pp.Suppress(pp.Keyword('box')) + UNARY).setParseAction(lambda t: Box(t[0]))
           | PRIM)
CONJUNCTION = (UNARY + pp.ZeroOrMore(pp.Suppress('&') + UNARY)).setParseAction(_fold(And))
DISJUNCTION = (CONJUNCTION + pp.ZeroOrMore(pp.Suppress('|') + CONJUNCTION)).setParseAction(_fold(Or))
IMPLICATION = pp.Forward()
IMPLICATION <<= (DISJUNCTION + pp.Optional(pp.oneOf('-> <->') + IMPLICATION)).setParseAction(_implication)
FORMULA <<= IMPLICATION
FORMULA.setName('formula')

## Scenario line grammar
LABEL = pp.Regex(r'[A-Za-z0-9_][A-Za-z0-9_.\-]*')
LABEL.setName('label')
SENTENCE_LINE = pp.Keyword('sentence') + NAME + pp.Suppress(':=') + FORMULA
ATOM_LINE = pp.Keyword('atom') + NAME + pp.Suppress('=') + (pp.Keyword('true') | pp.Keyword('false'))
AXIOM_LINE = pp.Keyword('axiom') + FORMULA
GOAL_LINE = pp.Keyword('goal') + LABEL + pp.Suppress(':') + FORMULA
OPTION_LINE = pp.Keyword('option') + LABEL + pp.Suppress('=') + pp.Regex(r'\S+')
SCENARIO_LINE = SENTENCE_LINE | ATOM_LINE | AXIOM_LINE | GOAL_LINE | OPTION_LINE

## Proof script grammar, formulas are split off at the "|" separators beforehand
INTEGER = pp.Regex(r'[0-9]+').setParseAction(lambda t: int(t[0]))
HEADER_LINE = pp.Suppress(pp.Keyword('proof')) + LABEL
STEP_NUMBER = pp.ZeroOrMore(pp.Literal('*')) + INTEGER
RULE = pp.MatchFirst([pp.Keyword(rule.value) for rule in sorted(Rule, key = lambda r: -len(r.value))])
RULE.setParseAction(lambda t: Rule(t[0]))
JUSTIFICATION = RULE + pp.Optional(NAME) + pp.Group(pp.Optional(pp.delimitedList(INTEGER)))


def _parse(element, text, line = None):
    try:
        return element.parseString(text, parseAll = True)
    except pp.ParseBaseException as e:
        lineno = e.lineno if line is None else line
        log.error('Parse error at line {}, column {}: {}'.format(lineno, e.col, e.msg))
        raise ParseError(lineno, e.col, e.msg)

def parse_formula(text, line = None):
    """@TRUTHBENCH
    Parse a formula, desugaring `~`, `<->` and `true`.

    * `text` Concrete syntax of the formula.
    * `line` Line number reported in parse errors, defaults to the line within `text`.

    Returns the formula (Formula).
    """
    return _parse(FORMULA, text, line)[0]

def parse_scenario_lines(text):
    """@TRUTHBENCH
    Split scenario text into its entries. Comments start with "#".

    * `text` Scenario file contents.

    Returns tuples (line number, keyword, arguments) (list).
    """
    entries = []
    for lineno, raw_line in enumerate(text.splitlines(), 1):
        line = raw_line.split('#', 1)[0]
        if not line.strip(): continue
        tokens = _parse(SCENARIO_LINE, line, lineno)
        entries.append((lineno, tokens[0], list(tokens[1:])))

    return entries

def parse_step_fields(number_text, justification_text, line):
    ## Returns (depth, index, rule, name, premises)
    number = _parse(STEP_NUMBER, number_text, line)
    justification = _parse(JUSTIFICATION, justification_text, line)
    name = justification[1] if len(justification) == 3 else None

    return len(number) - 1, number[-1], justification[0], name, list(justification[-1])

def parse_header(text, line):
    return _parse(HEADER_LINE, text, line)[0]
