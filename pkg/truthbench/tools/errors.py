

class TruthbenchError(Exception):
    """@TRUTHBENCH
    Base class of all errors raised by truthbench.
    """
    pass

class ParseError(TruthbenchError):
    """@TRUTHBENCH
    Raised on malformed formula, scenario or proof script text.

    * `line` Line number of the offending input (1-based).
    * `column` Column number of the offending input (1-based).
    * `expected` Description of the tokens that were expected.
    """
    def __init__(self, line, column, expected):
        self.line = line
        self.column = column
        self.expected = expected
        super(ParseError, self).__init__('line {}, column {}: {}'.format(line, column, expected))

class ValidationError(TruthbenchError):
    pass

class UndefinedNameError(ValidationError):
    def __init__(self, name, context = 'truth predicate target'):
        self.name = name
        super(UndefinedNameError, self).__init__('Undefined sentence name "{}" ({})'.format(name, context))

class NamespaceClashError(ValidationError):
    def __init__(self, name):
        self.name = name
        super(NamespaceClashError, self).__init__('Name "{}" is declared both as sentence and as atom'.format(name))

class DuplicateNameError(ValidationError):
    def __init__(self, name, kind):
        self.name = name
        super(DuplicateNameError, self).__init__('Duplicate {} "{}"'.format(kind, name))

class UnsupportedConnectiveError(TruthbenchError):
    """@TRUTHBENCH
    Raised when a module meets a connective it does not interpret, e.g. box in the Kripke semantics.
    """
    pass

class UnindexedOccurrenceError(TruthbenchError):
    pass

class MissingAtomError(TruthbenchError):
    def __init__(self, name):
        self.name = name
        super(MissingAtomError, self).__init__('Atom "{}" has no base value'.format(name))

class DomainMismatchError(TruthbenchError):
    pass

class CapExceededError(TruthbenchError):
    """@TRUTHBENCH
    Raised when exhaustive fixed point enumeration would exceed the configured cap on sentence names.
    """
    pass

class ResourceBoundError(TruthbenchError):
    """@TRUTHBENCH
    Raised when proof search exceeds its node budget.
    """
    pass

class ReflectionEnabledError(TruthbenchError):
    pass

class UnknownDemoError(TruthbenchError):
    pass
