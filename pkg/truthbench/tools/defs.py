from enum import Enum


class TruthValue(Enum):
    TRUE = 't'
    FALSE = 'f'
    UNDEFINED = 'u'

class Classification(Enum):
    GROUNDED_TRUE = 'grounded-true'
    GROUNDED_FALSE = 'grounded-false'
    PARADOXICAL = 'paradoxical'
    UNGROUNDED = 'ungrounded'
    GROUNDEDNESS_ONLY = 'ungrounded (groundedness only)'

class Comparison(Enum):
    SUBORDINATE = 'subordinate'
    EXTENDS = 'extends'
    EQUAL = 'equal'
    INCOMPARABLE = 'incomparable'

class Reason(Enum):
    INDEX_TOO_LOW = 'index-too-low'
    CYCLIC_DEPENDENCY = 'cyclic-dependency'

class Rule(Enum):
    PREMISE = 'premise'
    ASSUME = 'assume'
    IMP_INTRO = 'imp-intro'
    IMP_ELIM = 'imp-elim'
    AND_INTRO = 'and-intro'
    AND_ELIM_L = 'and-elim-l'
    AND_ELIM_R = 'and-elim-r'
    OR_INTRO_L = 'or-intro-l'
    OR_INTRO_R = 'or-intro-r'
    OR_ELIM = 'or-elim'
    EFQ = 'efq'
    DEF_L = 'def-l'
    DEF_R = 'def-r'
    COREFLECTION = 'coreflection'
    K_DIST = 'k-dist'
    REFLECTION = 'reflection'

class Decision(Enum):
    PROVABLE = 'provable'
    UNPROVABLE = 'unprovable'

class Consistency(Enum):
    CONSISTENT = 'consistent'
    INCONSISTENT = 'inconsistent'

class WeakFalsity(Enum):
    WEAKLY_FALSE = 'weakly-false'
    UNKNOWN = 'unknown'

class Status(Enum):
    OK = 0
    FAILED = 1
    ILL_FORMED = 2
    BOUND_EXCEEDED = 3
