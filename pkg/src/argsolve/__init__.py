"""Solver for finite abstract argumentation frameworks.

Build a framework from argument names and attack pairs, then query the
classic extension families (conflict-free, naive, admissible, complete,
preferred, stable, grounded), acceptance of individual arguments, and
structural properties such as cycle parity, controversy, coherence and
relative groundedness. A brute-force oracle is shipped alongside the fast
enumerators so results can be cross-checked on small instances.
"""

from .core import (
    ArgSet,
    ArgsolveError,
    ArgumentId,
    DuplicateArgument,
    EmptyName,
    Framework,
    FrameworkMismatch,
    UnknownArgument,
    UnknownEndpoint,
    backward_set,
    build_framework,
    forward_set,
    induced_subframework,
    self_attackers,
    unattacked,
)
from .operators import (
    IterationTrace,
    defence,
    defends,
    iterate_to_fixpoint,
    kleene_least_fixpoint,
    neutrality,
    neutrality_squared,
)
from .semantics import (
    DEFAULT_MAX_ARGS,
    Extension,
    IncompleteEnumerationWarning,
    JustificationStatus,
    SemanticsKind,
    TooLarge,
    enumerate_extensions,
    grounded,
    is_admissible,
    is_complete,
    is_conflict_free,
    is_self_defending,
    is_stable,
    justification,
)
from .structure import (
    ClassificationReport,
    classify,
    controversial_arguments,
    even_cycle_exists,
    has_directed_cycle,
    indirectly_attacks,
    indirectly_defends,
    is_coherent,
    is_controversial_wrt,
    is_limited_controversial,
    is_relatively_grounded,
    is_symmetric,
    is_well_founded,
    odd_cycle_exists,
)
from .oracle import ORACLE_MAX_ARGS, OracleResult, TooLargeForOracle, oracle_enumerate
from .formats import (
    InputFormat,
    MalformedFact,
    MalformedLine,
    MissingSeparator,
    OutputDocument,
    ParseError,
    emit_apx,
    emit_dot,
    emit_extensions,
    emit_tgf,
    load_framework,
    parse_apx,
    parse_tgf,
)

__all__ = [
    "ArgSet",
    "ArgsolveError",
    "ArgumentId",
    "ClassificationReport",
    "DEFAULT_MAX_ARGS",
    "DuplicateArgument",
    "EmptyName",
    "Extension",
    "Framework",
    "FrameworkMismatch",
    "IncompleteEnumerationWarning",
    "InputFormat",
    "IterationTrace",
    "JustificationStatus",
    "MalformedFact",
    "MalformedLine",
    "MissingSeparator",
    "ORACLE_MAX_ARGS",
    "OracleResult",
    "OutputDocument",
    "ParseError",
    "SemanticsKind",
    "TooLarge",
    "TooLargeForOracle",
    "UnknownArgument",
    "UnknownEndpoint",
    "backward_set",
    "build_framework",
    "classify",
    "controversial_arguments",
    "defence",
    "defends",
    "emit_apx",
    "emit_dot",
    "emit_extensions",
    "emit_tgf",
    "enumerate_extensions",
    "even_cycle_exists",
    "forward_set",
    "grounded",
    "has_directed_cycle",
    "indirectly_attacks",
    "indirectly_defends",
    "induced_subframework",
    "is_admissible",
    "is_coherent",
    "is_complete",
    "is_conflict_free",
    "is_controversial_wrt",
    "is_limited_controversial",
    "is_relatively_grounded",
    "is_self_defending",
    "is_stable",
    "is_symmetric",
    "is_well_founded",
    "iterate_to_fixpoint",
    "justification",
    "kleene_least_fixpoint",
    "load_framework",
    "neutrality",
    "neutrality_squared",
    "odd_cycle_exists",
    "oracle_enumerate",
    "parse_apx",
    "parse_tgf",
    "self_attackers",
    "unattacked",
]
