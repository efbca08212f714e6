"""Equivalence granules, subsethood-based granularity measures and rough approximations."""

from .core import (
    Comparison,
    Granule,
    MeetDistribution,
    Relation,
    Universe,
    compare,
    empty,
    finer_or_equal,
    format_granule,
    format_set,
    granule_of,
    join_relation,
    make_granule,
    meet,
    parse_granule,
    parse_set,
    prob_distribution,
    quotient_join,
    relation_of,
    transitive_closure,
    whole,
)
from .errors import (
    CapExceededError,
    DuplicateObjectError,
    EmptyBlockError,
    EmptyTableError,
    GranulaError,
    IncompleteSystemError,
    NoAttributesError,
    NoBoundError,
    NotEquivalenceError,
    OverlapError,
    ParseError,
    UniverseMismatchError,
    UnknownElementError,
)
from .hasse import export_hasse
from .measures import (
    EntropyValue,
    MeasureKind,
    are_independent,
    co_entropy,
    conditional_fineness,
    conditional_fineness_entropy,
    conditional_granularity,
    conditional_granularity_entropy,
    entropy,
    fineness,
    granularity,
    is_quotient_complement,
    subsethood,
    supsethood,
)
from .rough import (
    Category,
    GranuleApproximation,
    InformationSystem,
    MicroKnowledgeSpace,
    Mode,
    SetApproximation,
    approximate_granule,
    approximate_set,
    base_granule,
    complete_shortcut,
    definable_granules,
    definable_sets,
    micro_space,
)
from .tableio import export, ingest

__version__ = "0.1.0"

__all__ = [
    "Comparison",
    "Granule",
    "MeetDistribution",
    "Relation",
    "Universe",
    "compare",
    "empty",
    "finer_or_equal",
    "format_granule",
    "format_set",
    "granule_of",
    "join_relation",
    "make_granule",
    "meet",
    "parse_granule",
    "parse_set",
    "prob_distribution",
    "quotient_join",
    "relation_of",
    "transitive_closure",
    "whole",
    "CapExceededError",
    "DuplicateObjectError",
    "EmptyBlockError",
    "EmptyTableError",
    "GranulaError",
    "IncompleteSystemError",
    "NoAttributesError",
    "NoBoundError",
    "NotEquivalenceError",
    "OverlapError",
    "ParseError",
    "UniverseMismatchError",
    "UnknownElementError",
    "EntropyValue",
    "MeasureKind",
    "are_independent",
    "co_entropy",
    "conditional_fineness",
    "conditional_fineness_entropy",
    "conditional_granularity",
    "conditional_granularity_entropy",
    "entropy",
    "fineness",
    "granularity",
    "is_quotient_complement",
    "subsethood",
    "supsethood",
    "Category",
    "GranuleApproximation",
    "InformationSystem",
    "MicroKnowledgeSpace",
    "Mode",
    "SetApproximation",
    "approximate_granule",
    "approximate_set",
    "base_granule",
    "complete_shortcut",
    "definable_granules",
    "definable_sets",
    "micro_space",
    "export_hasse",
    "export",
    "ingest",
]
