"""Directed degree sequences: digraphicality, realizations and threshold digraphs."""

from digraphseq.core import (
    DegreePair,
    DegreeSequence,
    Digraph,
    VertexPermutation,
    apply_permutation,
    degree_sequence_of,
    dominance_leq,
    positive_lex_sort,
    set_max_vertices,
)
from digraphseq.errors import (
    CompleteDigraphError,
    DigraphSeqError,
    NoArcError,
    NotDigraphicalError,
    NotSortedError,
    NotThresholdError,
    ParseError,
    SizeLimitError,
)
from digraphseq.oracle import (
    CensusReport,
    census_threshold,
    count_realizations,
    enumerate_digraphs,
    unique_realization,
    verify_equivalence,
)
from digraphseq.realization import (
    FcVerdict,
    RealizationStep,
    RealizationTrace,
    check_fulkerson_chen,
    check_relaxed,
    column_prefix_count,
    realize,
)
from digraphseq.threshold import (
    ConfigKind,
    ForbiddenConfig,
    check_adjacency_condition,
    check_fulkerson_chen_equality,
    construct_from_beta,
    find_forbidden_configuration,
    grow_arc,
    is_threshold,
    shrink_arc,
)

__version__ = "0.1.0"
