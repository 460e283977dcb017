"""
Combinatorics of the upper presentation <a, b | u_r> of a 2-bridge link group.

The package is split by subject: exact slopes and continued fractions
(rational), free group words and the relator u_r (word), S-sequences and the
symmetric decomposition of CS(r) (sseq), the C(4)/T(4) checks (smallcancel)
and the Farey reflection groups with the null-homotopy decision (farey).
"""
from .errors import DecompositionError, DomainError, ReductionError, SlopeParseError, TwoBridgeError, WordParseError
from .farey import (
    NEGATE,
    TWO_MINUS,
    OrbitPartition,
    OrbitResult,
    ReflectionMatrix,
    apply_mobius,
    farey_neighbors,
    is_canonical,
    is_null_homotopic,
    normalize_mod_gamma_inf,
    orbit_bfs_oracle,
    orbit_closure,
    reduce_to_fundamental,
    reflection_in_edge,
)
from .rational import (
    ContinuedFraction,
    ExtendedRational,
    cf_expand,
    cf_value,
    continued_fractions_up_to,
    interval_endpoints,
    is_farey_neighbor,
    parse_slope,
    precedes,
    predecessor,
    slopes_up_to,
)
from .smallcancel import PieceStatistics, SymmetrizedSet, check_c4, check_t4, max_piece_prefix, piece_report, satisfies_t4, symmetrize
from .sseq import (
    CyclicSSequence,
    Decomposition,
    SSequence,
    connection_conditions,
    contains_pattern,
    count_cyclic_occurrences,
    cyclic_s_sequence,
    decompose,
    in_open_interval,
    recurrence_flip,
    recurrence_up,
    s_sequence,
    slope_sseq,
)
from .word import CyclicWord, Word, cyclic_reduce, cyclically_equal, flip_b, free_reduce, is_cyclically_alternating, relator

__all__ = [
    'ContinuedFraction',
    'CyclicSSequence',
    'CyclicWord',
    'Decomposition',
    'DecompositionError',
    'DomainError',
    'ExtendedRational',
    'NEGATE',
    'OrbitPartition',
    'OrbitResult',
    'ReductionError',
    'ReflectionMatrix',
    'PieceStatistics',
    'SSequence',
    'SlopeParseError',
    'SymmetrizedSet',
    'TWO_MINUS',
    'TwoBridgeError',
    'Word',
    'WordParseError',
    'apply_mobius',
    'cf_expand',
    'cf_value',
    'check_c4',
    'check_t4',
    'connection_conditions',
    'contains_pattern',
    'continued_fractions_up_to',
    'count_cyclic_occurrences',
    'cyclic_reduce',
    'cyclic_s_sequence',
    'cyclically_equal',
    'decompose',
    'farey_neighbors',
    'flip_b',
    'free_reduce',
    'in_open_interval',
    'interval_endpoints',
    'is_canonical',
    'is_cyclically_alternating',
    'is_farey_neighbor',
    'is_null_homotopic',
    'max_piece_prefix',
    'normalize_mod_gamma_inf',
    'orbit_bfs_oracle',
    'orbit_closure',
    'parse_slope',
    'piece_report',
    'precedes',
    'predecessor',
    'recurrence_flip',
    'recurrence_up',
    'reduce_to_fundamental',
    'reflection_in_edge',
    'relator',
    's_sequence',
    'satisfies_t4',
    'slope_sseq',
    'slopes_up_to',
    'symmetrize',
]
