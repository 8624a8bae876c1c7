"""Trivalent diagrams: generation, canonical labeling, maps and census.

Rooted trivalent diagrams classify the finite-index subgroups of the
modular group; their unrooted quotients the conjugacy classes; the regular
ones the oriented triangular combinatorial maps.  This package generates
them exhaustively in constant amortized time, deduplicates up to
isomorphism via characteristic labeling, and tabulates triangular maps by
genus.
"""

from .canonical import (
    CanonicalCode,
    NotConnected,
    are_conjugate,
    canonical_code,
    min_root_code,
    relabel,
)
from .diagram import (
    Diagram,
    DiagramError,
    InvolutionViolated,
    MapStats,
    NotPermutation,
    NotRegular,
    NotTransitive,
    OrderThreeViolated,
    elementary_move,
    format_line,
    is_transitive,
    map_stats,
    parse_line,
    validate,
)
from .generator import (
    GenStats,
    MaskedStack,
    collect_codes,
    count_by_size,
    generate,
)
from .quotient import (
    GenusCensus,
    UnrootedRepresentative,
    census_tsv,
    filter_unrooted,
    genus_census,
    unrooted_count_by_size,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalCode",
    "Diagram",
    "DiagramError",
    "GenStats",
    "GenusCensus",
    "InvolutionViolated",
    "MapStats",
    "MaskedStack",
    "NotConnected",
    "NotPermutation",
    "NotRegular",
    "NotTransitive",
    "OrderThreeViolated",
    "UnrootedRepresentative",
    "are_conjugate",
    "canonical_code",
    "census_tsv",
    "collect_codes",
    "count_by_size",
    "elementary_move",
    "filter_unrooted",
    "format_line",
    "generate",
    "genus_census",
    "is_transitive",
    "map_stats",
    "min_root_code",
    "parse_line",
    "relabel",
    "unrooted_count_by_size",
    "validate",
]
