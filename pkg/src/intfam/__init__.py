"""Degree profiles of intersecting families of k-sets, with shifting, shadows and exhaustive search."""

from .combinatorics import (
    KSet,
    binom,
    colex_less,
    colex_rank,
    colex_unrank,
    enumerate_ksets,
    lex_less,
)
from .constructions import (
    Design,
    construct,
    example_5_1,
    example_5_2,
    example_5_3,
    frankl_wang_l,
    hilton_milner,
    odd_k_majority,
    star,
)
from .errors import (
    CapacityError,
    ComparisonError,
    InputError,
    IntfamError,
    ParseError,
    RangeError,
    ShiftGuardError,
)
from .family import (
    DegreeProfile,
    SetFamily,
    TraceFamily,
    are_cross_t_intersecting,
    degree_profile,
    is_intersecting,
    is_t_intersecting,
    mdegree,
    subset_degree,
    trace,
    upward_closure,
)
from .fileformat import format_family, parse_family, read_family, write_family
from .search import (
    SearchReport,
    build_intersection_graph,
    enumerate_maximal_families,
    maximize_degree,
    pruned_scan,
    scan_question_5_1,
)
from .shadow import colex_segment, kk_lower_bound, shadow, upper_shadow
from .shifting import ShiftReport, is_l_shifted, shift_family, shift_set, shift_to_fixpoint
from .verifiers import BoundVerdict

__version__ = "0.1.0"
