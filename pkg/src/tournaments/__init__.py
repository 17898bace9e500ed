"""Exact computation on small tournaments: modules, prime growth, triangles,
matching orderings, pattern exclusion, and exhaustive verification suites."""

from .core import (
    Direction,
    FamilyTag,
    InternalError,
    InvalidArgument,
    Tournament,
    backedges,
    canonical_code,
    canonical_form,
    check_ordering,
    contains_induced,
    edge_direction,
    induce,
    is_strongly_connected,
    is_transitive,
    isomorphic,
    make_family,
    max_backedge_length,
    read_tournaments,
    relabel,
    strong_components,
    substitute,
)
from .exclusion import (
    NoKnResult,
    PatternKind,
    StructureDecomposition,
    bounded_backedge_ordering,
    check_converse_J,
    check_converse_K,
    has_pattern,
    kn_free_decompose,
    max_transitive_subset,
    noKn_construct,
)
from .growth import (
    D4Structure,
    WeaveType,
    classify_weave,
    d4_classify,
    find_prime5,
    grow_by_one,
    grow_by_two,
    make_weave,
    recognize_TUW,
    shrink_prime,
)
from .harness import EnumerationConfig, VerificationReport, enumerate_canonical, verify
from .homog import (
    DecompositionTree,
    VertexClass,
    classify_vertex,
    decompose,
    find_nontrivial_module,
    is_homogeneous,
    is_prime,
)
from .matching import (
    BlockDecomposition,
    MatchingReport,
    count_matching_orderings,
    decompose_ordering_pair,
    enumerate_matching_orderings,
    find_matching_ordering,
    is_matching_ordering,
    is_minimal_non_matching,
    minimal_non_matching_up_to,
    sigma_perm,
    tau_perm,
)
from .triangles import cyclic_triangles, is_triangle_connected, triangle_components

__version__ = "0.1.0"
