"""Workbench for Kochen-Specker-type contextual sets as MMP hypergraphs.

Exact-arithmetic coordinatizations, the MMP line notation, contextuality
decision by exact cover, criticality and reduction, weak/strong
extension, master generation from vector components, sub-hypergraph
containment, and isomorphism.
"""

from .canon import CanonicalForm, canonical_form, certificate, find_isomorphism, is_isomorphic
from .codec import (
    ALPHABET,
    Coordinatization,
    parse_coordinatization,
    parse_mmph,
    parse_mmph_document,
    serialize_coordinatization,
    serialize_mmph,
)
from .coloring import (
    Classification,
    brute_force_assignment,
    check_assignment,
    classify,
    find_assignment,
    is_contextual,
    solve_exact_cover,
)
from .containment import Embedding, find_embedding, is_subhypergraph
from .errors import (
    BudgetExceededError,
    CoordinatizationError,
    MmpError,
    MmpSyntaxError,
    RingMismatchError,
    UnknownVertexError,
    ValidationError,
)
from .generate import (
    ALL_MAXIMAL_CLIQUES,
    BASES_ONLY,
    ComponentSet,
    MasterResult,
    VerificationReport,
    completion,
    enumerate_rays,
    master_from_components,
    verify_coordinatization,
)
from .hypergraph import (
    MMPH,
    StatsReport,
    delete_vertex,
    induced_by_edges,
    remove_hyperedge,
    stats,
    strip_mult1,
)
from .ring import (
    EISENSTEIN,
    QUADRATIC,
    RATIONAL,
    Ray,
    RingScalar,
    format_scalar,
    hermitian_inner,
    is_proportional,
    normalize_ray,
    parse_scalar,
)
from .structure import (
    PartialExtension,
    ReductionTrace,
    SubsetQuery,
    is_critical,
    partial_extension_search,
    reduce_to_critical,
    reduction_survey,
    search_small_contextual,
    strong_extend,
    weak_extend,
)
from . import catalog

__all__ = [name for name in dir() if not name.startswith("_")]
