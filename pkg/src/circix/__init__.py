"""Exact combinatorics of circulant graphs and their independence complexes."""

from .circulant import (
    CirculantGraph,
    build,
    canonical_connection,
    circ_distance,
    complement_graph,
    complement_set,
    family_complement_set,
    family_graph,
    is_l_connected,
)
from .complexes import (
    FHProfile,
    SimplicialComplex,
    check_pure2_criterion,
    component_count,
    deletion,
    faces,
    facet_orbit_split,
    fh_profile,
    h3_formula,
    independence_complex,
    is_connected,
    link,
    make_complex,
    restriction,
)
from .homology import (
    RATIONALS,
    HomologyProfile,
    boundary_matrix,
    is_buchsbaum,
    is_cohen_macaulay,
    reduced_homology,
)
from .vd import (
    SheddingCertificate,
    SheddingFailure,
    ShedStep,
    find_shedding_sequence,
    is_vd_recursive,
    theorem1_sequence,
    verify_shedding_sequence,
)
from .algebra import (
    BettiStrand,
    ClassificationReport,
    chi_nonzero_check,
    classify,
    classify_gorenstein,
    classify_level,
    sbar_size_check,
    top_strand,
)

__version__ = "0.1.0"
