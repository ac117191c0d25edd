"""Jaco graphs J_n(a): exact sequences, construction, verification.

A Jaco graph places an arc from v_i to v_j (i < j) exactly when
(a+1)*i - d_in(v_i) >= j.  Everything about it reduces to one integer
series, computed here exactly and cross-checked against a closed form
over generalized Zeckendorf digit expansions.
"""

from .analysis import (
    EdgeCountReport,
    MilestoneResult,
    TheoremViolationError,
    VerificationReport,
    complete_prefix_count,
    edge_count_direct,
    edge_count_recursive,
    edge_count_report,
    edge_count_theorem,
    milestone_delta,
    render_report,
    verify_suite,
)
from .export import seq_dump, to_csv, to_dot, to_json
from .graph import (
    DegreeProfile,
    JacoGraph,
    JaconianInfo,
    arcs,
    build,
    degree_profile,
    hope_is_complete,
    in_neighbors,
    jaconian,
    out_neighbors,
)
from .paths import (
    ConjectureReport,
    DistanceRootSet,
    PathTable,
    UniquenessReport,
    UnsupportedOrderError,
    conjecture_scan,
    distance_roots,
    distances,
    path_table,
    psi_oracle,
    psi_recursive,
    render_conjecture,
    uniqueness_check,
)
from .sequences import (
    LizSequence,
    LucasBasis,
    SequenceTable,
    ZeckDigitError,
    ZeckRep,
    bettina_dplus,
    c_closed,
    c_series,
    liz_terms,
    lucas_terms,
    tau,
    zeck_decode,
    zeck_encode,
)

__all__ = [
    "ConjectureReport",
    "DegreeProfile",
    "DistanceRootSet",
    "EdgeCountReport",
    "JacoGraph",
    "JaconianInfo",
    "LizSequence",
    "LucasBasis",
    "MilestoneResult",
    "PathTable",
    "SequenceTable",
    "TheoremViolationError",
    "UniquenessReport",
    "UnsupportedOrderError",
    "VerificationReport",
    "ZeckDigitError",
    "ZeckRep",
    "arcs",
    "bettina_dplus",
    "build",
    "c_closed",
    "c_series",
    "complete_prefix_count",
    "conjecture_scan",
    "degree_profile",
    "distance_roots",
    "distances",
    "edge_count_direct",
    "edge_count_recursive",
    "edge_count_report",
    "edge_count_theorem",
    "hope_is_complete",
    "in_neighbors",
    "jaconian",
    "liz_terms",
    "lucas_terms",
    "milestone_delta",
    "out_neighbors",
    "path_table",
    "psi_oracle",
    "psi_recursive",
    "render_conjecture",
    "render_report",
    "seq_dump",
    "tau",
    "to_csv",
    "to_dot",
    "to_json",
    "uniqueness_check",
    "verify_suite",
    "zeck_decode",
    "zeck_encode",
]
