"""Graph Laplacians as operators on the space of all sequences, with exact
certificates that they do not generate strongly continuous semigroups."""

from .certfile import build_instance, emit_certificate, verify_certificate
from .criterion import (
    CriterionQuery,
    InternalInconsistency,
    NonGenerationCertificate,
    binomial_collapse,
    certificate,
    criterion_scan,
    diagonal_collapse_check,
    no_cancellation_check,
    reach_set,
)
from .graphs import (
    BinaryTree,
    Caterpillar,
    FiniteGraph,
    GraphError,
    GraphOracle,
    Grid2D,
    Line,
    RadiusExceeded,
    Ray,
    WeightScheme,
    distance,
    graph_from_spec,
    n_neighborhood,
    neighbors,
    validate_section,
    walk_exists,
    weights_from_spec,
)
from .lab import BudgetExceeded, TruncationReport, truncated_exponential_row
from .operators import (
    BandedOperator,
    FinVector,
    QuasiadjacencyPair,
    Seminorm,
    affine_reduce,
    apply,
    build_laplacian,
    power_entry,
    seminorm,
    verify_hopping,
)
from .scalars import GaussianRational, format_scalar, parse_scalar

__version__ = "0.1.0"
