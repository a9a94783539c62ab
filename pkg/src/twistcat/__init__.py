"""Braided ribbon categories of finite-group representations twisted by
abelian 3-cocycles, with exact cocycle arithmetic, matrix-level coherence
suites, fusion rules, S-matrices, and branch-cut monodromy scalars."""

from .abgroup import DualChar, FinAbGroup, GroupElt
from .branchcut import (
    PathPolyline,
    assoc_scalar,
    clockwise_unit_loop,
    p_int,
    plog,
    transport_scalar,
    winding,
)
from .cocycle import (
    AbelianCocycle,
    AxiomCheck,
    CoherenceReport,
    build_cyclic,
    validate_cocycle,
)
from .errors import (
    CocycleError,
    ConsistencyError,
    DomainError,
    GradingError,
    RepresentationError,
    StructuralError,
)
from .fusionring import (
    FusionTable,
    SU2Object,
    fusion_table,
    group_order_identity,
    su2_smatrix,
    su2_smatrix_entry,
    su2_tensor,
)
from .grouprep import (
    CentralEmbedding,
    FiniteGroup,
    GradedIrrep,
    MatrixRep,
    dual_rep,
    grade_of,
    hom_dim,
    intertwiner_basis,
    rep_from_generators,
    tensor_rep,
    validate_irrep,
)
from .modcat import StructureMorphism, TwistedCategory, flip_matrix
from .specio import CategorySpec, fixture_path, load_spec
from .unitscalar import ONE, RationalMod1, UnitScalar

__version__ = "0.1.0"

__all__ = [
    "AbelianCocycle",
    "AxiomCheck",
    "CategorySpec",
    "CentralEmbedding",
    "CocycleError",
    "CoherenceReport",
    "ConsistencyError",
    "DomainError",
    "DualChar",
    "FinAbGroup",
    "FiniteGroup",
    "FusionTable",
    "GradedIrrep",
    "GradingError",
    "GroupElt",
    "MatrixRep",
    "ONE",
    "PathPolyline",
    "RationalMod1",
    "RepresentationError",
    "SU2Object",
    "StructuralError",
    "StructureMorphism",
    "TwistedCategory",
    "UnitScalar",
    "assoc_scalar",
    "build_cyclic",
    "clockwise_unit_loop",
    "dual_rep",
    "fixture_path",
    "flip_matrix",
    "fusion_table",
    "grade_of",
    "group_order_identity",
    "hom_dim",
    "intertwiner_basis",
    "load_spec",
    "p_int",
    "plog",
    "rep_from_generators",
    "su2_smatrix",
    "su2_smatrix_entry",
    "su2_tensor",
    "tensor_rep",
    "transport_scalar",
    "validate_cocycle",
    "validate_irrep",
    "winding",
]
