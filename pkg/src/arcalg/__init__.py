"""Diagrammatic arc algebras for integral blocks of GL(m|n).

Weights are sequences of symbols on the integer line, cup/cap diagrams
orient them, surgery multiplies basis vectors, and translation
operators move classes between neighbouring blocks.  An independent
tensor-space model cross-checks the combinatorics numerically.
"""

from .laurent import Laurent
from .weights import (
    Block,
    GlWeight,
    InvalidWeightError,
    Weight,
    block_of,
    block_weights,
    bruhat_leq,
    defect,
    enumerate_window,
    from_gl_weight,
    height,
    in_core_window,
    in_window,
    is_kostant,
    lambda_ground,
    to_gl_weight,
    window_interval,
)
from .arcs import (
    AlgebraElement,
    BasisVector,
    CapDiagram,
    CupDiagram,
    OrientationError,
    arc_orientations,
    cap_diagram,
    count_middles,
    cup_diagram,
    degree,
    idempotent,
    make_basis_vector,
    subset_lower,
    subset_upper,
    weights_above,
    weights_below,
)
from .surgery import multiply, multiply_elements, reset_diagnostics, unlisted_count
from .algebra import (
    Truncation,
    build_truncation,
    cartan_from_decomposition,
    cartan_matrix,
    check_associativity,
    decomposition_matrix,
    endo_ring,
    kac_layers,
)
from .functors import (
    EscapeOfWindowError,
    GrothendieckVector,
    StretchedDiagram,
    admissible,
    apply_E,
    apply_F,
    change_basis,
    check_theorem_dec,
    crystal_edges,
    enumerate_stretched,
    minimal_window,
    path_to_ground,
    serre_check,
    theorem_dec_vector,
    verify_path,
)
from .tensor_oracle import (
    TensorSpace,
    casimir_check,
    check_hecke_relations,
    weight_decomposition,
)
from .crosscheck import check_two_sided, diagram_dims, kac_dimension

__version__ = "0.1.0"

__all__ = [
    "Laurent",
    "Block", "GlWeight", "InvalidWeightError", "Weight",
    "block_of", "block_weights", "bruhat_leq", "defect",
    "enumerate_window", "from_gl_weight", "height", "in_core_window",
    "in_window", "is_kostant", "lambda_ground", "to_gl_weight",
    "window_interval",
    "AlgebraElement", "BasisVector", "CapDiagram", "CupDiagram",
    "OrientationError", "arc_orientations", "cap_diagram",
    "count_middles", "cup_diagram", "degree", "idempotent",
    "make_basis_vector", "subset_lower", "subset_upper",
    "weights_above", "weights_below",
    "multiply", "multiply_elements", "reset_diagnostics", "unlisted_count",
    "Truncation", "build_truncation", "cartan_from_decomposition",
    "cartan_matrix", "check_associativity", "decomposition_matrix",
    "endo_ring", "kac_layers",
    "EscapeOfWindowError", "GrothendieckVector", "StretchedDiagram",
    "admissible", "apply_E", "apply_F", "change_basis",
    "check_theorem_dec", "crystal_edges", "enumerate_stretched",
    "minimal_window", "path_to_ground", "serre_check",
    "theorem_dec_vector", "verify_path",
    "TensorSpace", "casimir_check", "check_hecke_relations",
    "weight_decomposition",
    "check_two_sided", "diagram_dims", "kac_dimension",
    "__version__",
]
