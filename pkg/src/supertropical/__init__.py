"""Exact linear algebra over the supertropical semifield.

Scalars carry a rational value and a layer (tangible or ghost) on top
of a bottom element; addition takes the value-larger argument and ties
go ghost.  On that base the package builds permanent determinants,
quasi-identities, tropical dependence with saturation, minimal spanning
sets, dual functionals, and bilinear forms, all with exact rational
arithmetic and explicit, replayable witnesses.
"""

from .scalars import (
    E,
    ONE,
    ZERO,
    Scalar,
    add,
    ghost,
    ghost_surpasses,
    mul,
    nu,
    nu_hat,
    tangible,
    zero,
)
from .matrices import (
    Mat,
    Vec,
    adjoint,
    g_annihilates,
    is_nonsingular,
    nabla,
    permanent,
    quasi_identity,
    solve_max,
    solve_raw,
)
from .dependence import (
    BaseReport,
    DepWitness,
    annihilator_set,
    d_base,
    depends_on,
    extend_with_tangible,
    is_dependent,
    max_rank,
    projective_normalize,
    rank,
    saturate,
    saturate_by_sup,
    sum_saturated,
    sup_witness,
)
from .span import (
    SpanWitness,
    change_of_base,
    is_almost_tangible,
    is_critical,
    is_generalized_permutation,
    is_thick,
    s_base,
    spans,
    spans_set,
)
from .dual import (
    Functional,
    MapByMatrix,
    close_base,
    double_dual,
    dual_base,
    ghost_kernel,
    is_ghost_monic,
    is_iso,
    is_tropically_onto,
    reconstruct,
)
from .bilinear import (
    GramForm,
    SymmetryVerdict,
    evaluate,
    gram_of_dot,
    gram_of_form,
    is_g_orthogonal,
    is_orthogonal_symmetric,
    is_supertropically_symmetric,
    isotropy,
    orthogonal_complement_pred,
    radical_and_nondegenerate,
    gram_dependence,
)
from .exceptions import (
    DegenerateSpaceError,
    InvalidInputError,
    NoChangeOfBaseError,
    NotInClosedSpanError,
    ParseError,
    ShapeError,
    SingularMatrixError,
    SupertropicalError,
)
from .textio import (
    parse_matrix,
    parse_scalar,
    parse_vector,
    print_matrix,
    print_scalar,
    print_vector,
)

__version__ = "0.1.0"

__all__ = [
    "Scalar", "Vec", "Mat", "DepWitness", "SpanWitness", "BaseReport",
    "Functional", "MapByMatrix", "GramForm", "SymmetryVerdict",
    "ZERO", "ONE", "E",
    "zero", "tangible", "ghost", "add", "mul", "nu", "nu_hat",
    "ghost_surpasses",
    "permanent", "adjoint", "nabla", "quasi_identity", "is_nonsingular",
    "g_annihilates", "solve_raw", "solve_max",
    "is_dependent", "depends_on", "rank", "max_rank", "d_base",
    "extend_with_tangible", "saturate", "saturate_by_sup", "sup_witness",
    "sum_saturated", "annihilator_set", "projective_normalize",
    "spans", "spans_set", "is_critical", "s_base", "is_thick",
    "is_generalized_permutation", "change_of_base", "is_almost_tangible",
    "close_base", "dual_base", "reconstruct", "ghost_kernel",
    "is_ghost_monic", "is_tropically_onto", "is_iso", "double_dual",
    "gram_of_dot", "gram_of_form", "evaluate", "is_g_orthogonal",
    "orthogonal_complement_pred", "radical_and_nondegenerate",
    "gram_dependence", "is_orthogonal_symmetric",
    "is_supertropically_symmetric", "isotropy",
    "SupertropicalError", "ShapeError", "InvalidInputError",
    "SingularMatrixError", "NoChangeOfBaseError", "NotInClosedSpanError",
    "DegenerateSpaceError", "ParseError",
    "parse_scalar", "print_scalar", "parse_matrix", "print_matrix",
    "parse_vector", "print_vector",
]
