"""Dense index-notation calculus: summation-convention expressions,
frame transformations with weights, metrics, and Lorentz boosts."""

from .determinants import determinant, inverse, singularity_threshold
from .documents import (
    format_tensor_document,
    load_basis_document,
    load_bindings,
    load_frame_document,
    load_tensor_document,
    parse_basis_document,
    parse_frame_document,
    parse_tensor_document,
)
from .einsum import (
    ContractionPlan,
    Mode,
    Statement,
    execute,
    order_contractions,
    parse,
    validate,
)
from .errors import (
    AddressingError,
    ConventionError,
    DefinitenessError,
    DocumentError,
    ExpressionSyntaxError,
    ShapeError,
    SingularityError,
    SuperluminalError,
    TensorError,
)
from .frames import (
    Frame,
    compose,
    frame_from_matrix,
    identity_frame,
    inverse_frame,
    random_frame,
    transform,
    transform_basis,
    verify_transform_law,
)
from .metric import (
    Metric,
    cross,
    inner,
    levi_civita_tensor,
    lower_index,
    metric_from_basis,
    metric_from_tensor,
    orthonormal_metric,
    raise_index,
    random_metric,
    triple,
)
from .minkowski import (
    ETA,
    boost,
    boost_from_rapidity,
    eta_residual,
    is_lorentz,
    mink_product,
    rapidity,
)
from .objects import (
    DOWN,
    UP,
    Symmetry,
    TensorObject,
    Variance,
    add,
    contract,
    new_object,
    outer_product,
    scale,
    swap_slots,
    symmetrize,
    symmetry_check,
    zeros,
)
from .symbols import KroneckerKind, kronecker, levi_civita_symbol, permutation_sign

__version__ = "0.1.0"

__all__ = [
    "AddressingError",
    "ContractionPlan",
    "ConventionError",
    "DOWN",
    "DefinitenessError",
    "DocumentError",
    "ETA",
    "ExpressionSyntaxError",
    "Frame",
    "KroneckerKind",
    "Metric",
    "Mode",
    "ShapeError",
    "SingularityError",
    "Statement",
    "SuperluminalError",
    "Symmetry",
    "TensorError",
    "TensorObject",
    "UP",
    "Variance",
    "add",
    "boost",
    "boost_from_rapidity",
    "compose",
    "contract",
    "cross",
    "determinant",
    "eta_residual",
    "execute",
    "format_tensor_document",
    "frame_from_matrix",
    "identity_frame",
    "inner",
    "inverse",
    "inverse_frame",
    "is_lorentz",
    "kronecker",
    "levi_civita_symbol",
    "levi_civita_tensor",
    "load_basis_document",
    "load_bindings",
    "load_frame_document",
    "load_tensor_document",
    "lower_index",
    "metric_from_basis",
    "metric_from_tensor",
    "mink_product",
    "new_object",
    "order_contractions",
    "orthonormal_metric",
    "outer_product",
    "parse",
    "parse_basis_document",
    "parse_frame_document",
    "parse_tensor_document",
    "permutation_sign",
    "raise_index",
    "random_frame",
    "random_metric",
    "rapidity",
    "scale",
    "singularity_threshold",
    "swap_slots",
    "symmetrize",
    "symmetry_check",
    "transform",
    "transform_basis",
    "triple",
    "validate",
    "verify_transform_law",
    "zeros",
]
