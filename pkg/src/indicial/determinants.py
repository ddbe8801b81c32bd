"""Determinants and inverses of rank-(1,1) objects.

The upper slot indexes rows and the lower slot indexes columns.  For
dim <= 4 the determinant is the full signed-permutation sum (the
epsilon-contraction definition); larger dimensions use an O(d^3)
elimination path, which agrees with the reference sum on small matrices.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import ShapeError, SingularityError
from .objects import DOWN, UP, TensorObject, _frozen
from .symbols import permutation_sign

# |det| <= SINGULARITY_FACTOR * max|entry| ** dim counts as singular
SINGULARITY_FACTOR = 1e-12

_MIXED = (UP, DOWN)


def _require_mixed_matrix(t: TensorObject, what: str) -> np.ndarray:
    if t.slots != _MIXED:
        raise ShapeError(
            f"{what} needs a rank-(1,1) object with slots (up, down), got {t!r}"
        )
    return t.components


def determinant(t: TensorObject) -> float:
    """Determinant of a rank-(1,1) object.  Weight is ignored."""
    m = _require_mixed_matrix(t, "determinant")
    d = t.dim
    if d <= 4:
        total = 0.0
        for perm in itertools.permutations(range(1, d + 1)):
            sign = permutation_sign(perm, d)
            prod = 1.0
            for col, row in enumerate(perm):
                prod *= m[row - 1, col]
            total += sign * prod
        return total
    return float(np.linalg.det(m))


def singularity_threshold(t: TensorObject) -> float:
    """Scale-aware cutoff: 1e-12 * (max absolute entry) ** dim."""
    m = _require_mixed_matrix(t, "singularity_threshold")
    return SINGULARITY_FACTOR * float(np.max(np.abs(m), initial=0.0)) ** t.dim


def inverse(t: TensorObject) -> TensorObject:
    """Matrix inverse of a rank-(1,1) object.

    Raises SingularityError when |det| falls at or below the scale-aware
    threshold.  The result carries weight -t.weight so that the product
    with t is weight-0.
    """
    m = _require_mixed_matrix(t, "inverse")
    det = determinant(t)
    if abs(det) <= singularity_threshold(t):
        raise SingularityError(f"matrix is singular within tolerance: |det| = {abs(det)}")
    inv = np.linalg.inv(m)
    return TensorObject(t.dim, _MIXED, -t.weight, _frozen(inv))
