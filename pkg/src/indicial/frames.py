"""Coordinate frames and the weighted transformation law.

A Frame holds the new-from-old mixing matrix c (so new coordinates are
x-bar^r = c^r_s x^s) together with its inverse gamma.  Under a change of
frame an object of weight M picks up the factor det(gamma)**M, upper slots
contract with c and lower slots with gamma.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .determinants import determinant, inverse, singularity_threshold
from .errors import ShapeError, SingularityError
from .objects import DOWN, UP, TensorObject, _frozen, new_object

_MIXED = (UP, DOWN)
_FRAME_CHECK_TOL = 1e-9


@dataclass(frozen=True)
class Frame:
    """An invertible change of coordinates.

    ``c`` mixes old components into new ones; ``gamma`` is its matrix
    inverse and ``det_gamma`` the cached determinant of gamma.
    """

    dim: int
    c: TensorObject
    gamma: TensorObject
    det_gamma: float


def frame_from_matrix(c: TensorObject | Sequence[Sequence[float]]) -> Frame:
    """Build a Frame from the new-from-old matrix, rejecting singular input."""
    if not isinstance(c, TensorObject):
        arr = np.asarray(c, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ShapeError(f"frame matrix must be square, got shape {arr.shape}")
        c = new_object(arr.shape[0], _MIXED, 0, arr)
    elif c.slots != _MIXED:
        raise ShapeError(f"frame matrix needs slots (up, down), got {c!r}")
    gamma = inverse(c)  # raises SingularityError for a degenerate mixing
    residual = float(
        np.max(np.abs(gamma.components @ c.components - np.eye(c.dim)))
    )
    if residual > _FRAME_CHECK_TOL:
        raise SingularityError(
            f"frame matrix is too ill-conditioned to invert reliably "
            f"(residual {residual:.3e})"
        )
    return Frame(c.dim, c, gamma, determinant(gamma))


def identity_frame(dim: int) -> Frame:
    return frame_from_matrix(new_object(dim, _MIXED, 0, np.eye(dim)))


def inverse_frame(f: Frame) -> Frame:
    """The frame mapping new coordinates back to old ones."""
    return Frame(f.dim, f.gamma, f.c, determinant(f.c))


def compose(first: Frame, second: Frame) -> Frame:
    """The frame equivalent to applying ``first`` and then ``second``."""
    if first.dim != second.dim:
        raise ShapeError(f"dim mismatch: {first.dim} vs {second.dim}")
    c = second.c.components @ first.c.components
    gamma = first.gamma.components @ second.gamma.components
    return Frame(
        first.dim,
        new_object(first.dim, _MIXED, 0, c),
        new_object(first.dim, _MIXED, 0, gamma),
        first.det_gamma * second.det_gamma,
    )


def _int_power(base: float, exponent: int) -> float:
    # repeated multiplication/division keeps integer powers of negative
    # determinants exact in sign
    out = 1.0
    for _ in range(abs(exponent)):
        out = out * base if exponent > 0 else out / base
    return out


def transform(t: TensorObject, f: Frame) -> TensorObject:
    """Apply the weighted transformation law to every slot of t.

    Upper slots contract with c, lower slots with gamma, and the result is
    scaled by det(gamma) ** t.weight.
    """
    if t.dim != f.dim:
        raise ShapeError(f"object has dim {t.dim}, frame has dim {f.dim}")
    arr = t.components
    c = f.c.components
    g = f.gamma.components
    for k, variance in enumerate(t.slots):
        if variance is UP:
            # x-bar^r = c^r_s x^s: sum the slot against c's column axis
            arr = np.moveaxis(np.tensordot(arr, c, axes=([k], [1])), -1, k)
        else:
            # a-bar_r = gamma^s_r a_s: sum the slot against gamma's row axis
            arr = np.moveaxis(np.tensordot(arr, g, axes=([k], [0])), -1, k)
    if t.weight != 0:
        arr = arr * _int_power(f.det_gamma, t.weight)
    # asarray(order="C") rather than ascontiguousarray: the latter promotes
    # rank-0 results to shape (1,)
    return TensorObject(t.dim, t.slots, t.weight, _frozen(np.asarray(arr, order="C")))


def transform_basis(f: Frame, basis: Sequence[TensorObject]) -> list[TensorObject]:
    """Map old basis vectors to the new frame's basis via gamma.

    Each vector is a rank-(0,1) object; the r-th new basis vector is
    gamma^s_r times the s-th old one.  Rejects dependent input.
    """
    if len(basis) != f.dim:
        raise ShapeError(f"expected {f.dim} basis vectors, got {len(basis)}")
    for e in basis:
        if not isinstance(e, TensorObject) or e.slots != (UP,):
            raise ShapeError(f"basis vectors must be rank-(0,1) objects, got {e!r}")
        if e.dim != f.dim:
            raise ShapeError(f"basis vector has dim {e.dim}, frame has dim {f.dim}")
    rows = np.stack([e.components for e in basis])
    as_matrix = new_object(f.dim, _MIXED, 0, rows)
    if abs(determinant(as_matrix)) <= singularity_threshold(as_matrix):
        raise SingularityError("basis vectors are linearly dependent")
    new_rows = f.gamma.components.T @ rows
    return [new_object(f.dim, (UP,), 0, new_rows[r]) for r in range(f.dim)]


def verify_transform_law(
    old: TensorObject,
    new: TensorObject,
    f: Frame,
    weight: int,
    tol: float = 1e-9,
) -> bool:
    """Check the weight-M law in both directions.

    Forward: new must equal the transform of old at the given weight.
    Backward: old must equal the transform of new under the inverse frame
    at the same weight.  True only when both hold within tol.
    """
    if old.dim != new.dim or old.slots != new.slots or old.weight != new.weight:
        raise ShapeError(f"signature mismatch: {old!r} vs {new!r}")
    forward = transform(replace(old, weight=weight), f)
    backward = transform(replace(new, weight=weight), inverse_frame(f))
    return bool(
        np.allclose(new.components, forward.components, rtol=tol, atol=tol)
        and np.allclose(old.components, backward.components, rtol=tol, atol=tol)
    )


def random_frame(
    rng: np.random.Generator, dim: int = 3, min_det: float = 0.1
) -> Frame:
    """Test helper: uniform [-1, 1] entries, resampled until |det| >= min_det."""
    while True:
        arr = rng.uniform(-1.0, 1.0, size=(dim, dim))
        candidate = new_object(dim, _MIXED, 0, arr)
        if abs(determinant(candidate)) >= min_det:
            return frame_from_matrix(candidate)
