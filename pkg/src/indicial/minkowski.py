"""Minkowski products, Lorentz-condition checks, boosts, rapidities.

Four-vectors are length-4 arrays (index 0 is the time component) and
transformation matrices are 4x4 arrays, row = upper index.  The metric
signature is (+, -, -, -).

Two boost parameterizations are provided.  ``boost(beta)`` has off-diagonal
entries -beta*gamma; ``boost_from_rapidity(psi)`` has off-diagonal entries
+sinh(psi).  With rapidity(beta) = artanh(beta) (so sinh psi =
beta/sqrt(1-beta^2) and cosh psi = 1/sqrt(1-beta^2)), the two agree as

    boost(beta) == boost_from_rapidity(-rapidity(beta))

i.e. the conventions differ by the sign of the rapidity argument.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import ShapeError, SuperluminalError

ETA = np.diag([1.0, -1.0, -1.0, -1.0])
ETA.setflags(write=False)

_CONDITION_TOL = 1e-9


def _as_four_vector(x: Sequence[float]) -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.shape != (4,):
        raise ShapeError(f"a four-vector needs exactly 4 components, got {arr.shape}")
    return arr


def _as_matrix(c: Sequence[Sequence[float]]) -> np.ndarray:
    arr = np.asarray(c, dtype=np.float64)
    if arr.shape != (4, 4):
        raise ShapeError(f"a transformation matrix must be 4x4, got {arr.shape}")
    return arr


def mink_product(x: Sequence[float], y: Sequence[float]) -> float:
    """x0*y0 - x1*y1 - x2*y2 - x3*y3."""
    xv = _as_four_vector(x)
    yv = _as_four_vector(y)
    return float(xv[0] * yv[0] - xv[1] * yv[1] - xv[2] * yv[2] - xv[3] * yv[3])


def is_lorentz(c: Sequence[Sequence[float]], tol: float = _CONDITION_TOL) -> bool:
    """Componentwise orthogonality condition on the matrix columns.

    For every column pair (s, r): c^0_s c^0_r - sum_i c^i_s c^i_r must be
    0 for s != r, 1 for s == r == 0, and -1 for s == r != 0.
    """
    m = _as_matrix(c)
    for s in range(4):
        for r in range(4):
            value = m[0, s] * m[0, r] - m[1, s] * m[1, r] - m[2, s] * m[2, r] - m[3, s] * m[3, r]
            expected = 0.0 if s != r else (1.0 if s == 0 else -1.0)
            if abs(value - expected) > tol:
                return False
    return True


def eta_residual(c: Sequence[Sequence[float]]) -> float:
    """Independent check: max |C^T eta C - eta|.

    Zero exactly when the componentwise condition holds; the two routes are
    required to agree and tests pin that equivalence.
    """
    m = _as_matrix(c)
    return float(np.max(np.abs(m.T @ ETA @ m - ETA)))


def preserves_product(
    c: Sequence[Sequence[float]], tol: float = _CONDITION_TOL
) -> bool:
    """eta-conjugation form of the Lorentz condition."""
    return eta_residual(c) <= tol


def apply_matrix(c: Sequence[Sequence[float]], x: Sequence[float]) -> np.ndarray:
    """New components of a four-vector: x-bar^r = c^r_s x^s."""
    return _as_matrix(c) @ _as_four_vector(x)


def _check_beta(beta: float) -> float:
    beta = float(beta)
    if not abs(beta) < 1.0:
        raise SuperluminalError(f"|beta| must be < 1, got {beta}")
    return beta


def boost(beta: float) -> np.ndarray:
    """Velocity-parameterized boost along axis 1.

    The 2x2 time-x block is [[g, -b*g], [-b*g, g]] with g = 1/sqrt(1-b^2);
    the spatial y/z block is the identity.
    """
    beta = _check_beta(beta)
    g = 1.0 / math.sqrt(1.0 - beta * beta)
    m = np.eye(4)
    m[0, 0] = g
    m[0, 1] = -beta * g
    m[1, 0] = -beta * g
    m[1, 1] = g
    m.setflags(write=False)
    return m


def rapidity(beta: float) -> float:
    """artanh(beta): the additive boost parameter."""
    beta = _check_beta(beta)
    return math.atanh(beta)


def boost_from_rapidity(psi: float) -> np.ndarray:
    """Rapidity-parameterized boost along axis 1.

    The 2x2 time-x block is [[cosh psi, sinh psi], [sinh psi, cosh psi]].
    Rapidities add under composition:
    boost_from_rapidity(a) @ boost_from_rapidity(b) ==
    boost_from_rapidity(a + b).
    """
    psi = float(psi)
    m = np.eye(4)
    m[0, 0] = math.cosh(psi)
    m[0, 1] = math.sinh(psi)
    m[1, 0] = math.sinh(psi)
    m[1, 1] = math.cosh(psi)
    m.setflags(write=False)
    return m
