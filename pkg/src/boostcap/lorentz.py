"""Four-vector algebra, standard boosts, and the massless little group.

Conventions (natural units, c = 1):

- metric eta = diag(+1, -1, -1, -1);
- ``boost_z(zeta)`` is the transformation whose *inverse* carries +sinh(zeta)
  in the time-space corners, so that applying ``boost_z(-log(omega))`` to the
  standard null vector (1,0,0,1) yields (omega,0,0,omega);
- the standard boost factors as L_p = R_z(phi) R_y(theta) B_z(-log omega),
  taking (1,0,0,1) to a null momentum with energy omega and direction
  (theta, phi);
- a massless little-group element W = L_{Lp}^-1 L L_p factors as a planar
  translation times a rotation about z, W = T(a1,a2) R(angle); the
  translation components sit in fixed linear matrix entries, which is how
  the decomposition reads them off without any matrix logarithm.

Angles are radians and rapidity is the boost parameter throughout; velocity
appears only at the CLI boundary via v = tanh(zeta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularConfigurationError

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
STANDARD_MOMENTUM = np.array([1.0, 0.0, 0.0, 1.0])

_METRIC_TOL = 1e-12
_NULL_TOL = 1e-12
_ENERGY_FLOOR = 1e-300


@dataclass(frozen=True)
class LittleGroupDecomposition:
    """Planar-translation + rotation factorization of a little-group element."""

    wigner_angle: float
    a1: float
    a2: float
    residual: float


def _require_finite(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


def metric_residual(matrix: np.ndarray) -> float:
    """Max elementwise deviation of M^T eta M from eta."""
    m = np.asarray(matrix, dtype=float)
    return float(np.abs(m.T @ METRIC @ m - METRIC).max())


def is_lorentz(matrix: np.ndarray, tol: float = _METRIC_TOL) -> bool:
    """Metric preservation within an absolute tolerance scaled by the matrix
    size: the products in M^T eta M round at ~eps * max|M|^2, so extreme
    boosts would fail a fixed absolute test while being exact by construction."""
    m = np.asarray(matrix, dtype=float)
    scale = max(1.0, float(np.abs(m).max()) ** 2)
    return metric_residual(m) <= tol * scale


def boost_z(zeta: float) -> np.ndarray:
    """Pure boost along z with rapidity zeta; metric-preserving by construction."""
    zeta = _require_finite(zeta, "rapidity")
    ch, sh = math.cosh(zeta), math.sinh(zeta)
    out = np.eye(4)
    out[0, 0] = out[3, 3] = ch
    out[0, 3] = out[3, 0] = -sh
    return out


def rotation(axis: str, angle: float) -> np.ndarray:
    """Spatial rotation about the y or z axis embedded in the Lorentz group."""
    angle = _require_finite(angle, "angle")
    c, s = math.cos(angle), math.sin(angle)
    out = np.eye(4)
    if axis == "y":
        out[1, 1] = c
        out[1, 3] = s
        out[3, 1] = -s
        out[3, 3] = c
    elif axis == "z":
        out[1, 1] = c
        out[1, 2] = -s
        out[2, 1] = s
        out[2, 2] = c
    else:
        raise DomainError(f"rotation axis must be 'y' or 'z', got {axis!r}")
    return out


def null_momentum(omega: float, theta: float, phi: float) -> np.ndarray:
    """Null four-momentum omega*(1, sin t cos p, sin t sin p, cos t)."""
    omega = _require_finite(omega, "omega")
    if omega <= 0:
        raise DomainError(f"photon energy must be positive, got {omega!r}")
    st, ct = math.sin(theta), math.cos(theta)
    return omega * np.array([1.0, st * math.cos(phi), st * math.sin(phi), ct])


def _check_null(p: np.ndarray) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.shape != (4,):
        raise DomainError(f"four-vector must have shape (4,), got {p.shape}")
    omega = p[0]
    if not np.all(np.isfinite(p)) or omega <= 0:
        raise DomainError("four-momentum must be finite with positive energy")
    if abs(omega * omega - p[1] ** 2 - p[2] ** 2 - p[3] ** 2) > _NULL_TOL * omega * omega:
        raise DomainError("four-momentum is not null within tolerance")
    return p


def standard_boost(p: np.ndarray) -> np.ndarray:
    """The transformation carrying the standard null vector (1,0,0,1) to p."""
    p = _check_null(p)
    omega = p[0]
    theta = math.atan2(math.hypot(p[1], p[2]), p[3])
    phi = math.atan2(p[2], p[1])
    return rotation("z", phi) @ rotation("y", theta) @ boost_z(-math.log(omega))


def _translation_times_rotation(a1: float, a2: float, angle: float) -> np.ndarray:
    asq = a1 * a1 + a2 * a2
    t = np.array([
        [1.0 + 0.5 * asq, a1, a2, -0.5 * asq],
        [a1, 1.0, 0.0, -a1],
        [a2, 0.0, 1.0, -a2],
        [0.5 * asq, a1, a2, 1.0 - 0.5 * asq],
    ])
    r = np.eye(4)
    r[1, 1] = r[2, 2] = math.cos(angle)
    r[1, 2] = -math.sin(angle)
    r[2, 1] = math.sin(angle)
    return t @ r


def little_group(lam: np.ndarray, p: np.ndarray) -> LittleGroupDecomposition:
    """Decompose W = L_{Lam p}^-1 Lam L_p into translation and rotation parts.

    The translation components are read from the fixed linear entries
    W[1,0], W[2,0] and the rotation angle from the spatial 2x2 block; the
    residual is the max deviation of the reconstructed product from W.
    """
    lam = np.asarray(lam, dtype=float)
    if lam.shape != (4, 4):
        raise DomainError("Lorentz matrix must be 4x4")
    if not is_lorentz(lam):
        raise DomainError("matrix does not preserve the Minkowski metric")
    p = _check_null(p)
    lp = lam @ p
    if lp[0] <= _ENERGY_FLOOR:
        raise SingularConfigurationError(
            f"transformed momentum energy {lp[0]!r} is non-positive; "
            "little-group decomposition undefined")
    w = np.linalg.inv(standard_boost(lp)) @ lam @ standard_boost(p)
    a1 = float(w[1, 0])
    a2 = float(w[2, 0])
    angle = math.atan2(w[2, 1], w[1, 1])
    residual = float(np.abs(_translation_times_rotation(a1, a2, angle) - w).max())
    return LittleGroupDecomposition(wigner_angle=angle, a1=a1, a2=a2, residual=residual)


def aberrated_angle(theta: float, zeta: float) -> float:
    """Polar angle seen by an observer with rapidity zeta.

    atan2 fixes the branch so 0 maps to 0, pi maps to pi, and the cutoff
    direction (where the denominator vanishes) maps to pi/2 continuously.
    """
    theta = _require_finite(theta, "theta")
    zeta = _require_finite(zeta, "rapidity")
    if not 0.0 <= theta <= math.pi:
        raise DomainError(f"polar angle must lie in [0, pi], got {theta!r}")
    s = math.sin(theta)
    d = math.sinh(zeta) + math.cosh(zeta) * math.cos(theta)
    if abs(s) < 1e-13 and abs(d) < 1e-13:
        raise SingularConfigurationError(
            "aberrated direction undefined: both sin(theta) and the "
            "denominator vanish")
    return math.atan2(s, d)
