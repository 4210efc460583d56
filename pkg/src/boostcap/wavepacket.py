"""Boosted axially-symmetric wave packet: kernel, cutoff angle, normalization.

The squared envelope of the boosted packet, after the narrow longitudinal
spread is integrated out, depends on the polar angle through

    D(t)        = sinh(zeta) + cosh(zeta) cos(t)
    kernel K(t) = exp(-sin^2 t / (Gamma^2 D^2)) * sin(t) / D^2

supported on t in [0, theta_c) with theta_c = arccos(-tanh zeta), the
aberration cutoff separating forward- from backward-propagating components.
All exponentials are evaluated in log space: the t -> theta_c endpoint is an
exp(-inf) * inf form that must resolve to 0, never NaN.

Conventions: ``normalization`` is the plain double integral of the kernel
over [0, theta_c) x [0, 2*pi); every constant prefactor of the momentum
measure is dropped, since all channel quantities downstream are ratios of
such integrals.  Closed form (validated against quadrature to machine
precision and invariant under the boost): pi^{3/2} Gamma erfcx(1/Gamma).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .quadrature import (DEFAULT_CONFIG, QuadratureConfig, geometric_refinement,
                         integrate, integrate_semi_infinite)
from .special_functions import erf_family

_LOG_TINY = -745.0  # exp underflows to 0 below this


@dataclass(frozen=True)
class PacketFrame:
    """Dimensionless radial spread Gamma = sigma/k_p and boost rapidity."""

    gamma: float
    zeta: float

    def __post_init__(self):
        if not (math.isfinite(self.gamma) and self.gamma > 0):
            raise DomainError(f"packet spread must be positive and finite, got {self.gamma!r}")
        if not math.isfinite(self.zeta):
            raise DomainError(f"rapidity must be finite, got {self.zeta!r}")


def theta_c(zeta: float) -> float:
    """Aberration cutoff angle arccos(-tanh zeta); pi/2 at rest, increasing in zeta."""
    if not math.isfinite(zeta):
        raise DomainError(f"rapidity must be finite, got {zeta!r}")
    return math.acos(-math.tanh(zeta))


def d_values(thetas: np.ndarray, zeta: float) -> np.ndarray:
    """sinh(zeta) + cosh(zeta) cos(theta), evaluated as e^zeta - 2 cosh(zeta)
    sin^2(theta/2) so the cancellation approaching the cutoff keeps absolute
    accuracy ~eps * e^zeta instead of ~eps * cosh(zeta)."""
    t = np.asarray(thetas, dtype=float)
    half_sin = np.sin(0.5 * t)
    return math.exp(zeta) - 2.0 * math.cosh(zeta) * half_sin * half_sin


def log_kernel_values(thetas: np.ndarray, frame: PacketFrame) -> np.ndarray:
    """log K on an array of angles assumed inside [0, theta_c); -inf where K = 0."""
    t = np.asarray(thetas, dtype=float)
    st = np.sin(t)
    d = d_values(t, frame.zeta)
    out = np.full(t.shape, -np.inf)
    ok = (d > 0.0) & (st > 0.0)
    g2 = frame.gamma * frame.gamma
    out[ok] = (-(st[ok] * st[ok]) / (g2 * d[ok] * d[ok])
               + np.log(st[ok]) - 2.0 * np.log(d[ok]))
    return out


def kernel_values(thetas: np.ndarray, frame: PacketFrame) -> np.ndarray:
    lk = log_kernel_values(thetas, frame)
    out = np.zeros_like(lk)
    live = lk > _LOG_TINY
    out[live] = np.exp(lk[live])
    return out


def kernel(theta: float, frame: PacketFrame) -> float:
    """K(theta) for theta in [0, theta_c); 0 at both endpoints, never NaN/inf."""
    theta = float(theta)
    if not math.isfinite(theta):
        raise DomainError(f"angle must be finite, got {theta!r}")
    tc = theta_c(frame.zeta)
    if not 0.0 <= theta < tc:
        raise DomainError(f"kernel defined on [0, {tc!r}), got {theta!r}")
    return float(kernel_values(np.array([theta]), frame)[0])


def theta_breakpoints(frame: PacketFrame) -> list[float]:
    """Initial partition of [0, theta_c) for the adaptive integrator.

    The kernel develops a layer of width ~Gamma e^zeta at 0 (narrow packets)
    and a spike of width ~1/(Gamma cosh zeta) below the cutoff (wide
    packets); geometric point stacks at both ends let the 7-15 pair find
    them regardless of the parameter regime.
    """
    tc = theta_c(frame.zeta)
    pts: set[float] = set()
    if tc > math.pi / 2:
        pts.add(math.pi / 2)
    scale_hi = min(tc, 1.0 / (frame.gamma * math.cosh(frame.zeta)))
    pts.update(geometric_refinement(0.0, tc, scale_hi))
    scale_lo = min(tc, frame.gamma * math.exp(frame.zeta))
    pts.update(tc - p for p in geometric_refinement(0.0, tc, scale_lo))
    return sorted(p for p in pts if 0.0 < p < tc)


def normalization(frame: PacketFrame, method: str = "quadrature",
                  cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Double integral of the kernel over [0, theta_c) x [0, 2*pi).

    The value is independent of the boost at fixed Gamma.  The closed form
    pi^{3/2} Gamma erfcx(1/Gamma) uses the scaled complementary error
    function so narrow packets (Gamma -> 0) do not underflow.
    """
    if method == "closed_form":
        g = frame.gamma
        return math.pi ** 1.5 * g * erf_family(1.0 / g).erfcx
    if method != "quadrature":
        raise DomainError(f"unknown normalization method {method!r}")
    tc = theta_c(frame.zeta)
    val, _ = integrate(lambda t: kernel_values(t, frame), 0.0, tc, cfg,
                       breakpoints=theta_breakpoints(frame))
    return 2.0 * math.pi * val


def trace_integrand(s: float, gamma: float) -> float:
    """exp(-s/Gamma^2) / (2 sqrt(1+s)); equals 1/2 at s = 0."""
    return math.exp(-s / (gamma * gamma)) / (2.0 * math.sqrt(1.0 + s))


def rest_frame_trace(gamma: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Unnormalized output-state trace at rest, as a radial-variable integral.

    Integrates exp(-s/Gamma^2)/(2 sqrt(1+s)) over s in [0, inf) via the
    s = tan^2 t substitution.  Up to the azimuthal factor, this is an
    independent route to the packet normalization:
    2*pi * rest_frame_trace(Gamma) == normalization(zeta=0, Gamma).
    """
    if not (math.isfinite(gamma) and gamma > 0):
        raise DomainError(f"packet spread must be positive and finite, got {gamma!r}")
    g2 = gamma * gamma

    def g(s: np.ndarray) -> np.ndarray:
        return np.exp(-s / g2) / (2.0 * np.sqrt(1.0 + s))

    val, _ = integrate_semi_infinite(g, cfg, breakpoints=[g2, 4 * g2, 16 * g2])
    return val


def log_envelope_sq(theta: float, frame: PacketFrame,
                    cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """log of the normalized squared envelope at polar angle theta.

    The envelope normalizer is half the kernel normalization (the azimuthal
    2*pi and the measure's 1/2 folded together under the dropped-constant
    convention).
    """
    theta = float(theta)
    tc = theta_c(frame.zeta)
    if not (math.isfinite(theta) and 0.0 <= theta < tc):
        raise DomainError(f"envelope defined on [0, {tc!r}), got {theta!r}")
    d = float(d_values(np.array([theta]), frame.zeta)[0])
    if d <= 0.0:
        return -math.inf
    n_env = 0.5 * normalization(frame, "closed_form", cfg)
    st = math.sin(theta)
    return -(st * st) / (frame.gamma ** 2 * d * d) - math.log(d) - math.log(n_env)


def envelope_sq(theta: float, frame: PacketFrame,
                cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    lv = log_envelope_sq(theta, frame, cfg)
    return 0.0 if lv < _LOG_TINY else math.exp(lv)
