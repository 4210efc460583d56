"""The induced Pauli channel of a boosted, axially-detected photon packet.

Averaging the linear-polarizer detection response over the packet's momentum
distribution turns the helicity qubit map into a Pauli channel.  Its three
Bloch eigenvalues are kernel-weighted angular integrals

    l1 = (2/N) int K(t) g5(t,p) / sqrt((1-cos^2 p sin^2 t)(1-sin^2 p sin^2 t))
    l2 = -(2/N) int K(t) g6(t,p) / (same square roots)
    l3 = (2/N) int K(t) g2(t,p) / (1-cos^2 p sin^2 t)

over t in [0, theta_c) x p in [0, 2*pi), normalized by N = the kernel's own
double integral.  Sign convention: l2 carries the minus sign above so that
the zero-spread limit is the identity channel, l -> (1,1,1); the keystone
consistency test (direct density-matrix integration against the Pauli form)
pins this choice.

Two evaluation routes exist for every azimuthal profile: adaptive quadrature
(the baseline and oracle) and closed forms in complete elliptic integrals;
the fast route must track the baseline to 1e-9 and is what parameter sweeps
use.  A notable consequence of the closed forms: the l3 profile vanishes
identically on the backward hemisphere t > pi/2.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, IntegrityError, NotAChannelError, RangeError
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, geometric_refinement, integrate
from .special_functions import _elliptic_ked, elliptic, erf_family, erfi, hyp2f2_11_52_3
from .wavepacket import PacketFrame, kernel_values, theta_breakpoints, theta_c

EULER_GAMMA = 0.5772156649015328606

# integration constant of the closed-form l3 antiderivative, fixed by the
# vanishing of N*l3 as Gamma -> 0 and validated against quadrature
LAMBDA3_CONSTANT = -4.0 * math.pi * (EULER_GAMMA + 1.0 + math.log(4.0))

# closed-form l3 loses the exponential-size cancellation fight in double
# precision beyond p = 1/Gamma^2 ~ 25
LAMBDA3_MIN_GAMMA = 0.2

SERIES_MIN_GAMMA = 3.0

_SIMPLEX_TOL = 1e-9

PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@dataclass(frozen=True)
class PauliProbs:
    """Probability vector over {I, X, Y, Z}; tiny negatives are clamped."""

    p0: float
    p1: float
    p2: float
    p3: float

    def __post_init__(self):
        vals = (self.p0, self.p1, self.p2, self.p3)
        if any(not math.isfinite(v) for v in vals):
            raise NotAChannelError(f"non-finite probability in {vals!r}")
        if min(vals) < -_SIMPLEX_TOL:
            raise NotAChannelError(f"probability {min(vals)!r} below -{_SIMPLEX_TOL}")
        if abs(sum(vals) - 1.0) > _SIMPLEX_TOL:
            raise NotAChannelError(f"probabilities sum to {sum(vals)!r}")
        for name, v in zip(("p0", "p1", "p2", "p3"), vals):
            if v < 0.0:
                object.__setattr__(self, name, 0.0)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.p0, self.p1, self.p2, self.p3)


@dataclass(frozen=True)
class PauliLambda:
    """Bloch-diagonal channel eigenvalues (action on the x, y, z axes)."""

    l1: float
    l2: float
    l3: float

    def __post_init__(self):
        vals = (self.l1, self.l2, self.l3)
        if any(not math.isfinite(v) for v in vals):
            raise NotAChannelError(f"non-finite eigenvalue in {vals!r}")
        if max(abs(v) for v in vals) > 1.0 + _SIMPLEX_TOL:
            raise NotAChannelError(f"eigenvalue outside [-1, 1]: {vals!r}")
        lambda_probs(self)  # complete positivity

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.l1, self.l2, self.l3)


@dataclass(frozen=True)
class QubitState:
    """Channel input angles (chi, xi).

    In this parametrization the input qubit carries the Bloch vector
    (sin chi sin xi, cos xi, cos chi sin xi); see :func:`state_density`.
    Both angles are unconstrained beyond finiteness.
    """

    chi: float
    xi: float

    def __post_init__(self):
        if not (math.isfinite(self.chi) and math.isfinite(self.xi)):
            raise DomainError(f"state angles must be finite, got {self!r}")


def lambda_probs(lam: PauliLambda | tuple) -> PauliProbs:
    """Pauli probabilities from eigenvalues: p0 = (1+l1+l2+l3)/4 etc."""
    l1, l2, l3 = lam.as_tuple() if isinstance(lam, PauliLambda) else lam
    return PauliProbs(
        0.25 * (1.0 + l1 + l2 + l3),
        0.25 * (1.0 + l1 - l2 - l3),
        0.25 * (1.0 - l1 + l2 - l3),
        0.25 * (1.0 - l1 - l2 + l3),
    )


def probs_lambda(p: PauliProbs) -> PauliLambda:
    """Inverse of :func:`lambda_probs`; the round trip is exact."""
    p0, p1, p2, p3 = p.as_tuple()
    return PauliLambda(p0 + p1 - p2 - p3, p0 - p1 + p2 - p3, p0 - p1 - p2 + p3)


def compose(a: PauliLambda, b: PauliLambda) -> PauliLambda:
    """Concatenation of Pauli channels: eigenvalues multiply componentwise."""
    return PauliLambda(a.l1 * b.l1, a.l2 * b.l2, a.l3 * b.l3)


def g_funcs(theta: float, phi: float) -> tuple[float, float, float, float, float, float]:
    """The six angular polynomials entering the output density matrix."""
    ct, st = math.cos(theta), math.sin(theta)
    cp, sp = math.cos(phi), math.sin(phi)
    c2p, s2p = math.cos(2.0 * phi), math.sin(2.0 * phi)
    g1 = 0.5 * (cp * cp * ct * ct + sp * sp)
    g2 = 0.5 * (cp * cp * c2p * ct * ct - c2p * sp * sp + ct * s2p * s2p)
    g3 = 0.5 * (sp * sp * ct * ct + cp * cp)
    g4 = 0.5 * (sp * sp * c2p * ct * ct - c2p * cp * cp - ct * s2p * s2p)
    g5 = 0.25 * (2.0 * c2p * c2p * ct + s2p * s2p + ct * ct * s2p * s2p)
    g6 = -0.5 * ct
    return g1, g2, g3, g4, g5, g6


PROFILE_KINDS = ("g1_cos", "g2_cos", "g3_sin", "g4_sin", "g5_sqrt", "g6_sqrt")


def _phi_integrand(kind: str, theta: float, phis: np.ndarray) -> np.ndarray:
    ct = math.cos(theta)
    u = math.sin(theta) ** 2
    cp2 = np.cos(phis) ** 2
    sp2 = 1.0 - cp2
    c2p = np.cos(2.0 * phis)
    s2p2 = np.sin(2.0 * phis) ** 2
    den_c = 1.0 - cp2 * u
    den_s = 1.0 - sp2 * u
    if kind == "g1_cos":
        return 0.5 * (cp2 * ct * ct + sp2) / den_c
    if kind == "g2_cos":
        return 0.5 * (cp2 * c2p * ct * ct - c2p * sp2 + ct * s2p2) / den_c
    if kind == "g3_sin":
        return 0.5 * (sp2 * ct * ct + cp2) / den_s
    if kind == "g4_sin":
        return 0.5 * (sp2 * c2p * ct * ct - c2p * cp2 - ct * s2p2) / den_s
    root = np.sqrt(den_c * den_s)
    if kind == "g5_sqrt":
        return 0.25 * (2.0 * c2p * c2p * ct + s2p2 + ct * ct * s2p2) / root
    if kind == "g6_sqrt":
        return -0.5 * ct / root
    raise DomainError(f"unknown profile kind {kind!r}")


def phi_profile(kind: str, theta: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Azimuthal integral of one g-kernel over [0, 2*pi) by adaptive quadrature.

    Every integrand is symmetric under phi -> -phi and phi -> pi - phi, so
    only [0, pi/2] is integrated.  Near t = pi/2 the denominators develop
    narrow layers of width |cos t| at the axes; geometric breakpoints seed
    them.
    """
    scale = max(abs(math.cos(theta)), 1e-13)
    half = math.pi / 2
    breaks = geometric_refinement(0.0, half, scale)
    breaks += [half - b for b in breaks]
    val, _ = integrate(lambda p: _phi_integrand(kind, theta, p), 0.0, half, cfg,
                       breakpoints=breaks)
    return 4.0 * val


def phi_profile_closed(kind: str, theta: float) -> float:
    """Closed form of :func:`phi_profile` via complete elliptic integrals.

    With u = sin^2 t, c = cos t and parameter m = (u/(2-u))^2:

        g1, g3:  pi                                (the integrands are 1/2)
        g2:      4 pi c/(1+c)^2 for c > 0, else 0
        g4:      the negative of g2's profile
        g5:      (2/(2-u)) [2 c D(m) + (1+c^2)(K(m) - D(m))]
        g6:      -4 c K(m)/(2-u)

    where D(m) = (K-E)/m is evaluated cancellation-free.  Logarithmically
    divergent (integrably) at t = pi/2 for g5 and g6.
    """
    if kind == "g1_cos" or kind == "g3_sin":
        return math.pi
    c = math.cos(theta)
    if kind == "g2_cos" or kind == "g4_sin":
        v = 4.0 * math.pi * c / (1.0 + c) ** 2 if c > 0.0 else 0.0
        return v if kind == "g2_cos" else -v
    u = math.sin(theta) ** 2
    m = (u / (2.0 - u)) ** 2
    K, _E, D = _elliptic_ked(m)
    if kind == "g6_sqrt":
        return -4.0 * c * K / (2.0 - u)
    if kind == "g5_sqrt":
        return (2.0 / (2.0 - u)) * (2.0 * c * D + (1.0 + c * c) * (K - D))
    raise DomainError(f"unknown profile kind {kind!r}")


def _cfg_key(cfg: QuadratureConfig) -> tuple:
    return (cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions)


@functools.lru_cache(maxsize=512)
def _frame_integrals(gamma: float, zeta: float, cfg_key: tuple, method: str) -> dict:
    """Kernel-weighted angular integrals of all six profiles, plus N."""
    cfg = QuadratureConfig(*cfg_key)
    frame = PacketFrame(gamma, zeta)
    tc = theta_c(zeta)
    breaks = theta_breakpoints(frame)
    # The azimuthal integrals sit inside a kernel-weighted polar integral, so
    # their absolute error enters the result damped by ~1/pi; an absolute
    # floor of 1e-10 keeps the error estimator off its roundoff stall in the
    # near-singular layer at t = pi/2 without moving any stated tolerance.
    inner_cfg = QuadratureConfig(max(cfg.abs_tol, 1e-10), cfg.rel_tol,
                                 cfg.max_subdivisions)
    if method == "quadrature":
        profile = lambda kind, t: phi_profile(kind, t, inner_cfg)  # noqa: E731
    elif method == "closed_profile":
        profile = lambda kind, t: phi_profile_closed(kind, t)  # noqa: E731
    else:
        raise DomainError(f"unknown lambda method {method!r}")

    out = {}
    for kind in PROFILE_KINDS:
        def outer(ts: np.ndarray, kind=kind) -> np.ndarray:
            kv = kernel_values(ts, frame)
            vals = np.zeros_like(kv)
            live = kv > 0.0
            for i in np.nonzero(live)[0]:
                vals[i] = kv[i] * profile(kind, float(ts[i]))
            return vals

        out[kind], _ = integrate(outer, 0.0, tc, cfg, breakpoints=breaks)
    n_val, _ = integrate(lambda ts: kernel_values(ts, frame), 0.0, tc, cfg,
                         breakpoints=breaks)
    out["norm"] = 2.0 * math.pi * n_val
    return out


def lambda_numeric(frame: PacketFrame, cfg: QuadratureConfig = DEFAULT_CONFIG,
                   method: str = "quadrature") -> PauliLambda:
    """Channel eigenvalues by angular integration.

    ``method="quadrature"`` is the baseline (azimuthal integrals by adaptive
    quadrature at every polar node); ``method="closed_profile"`` replaces
    the azimuthal integrals with their elliptic closed forms and is used by
    sweeps and solvers.  Eigenvalue excursions past [-1, 1] or outside the
    probability simplex beyond 1e-9 raise IntegrityError; smaller ones are
    clamped (quadrature noise).
    """
    ints = _frame_integrals(frame.gamma, frame.zeta, _cfg_key(cfg), method)
    n = ints["norm"]
    raw = (2.0 * ints["g5_sqrt"] / n,
           -2.0 * ints["g6_sqrt"] / n,
           2.0 * ints["g2_cos"] / n)
    clipped = tuple(min(1.0, max(-1.0, v)) for v in raw)
    if max(abs(r - c) for r, c in zip(raw, clipped)) > _SIMPLEX_TOL:
        raise IntegrityError(f"channel eigenvalues outside [-1,1]: {raw!r}")
    try:
        return PauliLambda(*clipped)
    except NotAChannelError as exc:
        raise IntegrityError(f"complete positivity violated at {frame!r}: {exc}") from exc


def _full_azimuth_integral(kind: str, frame: PacketFrame, cfg: QuadratureConfig) -> float:
    """Kernel-weighted profile integral with the azimuth over the full period.

    Unlike the quarter-period reduction in :func:`phi_profile`, nothing here
    exploits the reflection symmetry relating the two identity integrands,
    so the two sides of each identity go through genuinely independent
    subdivision histories.
    """
    tc = theta_c(frame.zeta)
    inner_cfg = QuadratureConfig(max(cfg.abs_tol, 1e-10), cfg.rel_tol,
                                 cfg.max_subdivisions)
    quarter = math.pi / 2
    axes = [k * quarter for k in range(5)]

    def prof(theta: float) -> float:
        scale = max(abs(math.cos(theta)), 1e-13)
        breaks = []
        for ax in axes:
            stack = geometric_refinement(0.0, quarter, scale)
            breaks.extend(ax + b for b in stack)
            breaks.extend(ax - b for b in stack)
        breaks.extend(axes[1:4])
        val, _ = integrate(lambda ph: _phi_integrand(kind, theta, ph),
                           0.0, 2.0 * math.pi, inner_cfg,
                           breakpoints=[b for b in breaks if 0.0 < b < 2.0 * math.pi])
        return val

    def outer(ts: np.ndarray) -> np.ndarray:
        kv = kernel_values(ts, frame)
        vals = np.zeros_like(kv)
        for i in np.nonzero(kv > 0.0)[0]:
            vals[i] = kv[i] * prof(float(ts[i]))
        return vals

    val, _ = integrate(outer, 0.0, tc, cfg, breakpoints=theta_breakpoints(frame))
    return val


def identity_residuals(frame: PacketFrame,
                       cfg: QuadratureConfig = DEFAULT_CONFIG) -> tuple[float, float]:
    """|LHS - RHS| of the two diagonal-consistency identities.

    The first identity's integrands are pointwise equal (each reduces to
    K/2); the second pair agrees only after a quarter-turn shift of the
    azimuth.  Each of the four double integrals is evaluated by its own
    full-azimuth adaptive quadrature.
    """
    r1 = abs(_full_azimuth_integral("g1_cos", frame, cfg)
             - _full_azimuth_integral("g3_sin", frame, cfg))
    r2 = abs(_full_azimuth_integral("g2_cos", frame, cfg)
             + _full_azimuth_integral("g4_sin", frame, cfg))
    return r1, r2


def apply_pauli(lam: PauliLambda, state: QubitState) -> np.ndarray:
    """Closed-form channel output for a pure input state."""
    cs = math.cos(state.chi) * math.sin(state.xi)
    ss = math.sin(state.chi) * math.sin(state.xi)
    cx = math.cos(state.xi)
    return 0.5 * np.array([
        [1.0 + lam.l3 * cs, lam.l1 * ss - 1j * lam.l2 * cx],
        [lam.l1 * ss + 1j * lam.l2 * cx, 1.0 - lam.l3 * cs],
    ])


def apply_pauli_matrix(lam: PauliLambda, rho: np.ndarray) -> np.ndarray:
    """Channel action sum_i p_i tau_i rho tau_i on an arbitrary 2x2 matrix."""
    p = lambda_probs(lam).as_tuple()
    rho = np.asarray(rho, dtype=complex)
    return sum(p[i] * (PAULI[i] @ rho @ PAULI[i]) for i in range(4))


def state_density(state: QubitState) -> np.ndarray:
    """Input density matrix in the channel's (chi, xi) parametrization.

    The channel acts diagonally on a pure state with Bloch vector
    (sin chi sin xi, cos xi, cos chi sin xi); this is the matrix the closed
    form reproduces at unit eigenvalues.  (The mapping from logical qubit
    amplitudes to this helicity-frame vector is part of the packet
    preparation, not of the channel.)
    """
    cs = math.cos(state.chi) * math.sin(state.xi)
    ss = math.sin(state.chi) * math.sin(state.xi)
    cx = math.cos(state.xi)
    return 0.5 * (PAULI[0] + ss * PAULI[1] + cx * PAULI[2] + cs * PAULI[3])


def rho_direct(state: QubitState, frame: PacketFrame,
               cfg: QuadratureConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Output density matrix by direct integration of its three components.

    The state enters each component integrand linearly through cos(chi)
    sin(xi), sin(chi) sin(xi) and cos(xi), so the kernel-weighted profile
    integrals are evaluated once per frame and combined per state; this is
    the same integral, split by linearity.  Hermitian by construction; the
    trace equals 1 only by virtue of the diagonal-consistency identities,
    making it a genuine check rather than an enforced normalization.
    """
    ints = _frame_integrals(frame.gamma, frame.zeta, _cfg_key(cfg), "quadrature")
    n = ints["norm"]
    cs = math.cos(state.chi) * math.sin(state.xi)
    ss = math.sin(state.chi) * math.sin(state.xi)
    cx = math.cos(state.xi)
    r00 = (ints["g1_cos"] + cs * ints["g2_cos"]) / n
    r11 = (ints["g3_sin"] + cs * ints["g4_sin"]) / n
    r01 = (ss * ints["g5_sqrt"] + 1j * cx * ints["g6_sqrt"]) / n
    return np.array([[r00, r01], [np.conj(r01), r11]])


def lambda3_bracket(p: float) -> float:
    """Antiderivative bracket of the closed-form l3 at rest, before the constant.

    (4*pi/3) [ 2 p^2 2F2(1,1;5/2,3;p)
               + 3 ( -pi (2p-1) erfi(sqrt p) + 2 sqrt(pi p) e^p
                     - log p + 2 p (euler_gamma - 3 + log 4p) ) ]

    The erfi term is the real rewriting of an error function of imaginary
    argument.  As p grows the bracket tends to -LAMBDA3_CONSTANT; the
    exponentially large pieces cancel, which is what limits the validated
    range in double precision.
    """
    if not (math.isfinite(p) and p > 0):
        raise DomainError(f"bracket requires p > 0, got {p!r}")
    sq = math.sqrt(p)
    tail = (-math.pi * (2.0 * p - 1.0) * erfi(sq)
            + 2.0 * math.sqrt(math.pi * p) * math.exp(p)
            - math.log(p) + 2.0 * p * (EULER_GAMMA - 3.0 + math.log(4.0 * p)))
    return (4.0 * math.pi / 3.0) * (2.0 * p * p * hyp2f2_11_52_3(p) + 3.0 * tail)


def lambda3_closed(gamma: float) -> float:
    """Closed-form l3 of the rest-frame channel (zeta = 0).

    l3 = (bracket(p) + LAMBDA3_CONSTANT) / N with p = 1/Gamma^2 and
    N = pi^{3/2} Gamma erfcx(1/Gamma).  Validated for gamma >= 0.2; smaller
    spreads push p past the double-precision cancellation budget and raise
    RangeError (callers fall back to the quadrature path).
    """
    if not (math.isfinite(gamma) and gamma > 0):
        raise DomainError(f"packet spread must be positive, got {gamma!r}")
    if gamma < LAMBDA3_MIN_GAMMA:
        raise RangeError(
            f"closed-form l3 validated for gamma >= {LAMBDA3_MIN_GAMMA}, got {gamma!r}")
    p = 1.0 / (gamma * gamma)
    n = math.pi ** 1.5 * gamma * erf_family(1.0 / gamma).erfcx
    return (lambda3_bracket(p) + LAMBDA3_CONSTANT) / n


def _q_polynomials(s: float) -> tuple[float, float, float, float]:
    r = math.sqrt(1.0 + s)
    s2 = s * s
    q1 = -2.0 * r / s2 + 2.0 / (s2 * (1.0 + s)) + 3.0 / (s * (1.0 + s)) + 1.0 / (1.0 + s)
    q2 = (2.0 / (s2 * r) - 2.0 / (s2 * (1.0 + s)) + 2.0 / (s * r) + 0.5 / r
          - 3.0 / (s * (1.0 + s)) - 1.0 / (1.0 + s))
    q3 = -2.0 / s2 + 2.0 / (s2 * r) - 1.0 / s + 2.0 / (s * r) + 0.5 / r
    q4 = 2.0 / s2 - 2.0 / (s2 * r) + 1.0 / s - 2.0 / (s * r)
    return q1, q2, q3, q4


def _kappa_integrand_q(s: float) -> float:
    """Rational-coefficient elliptic combination; 1/s^2 poles cancel pairwise."""
    q1, q2, q3, q4 = _q_polynomials(s)
    em = elliptic(-s * s / (4.0 * (1.0 + s)))
    ep = elliptic((s / (2.0 + s)) ** 2)
    return q1 * em.E + q2 * em.K + q3 * ep.E + q4 * ep.K


def _kappa_integrand_stable(s: float) -> float:
    """Pole-free regrouping: 2 K/(1+r)^2 + (2+s) E/(r (1+r)^2), r = sqrt(1+s)."""
    r = math.sqrt(1.0 + s)
    ep = elliptic((s / (2.0 + s)) ** 2)
    return 2.0 * ep.K / (1.0 + r) ** 2 + (2.0 + s) * ep.E / (r * (1.0 + r) ** 2)


def _iota_integrand(s: float) -> float:
    """2 K((s/(2+s))^2)/(2+s), equivalently K(-s^2/(4(1+s)))/sqrt(1+s)."""
    if s == 0.0:
        return 0.5 * math.pi
    return 2.0 * elliptic((s / (2.0 + s)) ** 2).K / (2.0 + s)


_Q_SWITCH = 0.05
_Q_CHECKPOINTS = (0.08, 0.4, 2.0)


def _kappa_integrand(s: float) -> float:
    if s == 0.0:
        return 0.5 * math.pi
    if s < _Q_SWITCH:
        return _kappa_integrand_stable(s)
    return _kappa_integrand_q(s)


def _check_pole_cancellation() -> None:
    for s in _Q_CHECKPOINTS:
        a, b = _kappa_integrand_q(s), _kappa_integrand_stable(s)
        if abs(a - b) > 1e-9 * abs(b):
            raise IntegrityError(
                f"pole cancellation failure in the elliptic moment integrand at s={s}: "
                f"{a!r} vs {b!r}")


def series_coeffs(kind: str, n: int, L: float,
                  cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Moment coefficients of the large-spread expansion of l1 (kappa) and l2 (iota).

    coefficient_n = ((-1)^n / n!) * int_0^L s^n * integrand(s) ds.  They are
    independent of the packet spread; the inverse-square-spread powers
    multiply them in :func:`lambda12_series`.  The integrand grows like
    sqrt(s), so the coefficients themselves grow with L; only the
    spread-weighted series has a meaningful L -> inf limit.
    """
    if kind not in ("kappa", "iota"):
        raise DomainError(f"series kind must be 'kappa' or 'iota', got {kind!r}")
    if n < 0 or n != int(n):
        raise DomainError(f"moment order must be a non-negative integer, got {n!r}")
    if not (math.isfinite(L) and L > 0):
        raise DomainError(f"truncation length must be positive, got {L!r}")
    if kind == "kappa":
        _check_pole_cancellation()
        base = _kappa_integrand
    else:
        base = _iota_integrand

    def f(ss: np.ndarray) -> np.ndarray:
        return np.array([s ** n * base(float(s)) for s in ss])

    val, _ = integrate(f, 0.0, L, cfg, breakpoints=[min(1.0, 0.5 * L)])
    return ((-1.0) ** n / math.factorial(n)) * val


def lambda12_series(gamma: float, n_max: int, L: float | None = None,
                    cfg: QuadratureConfig = DEFAULT_CONFIG) -> tuple[float, float]:
    """Truncated large-spread expansion of (l1, l2) at rest.

    lam_i ~ (2/N) sum_{n=0}^{n_max} Gamma^{-2n} * coefficient_n(L).  The
    default truncation length L = 2.5 Gamma^2 balances the neglected tail
    e^{-L/Gamma^2} against the divergence of the truncated exponential
    expansion on [0, L]; agreement with the quadrature eigenvalues improves
    as n_max grows until that floor is reached.  Validated regime:
    gamma >= 3.
    """
    if not (math.isfinite(gamma) and gamma > 0):
        raise DomainError(f"packet spread must be positive, got {gamma!r}")
    if gamma < SERIES_MIN_GAMMA:
        raise RangeError(
            f"series expansion validated for gamma >= {SERIES_MIN_GAMMA}, got {gamma!r}")
    if n_max < 0:
        raise DomainError(f"n_max must be non-negative, got {n_max!r}")
    if L is None:
        L = 2.5 * gamma * gamma
    p = 1.0 / (gamma * gamma)
    n_norm = math.pi ** 1.5 * gamma * erf_family(1.0 / gamma).erfcx
    l1 = sum(p ** n * series_coeffs("kappa", n, L, cfg) for n in range(n_max + 1))
    l2 = sum(p ** n * series_coeffs("iota", n, L, cfg) for n in range(n_max + 1))
    return 2.0 * l1 / n_norm, 2.0 * l2 / n_norm
