"""Capacity functionals of Pauli channels and the boost/spread threshold solvers.

For a Pauli channel with Bloch eigenvalues (l1, l2, l3) and probabilities
(p0..p3):

- classical capacity      C = 1 - H2((1 + max_i |l_i|)/2)
- hashing (random-coding) lower bound on the quantum capacity
                          Q_raw = 1 - H(p0, p1, p2, p3), clamped at 0
- no-cloning indicator    c0 = p1+p2+p3 + sqrt(p1 p2) + sqrt(p2 p3) + sqrt(p1 p3);
                          c0 >= 1/2 certifies exactly zero quantum capacity
- entanglement breaking   iff the partial transpose of the Choi matrix is
                          positive semidefinite (qubit channels)

The two theorems are mutually consistent: whenever c0 >= 1/2 the hashing
bound cannot be positive, and the report constructor enforces that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import (PacketFrame, PauliLambda, PauliProbs, apply_pauli_matrix,
                      compose, lambda_numeric, lambda_probs, probs_lambda)
from .errors import IntegrityError, PreconditionError, ThresholdNotFoundError
from .errors import DomainError
from .quadrature import DEFAULT_CONFIG, QuadratureConfig
from .special_functions import entropy

CERF_THRESHOLD = 0.5
_EB_EIG_TOL = 1e-10


@dataclass(frozen=True)
class CapacityReport:
    """All capacity bounds of one channel; hashing is the clamped lower bound."""

    classical: float
    hashing_raw: float
    hashing: float
    cerf: float
    cerf_zero_capacity: bool
    entanglement_breaking: bool


@dataclass(frozen=True)
class Eq7Report:
    """Composite no-unrotation channel check: depolarizing after a one-Pauli map."""

    depolarizing_strength: float
    hashing_p2_raw: float
    cerf_p2: float
    cerf_composite: float
    composite_zero_capacity: bool


def classical_capacity(lam: PauliLambda) -> float:
    """1 - H2(x) with x = (1 + max_i |l_i|)/2 (unital qubit channel formula)."""
    x = 0.5 * (1.0 + max(abs(v) for v in lam.as_tuple()))
    return 1.0 - entropy((x, 1.0 - x))


def hashing_bound(p: PauliProbs) -> tuple[float, float]:
    """(raw, clamped) hashing bound 1 - H(p); raw may be negative."""
    raw = 1.0 - entropy(p.as_tuple())
    return raw, max(0.0, raw)


def cerf_indicator(p: PauliProbs) -> float:
    p0, p1, p2, p3 = p.as_tuple()
    return (p1 + p2 + p3 + math.sqrt(p1 * p2) + math.sqrt(p2 * p3)
            + math.sqrt(p1 * p3))


def choi_matrix(lam: PauliLambda) -> np.ndarray:
    """Choi operator: channel applied to half of a maximally entangled pair."""
    out = np.zeros((4, 4), dtype=complex)
    for a in range(2):
        for c in range(2):
            basis = np.zeros((2, 2), dtype=complex)
            basis[a, c] = 1.0
            block = apply_pauli_matrix(lam, basis)
            out[2 * a: 2 * a + 2, 2 * c: 2 * c + 2] = 0.5 * block
    return out


def is_entanglement_breaking(lam: PauliLambda) -> bool:
    """Positive partial transpose of the Choi matrix (min eigenvalue >= -1e-10)."""
    choi = choi_matrix(lam).reshape(2, 2, 2, 2)
    pt = choi.transpose(0, 3, 2, 1).reshape(4, 4)
    eigs = np.linalg.eigvalsh(pt)
    return bool(eigs.min() >= -_EB_EIG_TOL)


def capacity_report(lam: PauliLambda) -> CapacityReport:
    """Assemble all bounds.

    The no-cloning indicator certifies zero capacity for channels whose
    identity component dominates (always the case for channels this package
    produces); for those, a zero-capacity flag is incompatible with a
    positive hashing bound, which the verification suite asserts on the
    produced family.  For arbitrary hand-built channels (e.g. a near-unitary
    flip, p1 ~ 1) the indicator does not apply and the report simply records
    both numbers.
    """
    p = lambda_probs(lam)
    raw, clamped = hashing_bound(p)
    cerf = cerf_indicator(p)
    zero = cerf >= CERF_THRESHOLD
    return CapacityReport(
        classical=classical_capacity(lam),
        hashing_raw=raw,
        hashing=clamped,
        cerf=cerf,
        cerf_zero_capacity=zero,
        entanglement_breaking=is_entanglement_breaking(lam),
    )


def frame_report(gamma: float, zeta: float, cfg: QuadratureConfig = DEFAULT_CONFIG,
                 method: str = "closed_profile") -> tuple[PauliLambda, CapacityReport]:
    lam = lambda_numeric(PacketFrame(gamma, zeta), cfg, method)
    return lam, capacity_report(lam)


def _hashing_raw_at(zeta: float, gamma: float, cfg: QuadratureConfig, method: str) -> float:
    lam = lambda_numeric(PacketFrame(gamma, zeta), cfg, method)
    return hashing_bound(lambda_probs(lam))[0]


def boost_threshold(gamma: float, cfg: QuadratureConfig = DEFAULT_CONFIG,
                    method: str = "closed_profile", zeta_min: float = -10.0,
                    zeta_tol: float = 1e-4) -> float:
    """Rapidity at which the raw hashing bound of a zero-capacity packet crosses 0.

    Bisects on zeta in [zeta_min, 0].  Requires the rest-frame channel to
    have a non-positive raw hashing bound (otherwise there is nothing to
    boost past) and validates that the bound decreases monotonically along
    the bracketing samples toward zeta = 0.
    """
    f0 = _hashing_raw_at(0.0, gamma, cfg, method)
    if f0 > 0.0:
        raise PreconditionError(
            f"hashing bound already positive at rest ({f0!r}); no boost threshold")
    fmin = _hashing_raw_at(zeta_min, gamma, cfg, method)
    if fmin <= 0.0:
        raise ThresholdNotFoundError(
            f"no sign change of the hashing bound on [{zeta_min}, 0]")
    samples = [zeta_min, 0.75 * zeta_min, 0.5 * zeta_min, 0.25 * zeta_min, 0.0]
    values = [fmin] + [_hashing_raw_at(z, gamma, cfg, method) for z in samples[1:-1]] + [f0]
    for a, b in zip(values, values[1:]):
        if b > a + 1e-9:
            raise IntegrityError(
                f"hashing bound not monotone on the bracketing samples: {values!r}")
    lo, hi = zeta_min, 0.0      # raw > 0 at lo, <= 0 at hi
    while hi - lo > zeta_tol:
        mid = 0.5 * (lo + hi)
        if _hashing_raw_at(mid, gamma, cfg, method) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def gamma_threshold(zeta: float, cfg: QuadratureConfig = DEFAULT_CONFIG,
                    method: str = "closed_profile",
                    inv_gamma_range: tuple[float, float] = (1e-4, 2.0),
                    rel_tol: float = 1e-4) -> float:
    """Inverse spread 1/Gamma at which the no-cloning indicator crosses 1/2.

    The indicator decreases with 1/Gamma (less noise); bisection on
    [inv_gamma_range] to the requested relative tolerance.
    """
    def margin(inv_gamma: float) -> float:
        lam = lambda_numeric(PacketFrame(1.0 / inv_gamma, zeta), cfg, method)
        return cerf_indicator(lambda_probs(lam)) - CERF_THRESHOLD

    lo, hi = inv_gamma_range
    mlo, mhi = margin(lo), margin(hi)
    if not (mlo > 0.0 > mhi):
        raise ThresholdNotFoundError(
            f"no-cloning indicator does not cross 1/2 on {inv_gamma_range!r} "
            f"(margins {mlo!r}, {mhi!r})")
    while (hi - lo) > rel_tol * 0.5 * (hi + lo):
        mid = 0.5 * (lo + hi)
        if margin(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


ONE_PAULI_Y = probs_lambda(PauliProbs(0.5, 0.0, 0.5, 0.0))


def eq7_check(depolarizing_strength: float) -> Eq7Report:
    """Zero quantum capacity of the composite channel without the unrotation.

    The detection channel of an un-prepared packet factors as a depolarizing
    channel after a one-Pauli channel with p = (1/2, 0, 1/2, 0).  The
    one-Pauli factor has hashing bound exactly 0 (equal to its quantum
    capacity), so the bottleneck inequality forces the composite's capacity
    to 0; the report confirms it via the no-cloning indicator.
    """
    c = float(depolarizing_strength)
    if not (0.0 <= c <= 1.0):
        raise DomainError(f"depolarizing strength must lie in [0, 1], got {c!r}")
    depol = PauliLambda(c, c, c)
    p2 = lambda_probs(ONE_PAULI_Y)
    raw_p2, _ = hashing_bound(p2)
    composite = compose(depol, ONE_PAULI_Y)
    cerf_comp = cerf_indicator(lambda_probs(composite))
    return Eq7Report(
        depolarizing_strength=c,
        hashing_p2_raw=raw_p2,
        cerf_p2=cerf_indicator(p2),
        cerf_composite=cerf_comp,
        composite_zero_capacity=cerf_comp >= CERF_THRESHOLD,
    )
