"""Boosted photonic wave packets, the induced Pauli channel, and capacity bounds.

The pipeline: a localized photon packet (spread Gamma, boost rapidity zeta)
detected through linear polarizers realizes a Pauli channel on the helicity
qubit; this package computes the channel eigenvalues by adaptive quadrature
or elliptic closed forms, the classical capacity, the hashing lower bound
and the no-cloning upper indicator on the quantum capacity, and the boost
and spread thresholds where reliable quantum communication switches on.
"""

__version__ = "0.1.0"

from .capacity import (CapacityReport, Eq7Report, boost_threshold,
                       capacity_report, cerf_indicator, classical_capacity,
                       choi_matrix, eq7_check, frame_report, gamma_threshold,
                       hashing_bound, is_entanglement_breaking)
from .channel import (PacketFrame, PauliLambda, PauliProbs, QubitState,
                      apply_pauli, apply_pauli_matrix, compose, g_funcs,
                      identity_residuals, lambda12_series, lambda3_closed,
                      lambda_numeric, lambda_probs, probs_lambda, rho_direct,
                      series_coeffs)
from .errors import (BoostcapError, ConvergenceError, DomainError,
                     IntegrityError, NotAChannelError, PreconditionError,
                     RangeError, SingularConfigurationError,
                     ThresholdNotFoundError)
from .lorentz import (LittleGroupDecomposition, aberrated_angle, boost_z,
                      little_group, null_momentum, rotation, standard_boost)
from .quadrature import DEFAULT_CONFIG, SWEEP_CONFIG, QuadratureConfig
from .special_functions import (EllipticPair, ErfTriple, elliptic, entropy,
                                erf_family, hyp2f2_11_52_3)
from .sweep import RunManifest, SweepSpec, run_sweep
from .verify import VerifyReport, run_verify
from .wavepacket import (envelope_sq, kernel, normalization, rest_frame_trace,
                         theta_c)

__all__ = [
    "BoostcapError", "CapacityReport", "ConvergenceError", "DEFAULT_CONFIG",
    "DomainError", "EllipticPair", "Eq7Report", "ErfTriple", "IntegrityError",
    "LittleGroupDecomposition", "NotAChannelError", "PacketFrame",
    "PauliLambda", "PauliProbs", "PreconditionError", "QuadratureConfig",
    "QubitState", "RangeError", "RunManifest", "SWEEP_CONFIG",
    "SingularConfigurationError", "SweepSpec", "ThresholdNotFoundError",
    "VerifyReport", "aberrated_angle", "apply_pauli", "apply_pauli_matrix",
    "boost_threshold", "boost_z", "capacity_report", "cerf_indicator",
    "choi_matrix", "classical_capacity", "compose", "elliptic", "entropy",
    "envelope_sq", "eq7_check", "erf_family", "frame_report", "g_funcs",
    "gamma_threshold", "hashing_bound", "hyp2f2_11_52_3",
    "identity_residuals", "is_entanglement_breaking", "kernel",
    "lambda12_series", "lambda3_closed", "lambda_numeric", "lambda_probs",
    "little_group", "normalization", "null_momentum", "probs_lambda",
    "rest_frame_trace", "rho_direct", "rotation", "run_sweep", "run_verify",
    "series_coeffs", "standard_boost", "theta_c",
]
