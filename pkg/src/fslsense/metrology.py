"""Quantum and classical Fisher information of the zero mode.

For the real normalized zero mode the quantum Fisher information with respect
to the sensing angle reduces to

    F = 4 [ <du|du> - |<u|du>|^2 ] = 4 sum_n (du_n)^2,

since <u|du> = 0.  Three independent routes are provided: the derivative
co-recursion (production path), a central finite difference of the state, and
the spectral perturbation-theory sum

    F = 4 sum_{mu != 0} |<E_mu| dH/dtheta |E_0>|^2 / E_mu^2

over the full eigenbasis (small N only; oracle).  Because the amplitudes are
real, a photon-number measurement on one cavity resolves the basis the mode
lives in, and its classical Fisher information sum (dP_n)^2 / P_n saturates
the quantum value exactly; the implementation estimates dP_n by central
difference and switches to the analytic limit 4 (du_n)^2 where P_n is too
small to divide by.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SizeLimitError
from .model import ModelParams, coupling_matrix_dtheta, full_hamiltonian
from .spectrum import ORACLE_MAX_N
from .zero_mode import probabilities, solve_zero_mode, solve_zero_mode_dtheta

# Probability below which a CFI cell uses the analytic limit form 4 (du_n)^2.
CFI_PROB_EPS = 1e-30
CFI_STEP_MIN = 1e-7
CFI_STEP_MAX = 1e-3
DEFAULT_FD_STEP = 1e-5


@dataclass(frozen=True)
class FisherResult:
    qfi: float
    method: str  # "derivative-recursion" | "finite-difference" | "spectral"
    cfi: float | None
    params: ModelParams


def qfi(params: ModelParams) -> FisherResult:
    """Quantum Fisher information from the derivative co-recursion."""
    mode = solve_zero_mode_dtheta(params)
    return FisherResult(qfi=mode.qfi, method="derivative-recursion",
                        cfi=None, params=params)


def qfi_finite_difference(params: ModelParams, h: float = DEFAULT_FD_STEP) -> FisherResult:
    """Quantum Fisher information with the state derivative taken by central
    finite difference (independent of the co-recursion)."""
    if not CFI_STEP_MIN <= h <= CFI_STEP_MAX:
        raise DomainError(f"step must lie in [{CFI_STEP_MIN}, {CFI_STEP_MAX}], got {h}")
    u0 = solve_zero_mode(params).amplitudes
    up = solve_zero_mode(_shift_theta(params, +h)).amplitudes
    um = solve_zero_mode(_shift_theta(params, -h)).amplitudes
    # the solver's sign convention may flip between nearby angles
    if float(np.dot(up, u0)) < 0.0:
        up = -up
    if float(np.dot(um, u0)) < 0.0:
        um = -um
    du = (up - um) / (2.0 * h)
    du = du - u0 * float(np.dot(u0, du))
    return FisherResult(qfi=4.0 * float(np.dot(du, du)),
                        method="finite-difference", cfi=None, params=params)


def qfi_spectral(params: ModelParams) -> FisherResult:
    """Quantum Fisher information from the perturbation-theory sum over the
    full eigenbasis.  Oracle path, N <= 200."""
    N = params.n_excitations
    if N > ORACLE_MAX_N:
        raise SizeLimitError(
            f"spectral route is limited to N <= {ORACLE_MAX_N}, got {N}")
    H = full_hamiltonian(params)
    M = full_hamiltonian(params, block=coupling_matrix_dtheta(params))
    evals, evecs = np.linalg.eigh(H)
    i0 = int(np.argmin(np.abs(evals)))
    matrix_elements = evecs.T @ (M @ evecs[:, i0])
    keep = np.arange(evals.size) != i0
    total = float(np.sum(matrix_elements[keep] ** 2 / evals[keep] ** 2))
    return FisherResult(qfi=4.0 * total, method="spectral", cfi=None, params=params)


def cfi_photon_number(params: ModelParams, h: float = DEFAULT_FD_STEP) -> FisherResult:
    """Classical Fisher information of a single-cavity photon-number
    measurement, sum_n (dP_n)^2 / P_n, with dP_n by central difference.

    Cells with P_n < CFI_PROB_EPS contribute the analytic limit 4 (du_n)^2,
    avoiding 0/0 while preserving exact saturation of the quantum value.
    Returns the recursion QFI alongside for direct comparison.
    """
    if not CFI_STEP_MIN <= h <= CFI_STEP_MAX:
        raise DomainError(f"step must lie in [{CFI_STEP_MIN}, {CFI_STEP_MAX}], got {h}")
    mode = solve_zero_mode_dtheta(params)
    p0 = probabilities(mode)
    pp = probabilities(solve_zero_mode(_shift_theta(params, +h)))
    pm = probabilities(solve_zero_mode(_shift_theta(params, -h)))
    dp = (pp - pm) / (2.0 * h)
    small = p0 < CFI_PROB_EPS
    safe_p = np.where(small, 1.0, p0)
    terms = np.where(small, 4.0 * mode.dtheta**2, dp * dp / safe_p)
    return FisherResult(qfi=mode.qfi, method="derivative-recursion",
                        cfi=float(np.sum(terms)), params=params)


@dataclass(frozen=True)
class LinearLimitValues:
    """Closed forms of the linear (gamma = 0) model, for oracle use."""

    qfi: float
    mean: float
    variance: float


def linear_limit_closed_forms(params: ModelParams) -> LinearLimitValues:
    """Exact gamma = 0 values: F = 4N, occupation mean N sin^2(theta) and
    variance N sin^2(theta) cos^2(theta)."""
    if params.gamma != 0.0:
        raise DomainError("closed forms hold only for gamma = 0")
    N = params.n_excitations
    s2 = math.sin(params.theta) ** 2
    return LinearLimitValues(qfi=4.0 * N, mean=N * s2, variance=N * s2 * (1.0 - s2))


def _shift_theta(params: ModelParams, delta: float) -> ModelParams:
    return ModelParams(params.n_excitations, params.theta + delta,
                       params.gamma, params.g)
