"""Excitation gap and full spectra via the chiral reduction.

Chiral symmetry pairs every eigenvalue E of the (2N+1)-dimensional sector
Hamiltonian with -E and pins one exact zero.  The nonzero energies are the
+-singular values of the N x (N+1) coupling block, so the gap

    Delta E = min_{mu != 0} |E_mu|

equals the smallest singular value of the block.  Computing it there (rather
than from the full eigenproblem) halves the problem size and keeps the zero
mode out of the way of the minimum.  Dense SVD is used up to N = 4000;
larger sectors are refused.  Singular values far below sigma_max are still
reported as computed but carry a below-floor flag.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import NumericFailureError, SizeLimitError
from .model import ModelParams, coupling_matrix, full_hamiltonian

# Dense-SVD ceiling; beyond this, refuse rather than silently degrade.
DENSE_SVD_MAX_N = 4000
# Ceiling of the dense full-Hamiltonian eigensolve (validation path).
ORACLE_MAX_N = 200
# Gaps below GAP_FLOOR_FACTOR * sigma_max are flagged as numerically fragile.
GAP_FLOOR_FACTOR = 1e-12


@dataclass(frozen=True)
class SpectrumResult:
    """Singular spectrum of the coupling block of one parameter point.

    gap             : smallest singular value = min nonzero |E|
    singular_values : all N singular values, descending
    n_excitations   : sector size N
    params          : parameter snapshot
    below_floor     : True when gap < GAP_FLOOR_FACTOR * sigma_max
    """

    gap: float
    singular_values: np.ndarray
    n_excitations: int
    params: ModelParams
    below_floor: bool


def singular_spectrum(params: ModelParams) -> SpectrumResult:
    """All singular values of the coupling block (dense, N <= 4000)."""
    N = params.n_excitations
    if N > DENSE_SVD_MAX_N:
        raise SizeLimitError(
            f"dense SVD is limited to N <= {DENSE_SVD_MAX_N}, got {N}")
    A = coupling_matrix(params)
    try:
        sv = scipy.linalg.svdvals(A)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise NumericFailureError(f"SVD failed: {exc}") from exc
    if not np.all(np.isfinite(sv)):
        raise NumericFailureError("SVD returned non-finite singular values")
    gap_value = float(sv[-1])
    floor = GAP_FLOOR_FACTOR * float(sv[0])
    return SpectrumResult(
        gap=gap_value,
        singular_values=sv,
        n_excitations=N,
        params=params,
        below_floor=gap_value < floor,
    )


def gap(params: ModelParams) -> float:
    """Excitation gap Delta E in units of g (= smallest singular value)."""
    return singular_spectrum(params).gap


def full_spectrum_oracle(params: ModelParams) -> tuple[SpectrumResult, np.ndarray]:
    """Brute-force validation path: all 2N+1 eigenvalues of the full sector
    Hamiltonian (sorted ascending) alongside the singular spectrum.

    Restricted to N <= 200; the zero eigenvalue appears explicitly.
    """
    N = params.n_excitations
    if N > ORACLE_MAX_N:
        raise SizeLimitError(
            f"dense eigensolve oracle is limited to N <= {ORACLE_MAX_N}, got {N}")
    H = full_hamiltonian(params)
    eigenvalues = np.linalg.eigvalsh(H)
    return singular_spectrum(params), eigenvalues
