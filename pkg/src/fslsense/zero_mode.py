"""Topological zero-energy mode from the destructive-interference recursion.

The bipartite chain has one more down site than up sites, so chiral symmetry
guarantees one exact zero-energy eigenstate supported on the down sublattice
alone, |psi_0> = sum_n u_n |down, N-n, n>.  Requiring every up site to be
decoupled gives the three-term recursion

    v_n u_n + w_n u_{n-1} + t_n u_{n-2} = 0,   n = 1..N,   u_{-1} = 0,

seeded with u_0 = 1 and normalized afterwards.  Differentiating in theta and
co-iterating (t_n is theta-independent) yields the derivative amplitudes

    v_n u'_n + v'_n u_n + w_n u'_{n-1} + w'_n u_{n-1} + t_n u'_{n-2} = 0,

from which the derivative of the *normalized* state follows by projecting out
the component along u.  Raw amplitudes can grow binomially (overflowing
doubles near N ~ 1000), so the recursion renormalizes in place whenever the
running maximum exceeds 2**512; the shared rescaling cancels from every
normalized output.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateAngleError, NumericFailureError
from .model import ModelParams, coupling_matrix_dtheta, hopping_bands

# Rescale the partial recursion whenever the running max exceeds this.
RENORM_THRESHOLD = 2.0**512


@dataclass(frozen=True)
class ZeroMode:
    """Normalized zero-mode amplitudes on the down sublattice.

    amplitudes : u_0..u_N with sum u_n^2 = 1
    dtheta     : d(u_n)/d(theta) of the normalized state (None if not computed);
                 orthogonal to amplitudes
    params     : parameter snapshot
    """

    amplitudes: np.ndarray
    dtheta: np.ndarray | None
    params: ModelParams

    @property
    def qfi(self) -> float:
        """4 <du|du> for the real normalized state (cross term vanishes)."""
        if self.dtheta is None:
            raise ValueError("derivative amplitudes were not computed")
        return 4.0 * float(np.dot(self.dtheta, self.dtheta))


def _recursion(params: ModelParams, with_derivative: bool):
    if params.is_degenerate():
        raise DegenerateAngleError(
            "recursion pivot vanishes: cos(theta) = 0 localizes the mode at "
            "the last site and leaves v_n = 0")
    N = params.n_excitations
    v, w, t = hopping_bands(params)
    u = np.zeros(N + 1)
    u[0] = 1.0
    du = np.zeros(N + 1) if with_derivative else None
    if with_derivative:
        Ap = coupling_matrix_dtheta(params)
        vp = Ap[np.arange(N), np.arange(1, N + 1)]
        wp = Ap[np.arange(N), np.arange(N)]
    running_max = 1.0
    log_scale = 0.0  # accumulated log2 of divided-out factors (diagnostic)
    for n in range(1, N + 1):
        um1 = u[n - 1]
        um2 = u[n - 2] if n >= 2 else 0.0
        u[n] = -(w[n - 1] * um1 + t[n - 1] * um2) / v[n - 1]
        if with_derivative:
            dm1 = du[n - 1]
            dm2 = du[n - 2] if n >= 2 else 0.0
            du[n] = -(vp[n - 1] * u[n] + wp[n - 1] * um1
                      + w[n - 1] * dm1 + t[n - 1] * dm2) / v[n - 1]
        a = abs(u[n])
        if a > running_max:
            running_max = a
        if running_max > RENORM_THRESHOLD:
            u[: n + 1] /= running_max
            if with_derivative:
                du[: n + 1] /= running_max
            log_scale += np.log2(running_max)
            running_max = 1.0
        if not np.isfinite(u[n]) or (with_derivative and not np.isfinite(du[n])):
            raise NumericFailureError(
                f"non-finite recursion value at cell {n} despite renormalization")
    norm = float(np.linalg.norm(u))
    if not np.isfinite(norm) or norm == 0.0:
        raise NumericFailureError("zero-mode normalization failed")
    un = u / norm
    dun = None
    if with_derivative:
        # derivative of u/|u|: remove the radial component, then fix the gauge
        dun = (du - un * float(np.dot(un, du))) / norm
    # global sign: largest-|u| component positive, for reproducible output
    imax = int(np.argmax(np.abs(un)))
    if un[imax] < 0.0:
        un = -un
        if dun is not None:
            dun = -dun
    return un, dun


def solve_zero_mode(params: ModelParams) -> ZeroMode:
    """Normalized zero-mode amplitudes (derivative left unfilled)."""
    un, _ = _recursion(params, with_derivative=False)
    return ZeroMode(amplitudes=un, dtheta=None, params=params)


def solve_zero_mode_dtheta(params: ModelParams) -> ZeroMode:
    """Zero mode together with the theta-derivative of the normalized state,
    obtained by forward co-recursion (works for gamma != 0 where no closed
    form exists) and an explicit orthogonality projection."""
    un, dun = _recursion(params, with_derivative=True)
    return ZeroMode(amplitudes=un, dtheta=dun, params=params)


def probabilities(mode: ZeroMode) -> np.ndarray:
    """Occupation distribution P_n = u_n^2 of a photon-number measurement."""
    return mode.amplitudes**2
