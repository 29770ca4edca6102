"""Two-mode Jaynes-Cummings-type sensor as a bipartite chain in photon-number space.

A qubit exchanging excitations with two bosonic modes conserves the total
excitation number N.  Within one fixed-N sector the 2N+1 basis states form a
one-dimensional lattice whose two sublattices are the qubit states: N+1 "down"
sites |down, N-n, n> (n = 0..N) and N "up" sites |up, N-m, m-1> (m = 1..N).
Every Hamiltonian term flips the qubit, so the lattice is bipartite and the
Hamiltonian takes the chiral block form

    H = [[0, A^T], [A, 0]],      A in R^{N x (N+1)},

in the basis ordering fixed here: all down sites first (n = 0..N), then all
up sites (m = 1..N).  Row m of A holds three couplings,

    A[m, n=m]   = v_m = g cos(theta) sqrt(m)            (intracell)
    A[m, n=m-1] = w_m = g sin(theta) sqrt(N-m+1)        (nearest intercell)
    A[m, n=m-2] = t_m = (gamma/N) sqrt((m-1)(N-m+1)(N-m+2))  (second intercell)

with bosonic matrix elements supplying the site dependence.  Angles are stored
in radians internally; command-line and file interfaces use units of pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateAngleError, DomainError

# |cos theta| below this counts as a degenerate angle (theta = +-pi/2).
DEGENERATE_COS_TOL = 1e-12


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of one fixed-excitation sector.

    n_excitations : total excitation number N >= 1
    theta         : sensing angle in radians, canonicalized to (-pi, pi]
    gamma         : dimensionless strength of the three-body process
    g             : linear coupling scale (energy unit), > 0
    """

    n_excitations: int
    theta: float
    gamma: float
    g: float = 1.0

    def __post_init__(self):
        if self.n_excitations < 1:
            raise DomainError(f"n_excitations must be >= 1, got {self.n_excitations}")
        if not math.isfinite(self.theta):
            raise DomainError("theta must be finite")
        if not (self.g > 0):
            raise DomainError(f"g must be positive, got {self.g}")
        th = math.remainder(self.theta, 2.0 * math.pi)
        if th <= -math.pi:
            th += 2.0 * math.pi
        object.__setattr__(self, "theta", th)

    @classmethod
    def from_pi_units(cls, n_excitations: int, theta_over_pi: float, gamma: float,
                      g: float = 1.0) -> "ModelParams":
        return cls(n_excitations, theta_over_pi * math.pi, gamma, g)

    @property
    def theta_over_pi(self) -> float:
        return self.theta / math.pi

    def is_degenerate(self) -> bool:
        """True when cos(theta) is numerically zero (v_n = 0 for all n)."""
        return abs(math.cos(self.theta)) < DEGENERATE_COS_TOL


@dataclass(frozen=True)
class HoppingTriple:
    """Coupling amplitudes of one cell: (v, w, t) at cell index n in [1, N]."""

    cell: int
    v: float
    w: float
    t: float


def hoppings(params: ModelParams, cell: int) -> HoppingTriple:
    """Coupling amplitudes of a single cell.

    t vanishes at cell 1 because of the (n-1) occupation factor; w reduces to
    g sin(theta) at cell N.
    """
    n = cell
    N = params.n_excitations
    if not 1 <= n <= N:
        raise DomainError(f"cell must lie in [1, {N}], got {n}")
    v = params.g * math.cos(params.theta) * math.sqrt(n)
    w = params.g * math.sin(params.theta) * math.sqrt(N - n + 1)
    t = (params.gamma / N) * math.sqrt((n - 1) * (N - n + 1) * (N - n + 2))
    return HoppingTriple(cell=n, v=v, w=w, t=t)


def hopping_bands(params: ModelParams) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All three coupling bands as arrays indexed by cell n = 1..N."""
    N = params.n_excitations
    n = np.arange(1, N + 1, dtype=float)
    v = params.g * math.cos(params.theta) * np.sqrt(n)
    w = params.g * math.sin(params.theta) * np.sqrt(N - n + 1)
    t = (params.gamma / N) * np.sqrt((n - 1) * (N - n + 1) * (N - n + 2))
    return v, w, t


def _banded(N: int, v: np.ndarray, w: np.ndarray, t: np.ndarray) -> np.ndarray:
    A = np.zeros((N, N + 1))
    i = np.arange(N)
    A[i, i + 1] = v
    A[i, i] = w
    if N >= 2:
        A[i[1:], i[1:] - 1] = t[1:]
    return A


def coupling_matrix(params: ModelParams) -> np.ndarray:
    """The N x (N+1) sublattice coupling block A (three bands, real entries)."""
    v, w, t = hopping_bands(params)
    return _banded(params.n_excitations, v, w, t)


def coupling_matrix_dtheta(params: ModelParams) -> np.ndarray:
    """Derivative of the coupling block with respect to theta.

    Same band layout with v' = -g sin(theta) sqrt(n), w' = g cos(theta)
    sqrt(N-n+1) and t' = 0 (t does not depend on theta).
    """
    N = params.n_excitations
    n = np.arange(1, N + 1, dtype=float)
    vp = -params.g * math.sin(params.theta) * np.sqrt(n)
    wp = params.g * math.cos(params.theta) * np.sqrt(N - n + 1)
    return _banded(N, vp, wp, np.zeros(N))


def full_hamiltonian(params: ModelParams, block: np.ndarray | None = None) -> np.ndarray:
    """Dense (2N+1) x (2N+1) Hamiltonian in the down-then-up basis ordering.

    `block` may substitute a different coupling block with the same shape
    (e.g. the theta-derivative) into the chiral structure.
    """
    A = coupling_matrix(params) if block is None else block
    N = params.n_excitations
    if A.shape != (N, N + 1):
        raise DomainError(f"block shape {A.shape} does not match N={N}")
    H = np.zeros((2 * N + 1, 2 * N + 1))
    H[: N + 1, N + 1 :] = A.T
    H[N + 1 :, : N + 1] = A
    return H


def chiral_signs(n_excitations: int) -> np.ndarray:
    """Diagonal of the chiral operator: +1 on down sites, -1 on up sites."""
    return np.concatenate([np.ones(n_excitations + 1), -np.ones(n_excitations)])


def cell_curve(params: ModelParams):
    """Per-cell coupling ratios (w_n/v_n, t_n/v_n) traced through the winding
    phase diagram, one labeled point per cell n = 1..N.

    Raises DegenerateAngleError at theta = +-pi/2 where the ratios diverge.
    """
    from . import topology

    if params.is_degenerate():
        raise DegenerateAngleError(
            "cell ratios are undefined at cos(theta) = 0 (theta = +-pi/2)")
    v, w, t = hopping_bands(params)
    return topology.build_curve(w / v, t / v)
