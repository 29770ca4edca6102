"""Winding numbers of the associated two-band Bloch Hamiltonian.

Each cell of the inhomogeneous chain defines, through its coupling triple
(v, w, t), a homogeneous extended Su-Schrieffer-Heeger model with Bloch
off-diagonal element

    h(k) = v + w e^{-ik} + t e^{-2ik},

whose winding number W counts, with sign, how often h(k) encircles the
origin.  Substituting z = e^{-ik} turns W into minus the number of roots of
the quadratic t z^2 + w z + v inside the unit disk, which is the primary
evaluation route; a discretized contour integral of the phase provides an
independent cross-check.  W takes values in {0, -1, -2}; a root on the unit
circle marks a critical point and is reported as the label None.

In the ratio plane (x, y) = (w/v, t/v) the critical loci are straight lines:
y = x - 1 (root at z = -1), y = -x - 1 (root at z = +1) and, for |x| < 2, the
segment y = 1 (conjugate root pair on the circle).  The three loci meet at
the multi-critical points (x, y) = (+-2, 1).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateAngleError, DomainError, NumericFailureError

# Relative tolerance for root-on-circle (criticality) detection.
BOUNDARY_EPS = 1e-9
# Reject the contour integral when its pre-snap value is further than this
# from an integer (signals undersampling near a critical point).
UNDERSAMPLE_TOL = 0.1
MIN_K_SAMPLES = 64

MULTICRITICAL_POINTS = ((2.0, 1.0), (-2.0, 1.0))


@dataclass(frozen=True)
class PhasePoint:
    """One point of the ratio plane with its winding label (None = critical)."""

    x: float
    y: float
    winding: int | None


@dataclass(frozen=True)
class BoundarySegment:
    """A piece of the critical locus in the (x, y) ratio plane."""

    boundary_id: str
    expression: str
    x_range: tuple[float, float]

    def y_of_x(self, x: float) -> float:
        if self.expression == "y=x-1":
            return x - 1.0
        if self.expression == "y=-x-1":
            return -x - 1.0
        if self.expression == "y=1":
            return 1.0
        raise DomainError(f"unknown boundary expression {self.expression!r}")


@dataclass
class CellCurve:
    """Ordered labeled points plus the segments where the label changes.

    crossings holds (segment_index, boundary_id) pairs; segment_index i means
    the label changed between points[i] and points[i+1] (critical points in
    between are skipped when pairing labels).
    """

    points: list[PhasePoint]
    crossings: list[tuple[int, str]] = field(default_factory=list)

    @property
    def windings(self) -> list[int | None]:
        return [p.winding for p in self.points]


def _quadratic_root_magnitudes(v: float, w: float, t: float) -> list[float]:
    """|roots| of t z^2 + w z + v, using the cancellation-safe formula."""
    if t == 0.0:
        if w == 0.0:
            return []
        return [abs(v / w)]
    disc = w * w - 4.0 * t * v
    if disc < 0.0:
        # conjugate pair: |z|^2 = product of roots = v/t > 0
        m = math.sqrt(v / t)
        return [m, m]
    if w == 0.0:
        m = math.sqrt(abs(v / t))
        return [m, m]
    q = -0.5 * (w + math.copysign(math.sqrt(disc), w))
    if q == 0.0:  # v == 0: roots are 0 and -w/t
        return [0.0, abs(w / t)]
    return [abs(q / t), abs(v / q)]


def winding_roots(v: float, w: float, t: float) -> int | None:
    """Winding number as minus the count of quadratic roots inside the unit
    disk; None when a root lies on the circle (critical)."""
    if v == 0.0 and w == 0.0 and t == 0.0:
        raise DomainError("winding is undefined for the all-zero triple")
    count = 0
    for m in _quadratic_root_magnitudes(v, w, t):
        if abs(m - 1.0) < BOUNDARY_EPS:
            return None
        if m < 1.0:
            count += 1
    return -count


def winding_integral(v: float, w: float, t: float, k_samples: int = 256) -> int | None:
    """Winding number from the discretized contour integral of the phase of
    h(k) over k in (-pi, pi]; independent of the root-counting route."""
    if v == 0.0 and w == 0.0 and t == 0.0:
        raise DomainError("winding is undefined for the all-zero triple")
    if k_samples < MIN_K_SAMPLES:
        raise DomainError(f"k_samples must be >= {MIN_K_SAMPLES}, got {k_samples}")
    k = np.linspace(-np.pi, np.pi, k_samples + 1)
    h = v + w * np.exp(-1j * k) + t * np.exp(-2j * k)
    scale = abs(v) + abs(w) + abs(t)
    if float(np.min(np.abs(h))) < BOUNDARY_EPS * scale:
        return None
    phase = np.unwrap(np.angle(h))
    raw = (phase[-1] - phase[0]) / (2.0 * np.pi)
    nearest = round(raw)
    if abs(raw - nearest) > UNDERSAMPLE_TOL:
        raise NumericFailureError(
            f"phase winding {raw:.3f} is not close to an integer; "
            "increase k_samples (trajectory passes near a critical point)")
    return int(nearest)


def phase_boundaries() -> list[BoundarySegment]:
    """Analytic critical loci of the ratio plane.

    Root-on-circle conditions of 1 + x z + y z^2: z = -1 gives y = x - 1,
    z = +1 gives y = -x - 1, and a conjugate pair on the circle gives y = 1
    restricted to |x| < 2.  For y >= 0 the y = x - 1 line separates W=0 from
    W=-1 on 1 <= x <= 2 and W=-1 from W=-2 beyond x = 2.
    """
    inf = math.inf
    return [
        BoundarySegment("W=0|W=-1", "y=x-1", (1.0, 2.0)),
        BoundarySegment("W=-1|W=-2", "y=x-1", (2.0, inf)),
        BoundarySegment("W=0|W=-2", "y=1", (-2.0, 2.0)),
        BoundarySegment("W=0|W=-1", "y=-x-1", (-2.0, -1.0)),
        BoundarySegment("W=-1|W=-2", "y=-x-1", (-inf, -2.0)),
    ]


def _crossings_from_labels(labels: list[int | None]) -> list[tuple[int, str]]:
    crossings = []
    prev = None
    prev_idx = -1
    for i, lab in enumerate(labels):
        if lab is None:
            continue
        if prev is not None and lab != prev:
            bid = f"W={max(prev, lab)}|W={min(prev, lab)}"
            crossings.append((prev_idx, bid))
        prev = lab
        prev_idx = i
    return crossings


def build_curve(xs, ys) -> CellCurve:
    """Label a trajectory of ratio points and detect boundary crossings."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    points = [PhasePoint(float(x), float(y), winding_roots(1.0, float(x), float(y)))
              for x, y in zip(xs, ys)]
    return CellCurve(points=points, crossings=_crossings_from_labels(
        [p.winding for p in points]))


def continuum_curve(theta: float, gamma: float, s_samples: int = 200) -> CellCurve:
    """Large-N limit of the per-cell ratio trajectory on an open grid of the
    scaled cell coordinate s = n/N in (0, 1):

        x(s) = tan(theta) sqrt((1-s)/s),   y(s) = (gamma/cos(theta)) (1-s).

    The s -> 1 end is pinned near the origin in the W=0 region.
    """
    if abs(math.cos(theta)) < 1e-12:
        raise DegenerateAngleError(
            "continuum ratios are undefined at cos(theta) = 0")
    if s_samples < 2:
        raise DomainError("s_samples must be >= 2")
    s = (np.arange(s_samples, dtype=float) + 0.5) / s_samples
    x = math.tan(theta) * np.sqrt((1.0 - s) / s)
    y = (gamma / math.cos(theta)) * (1.0 - s)
    return build_curve(x, y)


def continuum_y_of_x(x, theta: float, gamma: float):
    """Eliminated form of the continuum trajectory:
    y(x) = (gamma/cos(theta)) x^2 / (x^2 + tan(theta)^2)."""
    if abs(math.cos(theta)) < 1e-12:
        raise DegenerateAngleError(
            "continuum ratios are undefined at cos(theta) = 0")
    x = np.asarray(x, dtype=float)
    t2 = math.tan(theta) ** 2
    return (gamma / math.cos(theta)) * x * x / (x * x + t2)


def winding_raster(x_values, y_values) -> list[tuple[float, float, int | None]]:
    """Dense (x, y, W) raster rows for phase-diagram export, x fastest."""
    rows = []
    for y in y_values:
        for x in x_values:
            rows.append((float(x), float(y), winding_roots(1.0, float(x), float(y))))
    return rows
