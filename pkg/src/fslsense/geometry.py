"""Closed-form large-N boundary geometry of the ratio-plane trajectory.

In the large-N limit the per-cell ratio trajectory becomes
y(x) = (gamma/cos(theta)) x^2 / (x^2 + tan^2(theta)), a curve that scales
linearly in gamma.  Two events organize the sensing regimes as gamma grows:

* junction: the curve passes through the multi-critical point (2, 1), at

      gamma_J(theta) = (1 + 3 cos^2 theta) / (4 cos theta);

* tangency: the curve first touches the W=-1 / W=-2 boundary line y = x - 1
  at some x_t > 2, opening an extra critical interface.  The tangency
  conditions reduce to tan^2(theta) = x_t^3 / (x_t - 2) together with

      gamma_t(theta) = 2 cos(theta) (x_t - 1)^2 / (x_t - 2).

  Since x^3/(x-2) has minimum 27 (at x = 3) on x > 2, no tangency exists for
  tan^2(theta) < 27; above it the cubic x^3 - T x + 2T = 0 (T = tan^2 theta)
  has two roots beyond 2 and the physical threshold is the gamma_t minimizer
  (first contact as gamma increases).

The angle where both events coincide, gamma_t = gamma_J, follows from
8(x-1)^2 = x^3 + 4x - 8, whose relevant root is x_t = 4, giving
tan^2(theta_c) = 32, i.e. theta_c = arctan(4 sqrt 2) ~ 0.4443 pi.  Below
theta_c the junction comes first (favorable); above, the extra interface
arrives first (unfavorable).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

# x^3/(x-2) >= 27 on x > 2, so tangency requires tan^2(theta) >= this.
TANGENCY_MIN_TAN2 = 27.0
_POLISH_TOL = 1e-14


@dataclass(frozen=True)
class BoundaryGeometry:
    """Threshold record of one sensing angle.

    gamma_j      : junction threshold (curve through the multi-critical point)
    gamma_t      : tangency threshold, or None when no tangency exists
    x_t_roots    : all tangency abscissas x > 2 (empty when none exist)
    x_t_selected : the gamma_t-minimizing root (first contact), or None
    regime       : "favorable" when gamma_j <= gamma_t (or no tangency),
                   "unfavorable" when the tangency precedes the junction
    """

    theta: float
    gamma_j: float
    gamma_t: float | None
    x_t_roots: tuple[float, ...]
    x_t_selected: float | None
    regime: str


def gamma_junction(theta: float) -> float:
    """Nonlinear strength at which the continuum curve passes through the
    multi-critical point (2, 1).  Requires cos(theta) > 0; map other angles
    through the model symmetries first."""
    c = math.cos(theta)
    if c <= 0.0:
        raise DomainError("gamma_junction requires cos(theta) > 0")
    return (1.0 + 3.0 * c * c) / (4.0 * c)


def _tangency_roots(T: float) -> list[float]:
    """Roots x > 2 of x^3 - T x + 2 T = 0, via the trigonometric form of the
    depressed cubic plus a Newton polish."""
    # x^3 + p x + q with p = -T, q = 2T; three real roots for T >= 27
    p, q = -T, 2.0 * T
    m = 2.0 * math.sqrt(-p / 3.0)
    arg = 3.0 * q / (p * m)
    arg = min(1.0, max(-1.0, arg))
    phi = math.acos(arg)
    roots = [m * math.cos((phi - 2.0 * math.pi * k) / 3.0) for k in range(3)]
    polished = []
    for x in roots:
        for _ in range(60):
            f = x * x * x - T * x + 2.0 * T
            fp = 3.0 * x * x - T
            if fp == 0.0:
                break
            step = f / fp
            x -= step
            if abs(f) <= _POLISH_TOL * (abs(x) ** 3 + T * abs(x) + 2.0 * T):
                break
        polished.append(x)
    return sorted(x for x in polished if x > 2.0)


def _gamma_t_at(theta: float, x: float) -> float:
    return 2.0 * math.cos(theta) * (x - 1.0) ** 2 / (x - 2.0)


def gamma_tangent(theta: float) -> BoundaryGeometry:
    """Tangency threshold of the extra W=-1 / W=-2 contact, with the full
    junction/tangency record.  Angles with tan^2(theta) < 27 return a
    no-tangency result (favorable at all gamma below the junction)."""
    c = math.cos(theta)
    if c <= 0.0:
        raise DomainError("gamma_tangent requires cos(theta) > 0")
    gj = gamma_junction(theta)
    T = math.tan(theta) ** 2
    if T < TANGENCY_MIN_TAN2:
        return BoundaryGeometry(theta=theta, gamma_j=gj, gamma_t=None,
                                x_t_roots=(), x_t_selected=None,
                                regime="favorable")
    roots = _tangency_roots(T)
    gts = [_gamma_t_at(theta, x) for x in roots]
    imin = min(range(len(roots)), key=lambda i: gts[i])
    gt = gts[imin]
    regime = "favorable" if gj <= gt else "unfavorable"
    return BoundaryGeometry(theta=theta, gamma_j=gj, gamma_t=gt,
                            x_t_roots=tuple(roots), x_t_selected=roots[imin],
                            regime=regime)


def theta_critical() -> float:
    """Angle where the tangency and junction thresholds coincide.

    Solves 8(x-1)^2 = x^3 + 4x - 8, i.e. (x - 4)(x - 2)^2 = 0, keeps the
    root beyond the degenerate double root at 2, and returns
    arctan(sqrt(x^3/(x-2))) = arctan(sqrt 32).
    """
    x_t = _theta_critical_xt()
    return math.atan(math.sqrt(x_t**3 / (x_t - 2.0)))


def _theta_critical_xt() -> float:
    """Real root > 2 (excluding the double root at 2) of
    x^3 - 8x^2 + 20x - 16 = 0, Newton-polished from x = 4."""
    x = 4.0
    for _ in range(50):
        f = ((x - 8.0) * x + 20.0) * x - 16.0
        fp = (3.0 * x - 16.0) * x + 20.0
        if fp == 0.0 or abs(f) <= _POLISH_TOL:
            break
        x -= f / fp
    return x


def threshold_table(theta_values) -> list[BoundaryGeometry]:
    """gamma_J / gamma_t records over an angle grid (for CSV export)."""
    return [gamma_tangent(th) for th in theta_values]
