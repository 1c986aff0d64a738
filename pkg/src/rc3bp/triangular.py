"""Triangular equilibrium points.

A pair of off-axis equilibria exists exactly when beta1, beta2 > 0, the
cube roots delta_i = beta_i**(1/3) satisfy the strict triangle
inequalities with the unit primary separation, and the admissibility
constraint holds. The points sit at distances rho_i = delta_i from the
primaries:

    xL = -mu + (beta1**(2/3) - beta2**(2/3) + 1) / 2
    yL = +/- sqrt(2(d1 + d2) - (d1 - d2)**2 - 1) / 2,   d_i = delta_i**2.

Depending on the deltas the pair may lie left of body 1, between the
bodies, right of body 2, or exactly above/below either body.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import NoTriangularSolution
from .params import SystemParams

# Treat |xL - (-mu)| and |xL - (1-mu)| below this as exact: the
# above/below cases arise from cube/square root arithmetic (e.g.
# beta2 = 2**1.5) that lands within a few ulp of the boundary.
_LOCATION_ATOL = 1e-12


class TriangularLocation(enum.Enum):
    LEFT_OF_BODY1 = "left-of-body-1"
    ABOVE_BELOW_BODY1 = "above-below-body-1"
    BETWEEN = "between"
    ABOVE_BELOW_BODY2 = "above-below-body-2"
    RIGHT_OF_BODY2 = "right-of-body-2"


@dataclass(frozen=True)
class TriangularPair:
    """The L4 point (xL, +yL) and its reflection L5 = (xL, -yL), yL > 0."""

    xL: float
    yL: float
    rho1: float
    rho2: float
    location: TriangularLocation

    @property
    def l4(self) -> tuple[float, float]:
        return (self.xL, self.yL)

    @property
    def l5(self) -> tuple[float, float]:
        return (self.xL, -self.yL)


def triangular_exists(params: SystemParams) -> bool:
    """True iff the closed-form triangular pair exists (strict inequalities)."""
    if not params.admissible:
        return False
    b1, b2 = params.beta1, params.beta2
    if b1 <= 0.0 or b2 <= 0.0:
        return False
    d1, d2 = params.delta1, params.delta2
    return d1 + 1.0 > d2 and d2 + 1.0 > d1 and d1 + d2 > 1.0


def triangular_points(params: SystemParams) -> TriangularPair:
    """Compute the pair, or raise NoTriangularSolution."""
    if not triangular_exists(params):
        raise NoTriangularSolution(
            f"no triangular equilibria for beta1={params.beta1!r}, beta2={params.beta2!r}"
        )
    d1, d2 = params.delta1**2, params.delta2**2  # beta**(2/3)
    xL = -params.mu + 0.5 * (d1 - d2 + 1.0)
    radicand = 2.0 * (d1 + d2) - (d1 - d2) ** 2 - 1.0
    yL = 0.5 * math.sqrt(radicand)
    return TriangularPair(
        xL=xL,
        yL=yL,
        rho1=params.delta1,
        rho2=params.delta2,
        location=classify_location(params),
    )


def classify_location(params: SystemParams) -> TriangularLocation:
    """Which side of the primaries the pair falls on.

    Equivalent to comparing xL against -mu and 1-mu; the above/below
    branches are equalities, detected within 1e-12.
    """
    if not triangular_exists(params):
        raise NoTriangularSolution(
            f"no triangular equilibria for beta1={params.beta1!r}, beta2={params.beta2!r}"
        )
    # xL + mu = (t + 1)/2 and xL - (1 - mu) = (t - 1)/2 with t = d1 - d2
    t = params.delta1**2 - params.delta2**2
    if abs(t + 1.0) <= 2.0 * _LOCATION_ATOL:
        return TriangularLocation.ABOVE_BELOW_BODY1
    if abs(t - 1.0) <= 2.0 * _LOCATION_ATOL:
        return TriangularLocation.ABOVE_BELOW_BODY2
    if t < -1.0:
        return TriangularLocation.LEFT_OF_BODY1
    if t > 1.0:
        return TriangularLocation.RIGHT_OF_BODY2
    return TriangularLocation.BETWEEN
