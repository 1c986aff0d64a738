"""Linear stability of equilibria.

The linearized flow at an equilibrium is generated by

    A = [[0, 1, 1, 0], [-1, 0, 0, 1], [Vxx, Vxy, 0, 1], [Vxy, Vyy, -1, 0]],

whose characteristic polynomial is the biquadratic

    lam**4 + lam**2 (4 - Wxx - Wyy) + Wxx Wyy - Wxy**2,      W = Omega Hessian.

At a triangular point the polynomial collapses to
lam**4 + lam**2 + 9 mu (1-mu) sin(gamma)**2 with gamma the supplement of
the vertex angle at the equilibrium (cos gamma = (1 - rho1**2 - rho2**2) /
(2 rho1 rho2)), so the spectrum is governed by the single discriminant

    F(mu, gamma) = 1 - 36 mu (1-mu) sin(gamma)**2,

with the four-way classification: F < 0 spiral instability, F = 0 a
non-diagonalizable double pair +-(sqrt2/2) i, 0 < F < 1 four distinct
imaginary eigenvalues, F = 1 the axis-degenerate case 0, 0, +-i.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .dynamics import potential
from .errors import BelowCriticalMass, NotOnTriangularLocus
from .params import SystemParams
from .triangular import triangular_exists

# F = 0 / F = 1 are honored exactly within this absolute band.
_BOUNDARY_ATOL = 1e-12

_LIMIT_LOCUS_ATOL = 1e-12


class StabilityClass(enum.Enum):
    LYAPUNOV_UNSTABLE = "LyapunovUnstable"
    LINEARLY_UNSTABLE_F_ZERO = "LinearlyUnstable_Fzero"
    LINEARLY_STABLE = "LinearlyStable"
    LINEARLY_UNSTABLE_F_ONE = "LinearlyUnstable_Fone"


@dataclass(frozen=True)
class StabilityReport:
    eigenvalues: tuple[complex, complex, complex, complex]
    f_value: float
    gamma: float
    classification: StabilityClass

    def to_dict(self) -> dict:
        return {
            "eigenvalues": [[z.real, z.imag] for z in self.eigenvalues],
            "F": self.f_value,
            "gamma": self.gamma,
            "classification": self.classification.value,
        }


def linearization(params: SystemParams, x: float, y: float) -> np.ndarray:
    """The 4x4 matrix of the flow linearized at (x, y) with equilibrium momenta."""
    s = potential(params, x, y)
    return np.array(
        [
            [0.0, 1.0, 1.0, 0.0],
            [-1.0, 0.0, 0.0, 1.0],
            [s.Vxx, s.Vxy, 0.0, 1.0],
            [s.Vxy, s.Vyy, -1.0, 0.0],
        ]
    )


def quartic_eigenvalues(a: np.ndarray) -> tuple[complex, complex, complex, complex]:
    """Spectrum of a linearization matrix via the biquadratic closed form.

    Reads the Hessian entries back out of `a`, solves the quadratic in
    u = lam**2 and takes complex square roots; returned as
    (+sqrt(u+), -sqrt(u+), +sqrt(u-), -sqrt(u-)).
    """
    vxx, vxy, vyy = float(a[2, 0]), float(a[2, 1]), float(a[3, 1])
    wxx, wyy, wxy = 1.0 + vxx, 1.0 + vyy, vxy
    p = 4.0 - wxx - wyy
    q = wxx * wyy - wxy * wxy
    disc = cmath.sqrt(complex(p * p - 4.0 * q))
    u_plus = (-p + disc) / 2.0
    u_minus = (-p - disc) / 2.0
    lp, lm = cmath.sqrt(u_plus), cmath.sqrt(u_minus)
    return (lp, -lp, lm, -lm)


def f_zero_eigenvector(vxx: float, vxy: float, lam: complex) -> np.ndarray:
    """The unique eigenvector direction at the F = 0 double eigenvalue.

    v = ((2 lam + Vxy)/D, (lam**2 - 1 - Vxx)/D, (lam**2 + 1 + Vxx + lam Vxy)/D, 1)
    with D = lam**3 + lam (1 - Vxx) + Vxy; one direction per lam is what
    makes the matrix non-diagonalizable.
    """
    d = lam**3 + lam * (1.0 - vxx) + vxy
    return np.array(
        [
            (2.0 * lam + vxy) / d,
            (lam * lam - 1.0 - vxx) / d,
            (lam * lam + 1.0 + vxx + lam * vxy) / d,
            1.0,
        ]
    )


def _on_limit_locus(params: SystemParams) -> bool:
    d1, d2 = params.delta1, params.delta2
    if params.beta1 <= 0.0 or params.beta2 <= 0.0 or not params.admissible:
        return False
    return (
        abs(d2 - d1 - 1.0) <= _LIMIT_LOCUS_ATOL
        or abs(d1 + d2 - 1.0) <= _LIMIT_LOCUS_ATOL
        or abs(d1 - d2 - 1.0) <= _LIMIT_LOCUS_ATOL
    )


def gamma_of(params: SystemParams) -> float:
    """The angle gamma in [0, pi] with cos gamma = (1 - rho1^2 - rho2^2)/(2 rho1 rho2).

    Defined at triangular points (rho_i = beta_i^(1/3)) and on the
    degenerate limit lines, where it evaluates to 0 or pi.
    """
    if not (triangular_exists(params) or _on_limit_locus(params)):
        raise NotOnTriangularLocus(
            f"(beta1, beta2) = ({params.beta1!r}, {params.beta2!r}) supports no "
            "triangular point and is not on a degenerate limit line"
        )
    d1, d2 = params.delta1, params.delta2
    c = (1.0 - d1 * d1 - d2 * d2) / (2.0 * d1 * d2)
    return math.acos(min(1.0, max(-1.0, c)))


def f_stability(mu: float, gamma: float) -> float:
    """F(mu, gamma) = 1 - 36 mu (1-mu) sin(gamma)**2."""
    if not (0.0 < mu <= 0.5):
        raise ValueError(f"mu must lie in (0, 1/2], got {mu!r}")
    if not (0.0 <= gamma <= math.pi):
        raise ValueError(f"gamma must lie in [0, pi], got {gamma!r}")
    return 1.0 - 36.0 * mu * (1.0 - mu) * math.sin(gamma) ** 2


def critical_mu() -> float:
    """The smallest mass ratio at which F can vanish: 1/2 - sqrt(2)/3."""
    return 0.5 - math.sqrt(2.0) / 3.0


def gamma_mu(mu: float) -> float:
    """The boundary angle arcsin(1/(6 sqrt(mu(1-mu)))) for mu above critical.

    F(mu, .) vanishes exactly at gamma_mu and pi - gamma_mu.
    """
    if not (0.0 < mu <= 0.5):
        raise ValueError(f"mu must lie in (0, 1/2], got {mu!r}")
    if mu <= critical_mu():
        raise BelowCriticalMass(
            f"mu = {mu!r} is below the critical ratio {critical_mu()!r}; F never vanishes"
        )
    return math.asin(1.0 / (6.0 * math.sqrt(mu * (1.0 - mu))))


def _closed_form_eigenvalues(f_val: float) -> tuple[complex, complex, complex, complex]:
    """lam = +-sqrt((-1 +- sqrt(F))/2) with complex square roots."""
    s = cmath.sqrt(complex(f_val))
    lp = cmath.sqrt((-1.0 + s) / 2.0)
    lm = cmath.sqrt((-1.0 - s) / 2.0)
    return (lp, -lp, lm, -lm)


def classify_triangular(params: SystemParams) -> StabilityReport:
    """Theorem-level classification of a triangular (or limit) equilibrium.

    The class is a function of (mu, gamma) alone; mu > 1/2 inputs are
    folded through the mu <-> 1-mu symmetry of F.
    """
    gamma = gamma_of(params)
    mu = params.mu if params.mu <= 0.5 else 1.0 - params.mu
    f_val = f_stability(mu, gamma)
    if abs(f_val) <= _BOUNDARY_ATOL:
        lam = complex(0.0, math.sqrt(2.0) / 2.0)
        return StabilityReport(
            (lam, -lam, lam, -lam), f_val, gamma, StabilityClass.LINEARLY_UNSTABLE_F_ZERO
        )
    if abs(f_val - 1.0) <= _BOUNDARY_ATOL:
        return StabilityReport(
            (0.0 + 0.0j, 0.0 + 0.0j, 1.0j, -1.0j),
            f_val,
            gamma,
            StabilityClass.LINEARLY_UNSTABLE_F_ONE,
        )
    eig = _closed_form_eigenvalues(f_val)
    cls = StabilityClass.LYAPUNOV_UNSTABLE if f_val < 0.0 else StabilityClass.LINEARLY_STABLE
    return StabilityReport(eig, f_val, gamma, cls)
