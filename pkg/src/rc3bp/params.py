"""Reduced parameterization of the restricted charged problem.

The physical inputs (masses, charges, G, k) collapse to three numbers:
the mass ratio mu and the force parameters beta1, beta2, where
beta_j = 1 - alpha~_j * alpha~_3 measures the net gravity-minus-Coulomb
pull of primary j on the test particle (beta = 1 means no Coulomb term).
The circular motion of the primaries exists only under the admissibility
constraint (beta1 - 1)(beta2 - 1) < 1, equivalently C12 > 0.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import NonpositiveMass, ZeroThirdCharge


def is_admissible(beta1: float, beta2: float) -> bool:
    """Strict admissibility test (beta1 - 1)(beta2 - 1) < 1.

    The boundary itself is excluded: there the primaries' mutual coupling
    C12 vanishes and no circular relative orbit exists.
    """
    return (beta1 - 1.0) * (beta2 - 1.0) < 1.0


class ForceRegime(enum.Enum):
    """Sign regime of the net force a single beta describes."""

    COULOMB_DOMINATES_REPULSIVE = "coulomb-dominates-repulsive"  # beta < 0
    BALANCED_REPULSIVE = "balanced-repulsive"                    # beta = 0
    GRAVITY_DOMINATES = "gravity-dominates"                      # 0 < beta < 1
    NO_COULOMB = "no-coulomb"                                    # beta = 1
    COULOMB_ATTRACTIVE = "coulomb-attractive"                    # beta > 1


def force_regime(beta: float) -> ForceRegime:
    """Classify a beta value. Comparisons are exact; round first if needed."""
    if not math.isfinite(beta):
        raise ValueError(f"beta must be finite, got {beta!r}")
    if beta < 0.0:
        return ForceRegime.COULOMB_DOMINATES_REPULSIVE
    if beta == 0.0:
        return ForceRegime.BALANCED_REPULSIVE
    if beta < 1.0:
        return ForceRegime.GRAVITY_DOMINATES
    if beta == 1.0:
        return ForceRegime.NO_COULOMB
    return ForceRegime.COULOMB_ATTRACTIVE


@dataclass(frozen=True)
class SystemParams:
    """Reduced parameter triple (mu, beta1, beta2).

    mu may be anywhere in (0, 1); `reduce` always emits the folded
    representative in (0, 1/2], but the mirror map beta1 <-> beta2,
    mu <-> 1 - mu must be expressible, so the complement half is legal
    for direct construction.
    """

    mu: float
    beta1: float
    beta2: float
    swapped: bool = False

    def __post_init__(self) -> None:
        if not (0.0 < self.mu < 1.0):
            raise ValueError(f"mu must lie in (0, 1), got {self.mu!r}")
        if not (math.isfinite(self.beta1) and math.isfinite(self.beta2)):
            raise ValueError("beta parameters must be finite")

    @property
    def admissible(self) -> bool:
        return is_admissible(self.beta1, self.beta2)

    @property
    def delta1(self) -> float:
        """Real cube root of beta1 (sign-preserving)."""
        return math.copysign(abs(self.beta1) ** (1.0 / 3.0), self.beta1)

    @property
    def delta2(self) -> float:
        """Real cube root of beta2 (sign-preserving)."""
        return math.copysign(abs(self.beta2) ** (1.0 / 3.0), self.beta2)

    def mirrored(self) -> "SystemParams":
        """The body-relabeled twin (1 - mu, beta2, beta1)."""
        return SystemParams(1.0 - self.mu, self.beta2, self.beta1, swapped=not self.swapped)

    def to_dict(self) -> dict:
        return {
            "mu": self.mu,
            "beta1": self.beta1,
            "beta2": self.beta2,
            "admissible": self.admissible,
            "swapped": self.swapped,
        }


@dataclass(frozen=True)
class PhysicalSystem:
    """Raw masses and charges of the three bodies plus force constants.

    m3 >= 0 is allowed (the restricted problem is its m3 -> 0 limit). q3 = 0
    is representable but rejected by `reduce`, which needs the test
    particle's charge sign.
    """

    m1: float
    m2: float
    m3: float
    q1: float
    q2: float
    q3: float
    G: float = 1.0
    k: float = 1.0

    def __post_init__(self) -> None:
        if self.m1 <= 0.0 or self.m2 <= 0.0:
            raise NonpositiveMass(f"primary masses must be positive, got m1={self.m1!r}, m2={self.m2!r}")
        if self.m3 < 0.0:
            raise NonpositiveMass(f"test-particle mass must be nonnegative, got m3={self.m3!r}")
        if self.G <= 0.0 or self.k <= 0.0:
            raise ValueError("G and k must be positive")

    @property
    def c12(self) -> float:
        """Coupling of the primaries: G m1 m2 - k q1 q2."""
        return self.G * self.m1 * self.m2 - self.k * self.q1 * self.q2


def reduce(sys: PhysicalSystem) -> SystemParams:
    """Collapse a physical system to (mu, beta1, beta2).

    beta_j = 1 - alpha~_j alpha~_3 where alpha~_j = (q_j/m_j) sqrt(k/G).
    The test particle enters only through the normalization |alpha~_3| = 1,
    i.e. through the sign of q3; its mass drops out in the m3 -> 0 limit.
    Bodies 1 and 2 are swapped when m2 > m1 so that mu lands in (0, 1/2],
    and the swap is recorded.

    Raises ZeroThirdCharge when q3 = 0 (no sign to normalize) and
    NonpositiveMass when a primary mass is invalid.
    """
    if sys.m1 <= 0.0 or sys.m2 <= 0.0:
        raise NonpositiveMass(f"primary masses must be positive, got m1={sys.m1!r}, m2={sys.m2!r}")
    if sys.q3 == 0.0:
        raise ZeroThirdCharge("q3 = 0: beta-parameters need the test particle's charge sign")

    scale = math.sqrt(sys.k / sys.G)
    sign3 = math.copysign(1.0, sys.q3)
    beta1 = 1.0 - (sys.q1 / sys.m1) * scale * sign3
    beta2 = 1.0 - (sys.q2 / sys.m2) * scale * sign3

    m1, m2 = sys.m1, sys.m2
    swapped = m2 > m1
    if swapped:
        m1, m2 = m2, m1
        beta1, beta2 = beta2, beta1
    mu = m2 / (m1 + m2)
    return SystemParams(mu=mu, beta1=beta1, beta2=beta2, swapped=swapped)
