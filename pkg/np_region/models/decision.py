"""Data models for class priors and ROC mixing plans."""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field


class PriorPair(BaseModel):
    """Class priors (pi_p, pi_q) with pi_q = 1 - pi_p.

    Examples:
        >>> PriorPair(pi_p=0.3).pi_q
        0.7
    """

    model_config = ConfigDict(frozen=True)

    pi_p: float = Field(..., description="Prior weight of the alpha (false positive) error", gt=0.0, lt=1.0)

    @property
    def pi_q(self) -> float:
        """Complementary prior."""
        return 1.0 - self.pi_p

    def __str__(self) -> str:
        """String representation."""
        return f"PriorPair(pi_p={self.pi_p:.6g}, pi_q={self.pi_q:.6g})"


class MixingPlan(BaseModel):
    """Randomization between a boundary test and a coin flip at the same alpha.

    With probability ``weight`` the boundary test at (t, B(t)) is used,
    otherwise the ignorance test at (t, 1 - t).
    """

    model_config = ConfigDict(frozen=True)

    t: float = Field(..., description="Common false positive rate", ge=0.0, le=1.0)
    weight: float = Field(..., description="Probability of the boundary test", ge=0.0, le=1.0)
    boundary_point: Tuple[float, float] = Field(..., description="(t, B(t))")
    ignorance_point: Tuple[float, float] = Field(..., description="(t, 1 - t)")

    @property
    def target(self) -> Tuple[float, float]:
        """Operating point reached by the randomized test."""
        lam = self.weight
        return (
            lam * self.boundary_point[0] + (1.0 - lam) * self.ignorance_point[0],
            lam * self.boundary_point[1] + (1.0 - lam) * self.ignorance_point[1],
        )

    def __str__(self) -> str:
        """String representation."""
        return f"MixingPlan(t={self.t:.6g}, weight={self.weight:.6g})"
