"""Data models for bound lines and pointwise bound curves."""

import math
from typing import Dict, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from np_region.models.divergences import FGenerator

Orientation = Literal['lower', 'upper']


class Line(BaseModel):
    """Bound line a*alpha + b*beta = c with an orientation tag.

    For ``lower`` lines the achievable side is a*alpha + b*beta >= c; for
    ``upper`` lines some achievable point satisfies a*alpha + b*beta <= c.

    Examples:
        >>> line = Line(a=2.0, b=1.0, c=0.6, orientation='lower')
        >>> round(line.beta_at(0.1), 12)
        0.4
    """

    model_config = ConfigDict(frozen=True)

    a: float = Field(..., description="Coefficient of alpha")
    b: float = Field(..., description="Coefficient of beta")
    c: float = Field(..., description="Right-hand side")
    orientation: Orientation = Field(..., description="lower (supporting) or upper (tangent)")

    @model_validator(mode='after')
    def check_normal(self) -> 'Line':
        """The normal vector (a, b) must not vanish."""
        if self.a == 0.0 and self.b == 0.0:
            raise ValueError("line needs a nonzero normal vector")
        return self

    @property
    def slope(self) -> float:
        """d(beta)/d(alpha), -inf for vertical lines."""
        return -self.a / self.b if self.b != 0.0 else -math.inf

    def beta_at(self, alpha: float) -> float:
        """Ordinate of the line at ``alpha``."""
        if self.b == 0.0:
            raise ZeroDivisionError("vertical line has no ordinate")
        return (self.c - self.a * alpha) / self.b

    def residual(self, alpha: float, beta: float) -> float:
        """a*alpha + b*beta - c; nonnegative on the feasible side of a lower line."""
        return self.a * alpha + self.b * beta - self.c

    def __str__(self) -> str:
        """String representation."""
        return f"{self.a:.6g}*alpha + {self.b:.6g}*beta = {self.c:.6g} ({self.orientation})"


class BoundCurve(BaseModel):
    """Pointwise-evaluable bound beta(alpha) on [0, 1] with provenance.

    The curve stores what it was built from: the bound ``kind``, its
    numeric ``params`` (divergence value, q, rho, ...), the tensorization
    count ``n`` and, depending on the kind, an f-generator or a vertex list.
    Evaluation is delegated to :func:`np_region.curves.evaluate_curve`.

    Examples:
        >>> from np_region.curves import lower_curve
        >>> curve = lower_curve('tvd', 0.5)
        >>> round(float(curve(0.3)), 12)
        0.2
    """

    model_config = ConfigDict(frozen=True)

    kind: str = Field(..., description="Bound kind tag, e.g. 'hellinger' or 'refined_chernoff'")
    orientation: Orientation = Field(..., description="lower or upper bound")
    params: Dict[str, float] = Field(default_factory=dict, description="Numeric parameters")
    n: int = Field(default=1, description="Tensorization count", ge=1)
    generator: Optional[FGenerator] = Field(default=None, description="Generator for generic bounds")
    bounds: Optional[Tuple[float, float]] = Field(
        default=None, description="(lower, upper) ratio bounds for the indicator kind"
    )
    vertices: Optional[Tuple[Tuple[float, float], ...]] = Field(
        default=None, description="Vertex list for polyline curves"
    )

    def __call__(self, alpha):
        """Evaluate at a scalar or an array of alphas in [0, 1]."""
        from np_region.curves import evaluate_curve

        return evaluate_curve(self, alpha)

    def sample(self, grid: int) -> Tuple[np.ndarray, np.ndarray]:
        """Evaluate on ``grid`` equispaced alphas from 0 to 1."""
        from np_region.curves import sample_curve

        return sample_curve(self, grid)

    @property
    def label(self) -> str:
        """Short column label for tabular output."""
        parts = [self.kind]
        if self.generator is not None:
            parts.append(self.generator.spec)
        parts.extend(f"{k}={v:g}" for k, v in sorted(self.params.items()))
        if self.bounds is not None:
            parts.append(f"bounds={self.bounds[0]:g},{self.bounds[1]:g}")
        if self.n != 1:
            parts.append(f"n={self.n}")
        return " ".join(parts)

    def __str__(self) -> str:
        """String representation."""
        return f"BoundCurve({self.orientation}: {self.label})"
