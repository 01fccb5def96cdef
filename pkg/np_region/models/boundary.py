"""Data models for Neyman-Pearson boundaries and realized CDF tables."""

from typing import Dict, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

Vertex = Tuple[float, float]

# Convexity and monotonicity checks allow this much roundoff
_SHAPE_TOL = 1e-12

# Midpoint convexity slack of tabulated CDFs
CDF_CONVEXITY_TOL = 1e-9


def midpoint_convex(x: np.ndarray, f: np.ndarray, tol: float = CDF_CONVEXITY_TOL) -> bool:
    """Midpoint convexity of the polyline (x, f) on consecutive triples."""
    if len(x) < 3:
        return True
    left = (f[1:-1] - f[:-2]) / (x[1:-1] - x[:-2])
    right = (f[2:] - f[1:-1]) / (x[2:] - x[1:-1])
    return bool(((right - left) * (x[2:] - x[:-2]) >= -tol).all())


class PiecewiseLinearBoundary(BaseModel):
    """Convex, nonincreasing polyline B(alpha) from alpha = 0 to (1, 0) - Version 1.

    The first vertex sits at alpha = 0. When its beta is below 1 it encodes
    the vertical drop from (0, 1) caused by P-mass where q vanishes. The
    last vertex is always (1, 0).

    Attributes:
        vertices: (alpha, beta) pairs, strictly increasing in alpha

    Examples:
        >>> b = PiecewiseLinearBoundary(vertices=((0.0, 1.0), (0.1, 0.4), (0.4, 0.1), (1.0, 0.0)))
        >>> b.slopes.round(6).tolist()
        [-6.0, -1.0, -0.166667]
    """

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[Vertex, ...] = Field(
        ...,
        description="Boundary vertices (alpha, beta), alpha strictly increasing",
        min_length=2,
    )

    @model_validator(mode='after')
    def check_shape(self) -> 'PiecewiseLinearBoundary':
        """Endpoints, monotonicity and convexity."""
        a, b = self.alphas, self.betas
        if a[0] != 0.0 or a[-1] != 1.0 or b[-1] != 0.0:
            raise ValueError("boundary must start at alpha=0 and end at (1, 0)")
        if (b < 0).any() or (b > 1).any():
            raise ValueError("beta values must lie in [0, 1]")
        if (np.diff(a) <= 0).any():
            raise ValueError("alpha must be strictly increasing")
        if (np.diff(b) > _SHAPE_TOL).any():
            raise ValueError("beta must be nonincreasing")
        for o, m, n in zip(self.vertices, self.vertices[1:], self.vertices[2:]):
            turn = (m[0] - o[0]) * (n[1] - o[1]) - (m[1] - o[1]) * (n[0] - o[0])
            if turn < -_SHAPE_TOL:
                raise ValueError("boundary must be convex")
        return self

    @property
    def alphas(self) -> np.ndarray:
        """Vertex abscissas."""
        return np.array([v[0] for v in self.vertices], dtype=float)

    @property
    def betas(self) -> np.ndarray:
        """Vertex ordinates."""
        return np.array([v[1] for v in self.vertices], dtype=float)

    @property
    def slopes(self) -> np.ndarray:
        """Segment slopes (nonpositive, increasing)."""
        return np.diff(self.betas) / np.diff(self.alphas)

    @property
    def is_ignorance(self) -> bool:
        """Whether the boundary is the chord from (0, 1) to (1, 0)."""
        return self.vertices == ((0.0, 1.0), (1.0, 0.0))

    def to_dict(self) -> Dict[str, List[List[float]]]:
        """Serialize to the boundary JSON schema."""
        return {'vertices': [[a, b] for a, b in self.vertices]}

    def __len__(self) -> int:
        return len(self.vertices)

    def __str__(self) -> str:
        """String representation."""
        return f"PiecewiseLinearBoundary({len(self.vertices)} vertices)"


class CdfTable(BaseModel):
    """Tabulated convex CDF on [0, 1] realizing a prescribed boundary against uniform P.

    Attributes:
        knots: Sorted x values from 0 to 1
        values: F(x) at the knots, from 0 to 1
    """

    model_config = ConfigDict(frozen=True)

    knots: Tuple[float, ...] = Field(..., description="Sorted x values in [0, 1]", min_length=2)
    values: Tuple[float, ...] = Field(..., description="F(x) at the knots", min_length=2)

    @model_validator(mode='after')
    def check_cdf(self) -> 'CdfTable':
        """Monotone convex CDF pinned at F(0)=0 and F(1)=1."""
        if len(self.knots) != len(self.values):
            raise ValueError("knots and values must have the same length")
        x, f = np.asarray(self.knots), np.asarray(self.values)
        if x[0] != 0.0 or x[-1] != 1.0 or (np.diff(x) <= 0).any():
            raise ValueError("knots must increase from 0 to 1")
        if f[0] != 0.0 or f[-1] != 1.0 or (np.diff(f) < 0).any():
            raise ValueError("values must be a nondecreasing CDF from 0 to 1")
        if not midpoint_convex(x, f):
            raise ValueError("values must be convex in x")
        return self

    @property
    def x(self) -> np.ndarray:
        """Knots as an array."""
        return np.asarray(self.knots, dtype=float)

    @property
    def f(self) -> np.ndarray:
        """CDF values as an array."""
        return np.asarray(self.values, dtype=float)

    def is_convex(self, tol: float = CDF_CONVEXITY_TOL) -> bool:
        """Midpoint convexity on consecutive knot triples."""
        return midpoint_convex(self.x, self.f, tol)

    def __call__(self, x):
        """Piecewise-linear interpolation of F."""
        return np.interp(x, self.x, self.f)
