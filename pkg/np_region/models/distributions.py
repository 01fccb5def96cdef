"""Data models for finite-support distribution pairs and their discretization inputs."""

import math
from typing import Dict, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class CategoricalPair(BaseModel):
    """Two probability mass vectors over a shared finite support - Version 1.

    The pair (P, Q) is the substrate of every computation in np-region:
    continuous pairs are discretized into it, products of pairs stay in it,
    and realized boundaries come back as one.

    Attributes:
        labels: Item identifiers, one per support point
        p: Masses of P
        q: Masses of Q
        metadata: Numeric side information (truncation mass, dropped cells)

    Examples:
        >>> pair = CategoricalPair(labels=("a", "b"), p=(0.5, 0.5), q=(0.25, 0.75))
        >>> pair.size
        2
        >>> float(pair.p_array.sum())
        1.0
    """

    model_config = ConfigDict(frozen=True)

    labels: Tuple[str, ...] = Field(
        ...,
        description="Item identifiers, one per support point",
        min_length=1,
    )

    p: Tuple[float, ...] = Field(
        ...,
        description="Probability masses of P",
        min_length=1,
    )

    q: Tuple[float, ...] = Field(
        ...,
        description="Probability masses of Q",
        min_length=1,
    )

    metadata: Dict[str, float] = Field(
        default_factory=dict,
        description="Numeric side information such as truncated mass",
    )

    @model_validator(mode='after')
    def check_masses(self) -> 'CategoricalPair':
        """Enforce equal lengths, nonnegative masses, unit sums and no dead items."""
        if not (len(self.labels) == len(self.p) == len(self.q)):
            raise ValueError("labels, p and q must have the same length")
        p, q = self.p_array, self.q_array
        if (p < 0).any() or (q < 0).any():
            raise ValueError("masses must be nonnegative")
        if abs(math.fsum(self.p) - 1.0) > 1e-12 or abs(math.fsum(self.q) - 1.0) > 1e-12:
            raise ValueError("masses must sum to one")
        if ((p == 0) & (q == 0)).any():
            raise ValueError("items with zero mass under both P and Q are not allowed")
        return self

    @property
    def size(self) -> int:
        """Number of support points."""
        return len(self.p)

    @property
    def p_array(self) -> np.ndarray:
        """Masses of P as a float array."""
        return np.asarray(self.p, dtype=float)

    @property
    def q_array(self) -> np.ndarray:
        """Masses of Q as a float array."""
        return np.asarray(self.q, dtype=float)

    def to_dict(self) -> Dict[str, list]:
        """Serialize to the pair JSON schema."""
        return {'labels': list(self.labels), 'p': list(self.p), 'q': list(self.q)}

    def __str__(self) -> str:
        """String representation."""
        return f"CategoricalPair(n={self.size})"

    def __repr__(self) -> str:
        """Developer-friendly representation."""
        return f"CategoricalPair(labels={self.labels!r}, p={self.p!r}, q={self.q!r})"


class GridSpec(BaseModel):
    """Equal-width cell grid over a 1-D window.

    The window [lower, upper] is cut into ``nodes`` cells. Validity
    (lower < upper, nodes >= 2) is checked by the discretizer, which raises
    DegenerateGridError.
    """

    model_config = ConfigDict(frozen=True)

    lower: float = Field(..., description="Left end of the window")
    upper: float = Field(..., description="Right end of the window")
    nodes: int = Field(..., description="Number of equal-width cells")

    @property
    def edges(self) -> np.ndarray:
        """Cell edges, ``nodes + 1`` values."""
        return np.linspace(self.lower, self.upper, self.nodes + 1)

    @property
    def midpoints(self) -> np.ndarray:
        """Cell midpoints."""
        edges = self.edges
        return 0.5 * (edges[:-1] + edges[1:])

    @property
    def width(self) -> float:
        """Common cell width."""
        return (self.upper - self.lower) / self.nodes


class AnalyticFamily(BaseModel):
    """A named 1-D distribution family with its parameters.

    Supported kinds are ``uniform`` (a, b), ``gaussian`` (mu, sigma) and
    ``beta`` (a, b). Parameter checks live in the discretizer so that the
    failure surfaces as UnsupportedFamilyError.

    Examples:
        >>> AnalyticFamily.parse("gaussian:0,2")
        AnalyticFamily(kind='gaussian', params=(0.0, 2.0))
    """

    model_config = ConfigDict(frozen=True, str_strip_whitespace=True)

    kind: str = Field(..., description="Family name: uniform, gaussian or beta")
    params: Tuple[float, ...] = Field(..., description="Family parameters in canonical order")

    @field_validator('kind', mode='before')
    @classmethod
    def lowercase_kind(cls, v: str) -> str:
        """Normalize the family name."""
        return v.lower().strip() if isinstance(v, str) else v

    @classmethod
    def parse(cls, spec: str) -> 'AnalyticFamily':
        """Build a family from a CLI spec string such as ``beta:1,0.5``.

        Raises:
            UnsupportedFamilyError: If the string is malformed
        """
        from np_region.base import UnsupportedFamilyError

        kind, sep, rest = spec.partition(':')
        if not sep or not rest:
            raise UnsupportedFamilyError(f"Family spec must look like 'kind:a,b', got {spec!r}")
        try:
            params = tuple(float(x) for x in rest.split(','))
        except ValueError:
            raise UnsupportedFamilyError(f"Non-numeric family parameters in {spec!r}")
        return cls(kind=kind, params=params)

    @property
    def spec(self) -> str:
        """Inverse of :meth:`parse`."""
        return f"{self.kind}:" + ",".join(f"{x:g}" for x in self.params)

    def __repr__(self) -> str:
        """Developer-friendly representation."""
        return f"AnalyticFamily(kind={self.kind!r}, params={self.params!r})"


class LRSegment(BaseModel):
    """One step of the likelihood-ratio profile: items sharing the ratio p/q."""

    model_config = ConfigDict(frozen=True)

    ratio: float = Field(..., description="Likelihood ratio p/q, +inf when q_mass is 0", ge=0.0)
    p_mass: float = Field(..., description="Total P mass of the merged items", ge=0.0)
    q_mass: float = Field(..., description="Total Q mass of the merged items", ge=0.0)

    def __str__(self) -> str:
        """String representation."""
        return f"{self.ratio:.6g}: p={self.p_mass:.6g}, q={self.q_mass:.6g}"


class LRProfile(BaseModel):
    """Likelihood-ratio step profile, ratios strictly descending.

    An infinite ratio may only appear first and a zero ratio only last.
    """

    model_config = ConfigDict(frozen=True)

    segments: Tuple[LRSegment, ...] = Field(..., min_length=1)

    @model_validator(mode='after')
    def check_order(self) -> 'LRProfile':
        """Ratios must strictly decrease."""
        ratios = [s.ratio for s in self.segments]
        if any(a <= b for a, b in zip(ratios, ratios[1:])):
            raise ValueError("segment ratios must be strictly decreasing")
        return self

    @property
    def ratios(self) -> np.ndarray:
        """Segment ratios."""
        return np.array([s.ratio for s in self.segments], dtype=float)

    @property
    def p_masses(self) -> np.ndarray:
        """Segment P masses."""
        return np.array([s.p_mass for s in self.segments], dtype=float)

    @property
    def q_masses(self) -> np.ndarray:
        """Segment Q masses."""
        return np.array([s.q_mass for s in self.segments], dtype=float)

    @property
    def infinite_mass(self) -> float:
        """P mass on items with q = 0."""
        first = self.segments[0]
        return first.p_mass if math.isinf(first.ratio) else 0.0

    def __len__(self) -> int:
        return len(self.segments)
