"""Data models for convex generators and divergence values."""

import math
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

GeneratorKind = Literal[
    'tvd', 'kl', 'reverse_kl', 'hellinger2', 'alpha', 'hockey_stick', 'chi2', 'indicator'
]

# CLI spec prefixes
_SPEC_NAMES = {
    'tvd': 'tvd',
    'kl': 'kl',
    'rkl': 'reverse_kl',
    'h2': 'hellinger2',
    'alpha': 'alpha',
    'hs': 'hockey_stick',
    'chi2': 'chi2',
    'ind': 'indicator',
}


def valid_indicator_range(lower: float, upper: float) -> bool:
    """Whether (lower, upper) is an admissible indicator interval: 0 <= lower < 1 < upper < inf."""
    return 0.0 <= lower < 1.0 < upper < math.inf


class FGenerator(BaseModel):
    """Descriptor of a convex generator f with f(1) = 0 - Version 1.

    Parameterized kinds carry their parameters in dedicated fields:
    ``alpha`` uses ``q`` (any real except 0 and 1), ``hockey_stick`` uses
    ``gamma`` (>= 0) and ``indicator`` uses ``lower``/``upper`` with
    0 <= lower < 1 < upper.

    Examples:
        >>> FGenerator.parse("alpha:0.25")
        FGenerator(kind='alpha', q=0.25)
        >>> FGenerator.parse("ind:0.5,3").spec
        'ind:0.5,3'
    """

    model_config = ConfigDict(frozen=True)

    kind: GeneratorKind = Field(..., description="Generator family")
    q: Optional[float] = Field(default=None, description="Exponent of the alpha family")
    gamma: Optional[float] = Field(default=None, description="Threshold of the hockey-stick family")
    lower: Optional[float] = Field(default=None, description="Lower end of the indicator interval")
    upper: Optional[float] = Field(default=None, description="Upper end of the indicator interval")

    @model_validator(mode='after')
    def check_parameters(self) -> 'FGenerator':
        """Each kind gets exactly the parameters it needs, in range."""
        if self.kind == 'alpha':
            if self.q is None or not math.isfinite(self.q) or self.q in (0.0, 1.0):
                raise ValueError("alpha generator needs a finite q outside {0, 1}")
        elif self.kind == 'hockey_stick':
            if self.gamma is None or not (0.0 <= self.gamma < math.inf):
                raise ValueError("hockey_stick generator needs a finite gamma >= 0")
        elif self.kind == 'indicator':
            if self.lower is None or self.upper is None:
                raise ValueError("indicator generator needs lower and upper")
            if not valid_indicator_range(self.lower, self.upper):
                raise ValueError("indicator generator needs 0 <= lower < 1 < upper")
        return self

    @classmethod
    def parse(cls, spec: str) -> 'FGenerator':
        """Build a generator from a CLI spec string.

        Accepted forms: ``tvd``, ``kl``, ``rkl``, ``h2``, ``alpha:q``,
        ``hs:gamma``, ``chi2``, ``ind:l,u``.

        Raises:
            ParamOutOfRangeError: If the spec is unknown or its parameters are invalid
        """
        from pydantic import ValidationError
        from np_region.base import ParamOutOfRangeError

        name, _, rest = spec.strip().partition(':')
        kind = _SPEC_NAMES.get(name.lower())
        if kind is None:
            raise ParamOutOfRangeError(f"Unknown generator {name!r}")
        try:
            values = [float(x) for x in rest.split(',')] if rest else []
        except ValueError:
            raise ParamOutOfRangeError(f"Non-numeric generator parameters in {spec!r}")

        expected = {'alpha': 1, 'hockey_stick': 1, 'indicator': 2}.get(kind, 0)
        if len(values) != expected:
            raise ParamOutOfRangeError(
                f"Generator {name!r} takes {expected} parameter(s), got {len(values)}"
            )

        fields = {}
        if kind == 'alpha':
            fields['q'] = values[0]
        elif kind == 'hockey_stick':
            fields['gamma'] = values[0]
        elif kind == 'indicator':
            fields['lower'], fields['upper'] = values
        try:
            return cls(kind=kind, **fields)
        except ValidationError as e:
            raise ParamOutOfRangeError(f"Invalid generator {spec!r}: {e.errors()[0]['msg']}")

    @property
    def spec(self) -> str:
        """Inverse of :meth:`parse`."""
        if self.kind == 'alpha':
            return f"alpha:{self.q:g}"
        if self.kind == 'hockey_stick':
            return f"hs:{self.gamma:g}"
        if self.kind == 'indicator':
            return f"ind:{self.lower:g},{self.upper:g}"
        return {'reverse_kl': 'rkl', 'hellinger2': 'h2'}.get(self.kind, self.kind)

    def __str__(self) -> str:
        """String representation."""
        return self.spec

    def __repr__(self) -> str:
        """Developer-friendly representation."""
        params = {
            'alpha': f", q={self.q!r}",
            'hockey_stick': f", gamma={self.gamma!r}",
            'indicator': f", lower={self.lower!r}, upper={self.upper!r}",
        }.get(self.kind, "")
        return f"FGenerator(kind={self.kind!r}{params})"


class DivergenceValue(BaseModel):
    """An f-divergence value on the extended half-line [0, +inf]."""

    model_config = ConfigDict(frozen=True)

    value: float = Field(..., description="Divergence value, possibly +inf", ge=0.0)

    @property
    def finite(self) -> bool:
        """Whether the value is finite."""
        return math.isfinite(self.value)

    def __float__(self) -> float:
        return self.value

    def __str__(self) -> str:
        """String representation."""
        return f"{self.value:.12g}"
