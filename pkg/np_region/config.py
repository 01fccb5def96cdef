"""Run configuration for the np-region command line.

Settings are layered: built-in defaults, then a YAML file given with
``--config``, then the ``NP_REGION_GRID`` environment variable, then
explicit command-line flags.
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Literal, Mapping, Optional, Tuple, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from np_region.base import ConfigError

logger = logging.getLogger(__name__)

GRID_ENV_VAR = 'NP_REGION_GRID'

SUBCOMMANDS = (
    'divergence', 'boundary', 'lower', 'upper', 'realize',
    'ber', 'samplesize', 'roc', 'figure',
)

# Keys a YAML configuration file may set
FILE_KEYS = ('grid', 'hull_grid', 'nodes', 'format')


class RunConfig(BaseModel):
    """Resolved settings of one command-line run.

    Examples:
        >>> RunConfig(subcommand='boundary').grid
        201
    """

    model_config = ConfigDict(frozen=True, extra='forbid')

    subcommand: Literal[
        'divergence', 'boundary', 'lower', 'upper', 'realize',
        'ber', 'samplesize', 'roc', 'figure',
    ] = Field(..., description="Subcommand to run")
    inputs: Tuple[str, ...] = Field(default=(), description="Input file paths")
    specs: Tuple[str, ...] = Field(default=(), description="Generator or bound spec strings")
    grid: int = Field(default=201, description="Number of alpha samples for curves", ge=2)
    hull_grid: int = Field(default=4097, description="Sampling grid of the convex refinement", ge=2)
    nodes: int = Field(default=4096, description="Cells when discretizing analytic families", ge=2)
    format: Literal['csv', 'json'] = Field(default='csv', description="Output format")
    output: Optional[str] = Field(default=None, description="Output path, stdout when unset")
    verbose: bool = Field(default=False, description="Log at DEBUG level")

    def __str__(self) -> str:
        """String representation."""
        return f"RunConfig({self.subcommand}, grid={self.grid}, format={self.format})"


def load_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """Read the settings of a YAML configuration file.

    Raises:
        ConfigError: If the file cannot be read or holds unknown keys
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f)
    except OSError as e:
        raise ConfigError(f"Cannot read config file {path}: {e}")
    except yaml.YAMLError as e:
        raise ConfigError(f"Invalid YAML in {path}: {e}")

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"Config file {path} must hold a mapping")
    unknown = sorted(set(data) - set(FILE_KEYS))
    if unknown:
        raise ConfigError(f"Unknown config keys in {path}: {', '.join(map(str, unknown))}")
    return dict(data)


def grid_from_env(environ: Mapping[str, str]) -> Optional[int]:
    """Grid override from ``NP_REGION_GRID``, None when unset."""
    raw = environ.get(GRID_ENV_VAR)
    if raw is None or raw.strip() == '':
        return None
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{GRID_ENV_VAR} must be an integer, got {raw!r}")


def resolve_config(
    subcommand: str,
    flags: Mapping[str, Any],
    config_path: Optional[Union[str, Path]] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> RunConfig:
    """Merge defaults, config file, environment and flags into a RunConfig.

    Args:
        subcommand: Selected subcommand
        flags: Command-line values; None means the flag was not given
        config_path: Optional YAML configuration file
        environ: Environment mapping (defaults to os.environ)

    Raises:
        ConfigError: If any layer holds an invalid value
    """
    environ = os.environ if environ is None else environ
    values: Dict[str, Any] = {'subcommand': subcommand}

    if config_path is not None:
        values.update(load_config_file(config_path))

    env_grid = grid_from_env(environ)
    if env_grid is not None:
        values['grid'] = env_grid

    values.update({k: v for k, v in flags.items() if v is not None})

    try:
        config = RunConfig(**values)
    except ValidationError as e:
        first = e.errors()[0]
        where = '.'.join(str(part) for part in first['loc']) or 'config'
        raise ConfigError(f"Invalid configuration: {where}: {first['msg']}")

    logger.debug("resolved %s", config)
    return config
