"""Run configuration for the transgen command line and sweeps."""

from __future__ import annotations

__all__ = ("PRECISION_CAP_ENV", "OutputFormat", "RunConfig", "env_precision_cap")

import logging
import os
from dataclasses import dataclass, fields, replace
from enum import Enum
from pathlib import Path
from typing import Any

import yaml

from .errors import ConfigError

PRECISION_CAP_ENV = "TRANSGEN_PRECISION_CAP"
"""Environment variable that overrides the default precision cap (bits).
"""

DEFAULT_PRECISION_CAP = 4096

MIN_PRECISION = 64


class OutputFormat(str, Enum):
    """Report output formats."""

    TEXT = "text"
    JSON = "json"
    CSV = "csv"


def env_precision_cap(default: int = DEFAULT_PRECISION_CAP) -> int:
    """Read the precision cap from the environment.

    Parameters
    ----------
    default
        Value used when `PRECISION_CAP_ENV` is unset.

    Returns
    -------
    cap
        Precision cap in bits.

    Raises
    ------
    ConfigError
        Raised if the variable is not an integer of at least 64.
    """
    raw = os.environ.get(PRECISION_CAP_ENV)
    if raw is None or raw.strip() == "":
        return default
    try:
        cap = int(raw)
    except ValueError:
        raise ConfigError(f"{PRECISION_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < MIN_PRECISION:
        raise ConfigError(f"{PRECISION_CAP_ENV} must be at least {MIN_PRECISION}, got {cap}")
    return cap


@dataclass(frozen=True)
class RunConfig:
    """Settings for one transgen run.

    Values come from, in increasing priority, the defaults below, a YAML
    configuration file, the environment and command-line options.
    """

    precision_cap: int = DEFAULT_PRECISION_CAP
    """Largest working precision, in bits, for certified floors and
    comparisons.
    """

    sweep_span: int = 100_000
    """Number of consecutive integers scanned above each sweep threshold."""

    geometric_limit: int = 10**9
    """Upper end of the sparse geometric grid that follows the dense scan."""

    as_data: Path | None = None
    """Optional CSV file of composition-length maxima ``as(m)``,
    10 <= m <= 480.
    """

    output_format: OutputFormat = OutputFormat.TEXT
    """Format of emitted reports."""

    exhaustive: bool = False
    """Replace sampled grids by exhaustive enumeration where a sweep offers
    both.
    """

    jobs: int = 1
    """Worker processes for sweeps."""

    def __post_init__(self) -> None:
        if self.precision_cap < MIN_PRECISION:
            raise ConfigError(f"precision_cap must be at least {MIN_PRECISION}, got {self.precision_cap}")
        if self.sweep_span < 0:
            raise ConfigError(f"sweep_span must be nonnegative, got {self.sweep_span}")
        if self.geometric_limit < 2:
            raise ConfigError(f"geometric_limit must be at least 2, got {self.geometric_limit}")
        if self.jobs < 1:
            raise ConfigError(f"jobs must be at least 1, got {self.jobs}")
        if self.as_data is not None and not isinstance(self.as_data, Path):
            object.__setattr__(self, "as_data", Path(self.as_data))
        if not isinstance(self.output_format, OutputFormat):
            try:
                object.__setattr__(self, "output_format", OutputFormat(self.output_format))
            except ValueError:
                raise ConfigError(f"Unknown output format {self.output_format!r}") from None

    @classmethod
    def from_env(cls, **overrides: Any) -> RunConfig:
        """Create a configuration with the environment applied.

        Parameters
        ----------
        **overrides
            Field values that take priority over the environment. `None`
            values are ignored.
        """
        values: dict[str, Any] = {"precision_cap": env_precision_cap()}
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    @classmethod
    def from_yaml(cls, path: Path | str, **overrides: Any) -> RunConfig:
        """Load a configuration from a YAML mapping.

        Parameters
        ----------
        path
            Path to a YAML file whose top-level keys are `RunConfig` field
            names.
        **overrides
            Field values that take priority over the file and the
            environment. `None` values are ignored.

        Raises
        ------
        ConfigError
            Raised for unknown keys or a non-mapping document.
        """
        logger = logging.getLogger(__name__)

        data = yaml.safe_load(Path(path).read_text()) or {}
        if not isinstance(data, dict):
            raise ConfigError(f"Configuration file {path} must contain a mapping")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"Unknown configuration keys in {path}: {', '.join(unknown)}")
        logger.debug("Loaded configuration %s: %r", path, data)
        if os.environ.get(PRECISION_CAP_ENV):
            data["precision_cap"] = env_precision_cap()
        data.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**data)

    def with_overrides(self, **overrides: Any) -> RunConfig:
        """Return a copy with non-`None` overrides applied."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})
