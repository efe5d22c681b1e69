"""Run configuration loaded from YAML with environment overrides."""

import logging
import os
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

import yaml

from src.errors import ConfigError

logger = logging.getLogger(__name__)

THREADS_ENV_VAR = "GROWTH_CHECK_THREADS"


@dataclass(frozen=True)
class RunConfig:
    """Precision and resource settings shared by every computation.

    Attributes:
        depth: Level n of the Mazur-Tate elements (p^n group elements)
        coeff_prec: Absolute precision cap M for non-constant coefficients
        constant_prec: Absolute precision cap for constant terms
        digits: mpmath decimal digits for periods and L-series
        index_bound: Largest P^1(Z/N) size a symbol space may have
        threads: Worker threads used by scans
        hecke_bound: Largest prime used to cut out eigenspaces
        torsion_bound: Search bound for torsion certificates
        twist_search_bound: Largest |D'| tried when normalizing symbols
        short_circuit: Skip analytic work once a condition has failed
    """

    depth: int = 3
    coeff_prec: int = 4
    constant_prec: int = 33
    digits: int = 60
    index_bound: int = 100_000
    threads: int = 4
    hecke_bound: int = 100
    torsion_bound: int = 1000
    twist_search_bound: int = 500
    short_circuit: bool = False

    def __post_init__(self) -> None:
        if self.depth < 1:
            raise ConfigError(f"depth must be at least 1, got {self.depth}")
        if self.coeff_prec < 2:
            raise ConfigError(f"coeff_prec must be at least 2, got {self.coeff_prec}")
        if self.constant_prec < self.coeff_prec:
            raise ConfigError("constant_prec must not be smaller than coeff_prec")
        if self.threads < 1:
            raise ConfigError(f"threads must be positive, got {self.threads}")

    def with_overrides(self, **overrides) -> "RunConfig":
        """Return a copy with the non-None overrides applied."""
        changes = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **changes)

    def to_dict(self) -> dict:
        return asdict(self)


def load_config(config_path: str | Path | None) -> RunConfig:
    """Load a RunConfig from the ``run:`` section of a YAML file.

    Args:
        config_path: Path to checker_config.yaml, or None for defaults

    Returns:
        Parsed configuration; missing keys keep their defaults

    Raises:
        ConfigError: If the file has unknown keys or invalid values
    """
    if config_path is None:
        return RunConfig()
    path = Path(config_path)
    if not path.exists():
        logger.warning(f"Config file {path} not found, using defaults")
        return RunConfig()

    with path.open() as f:
        raw = yaml.safe_load(f) or {}

    section = raw.get("run", {}) or {}
    known = {field.name for field in fields(RunConfig)}
    unknown = set(section) - known
    if unknown:
        raise ConfigError(f"Unknown run settings in {path}: {sorted(unknown)}")

    try:
        return RunConfig(**section)
    except TypeError as e:
        raise ConfigError(f"Invalid run settings in {path}: {e}") from e


def apply_env_overrides(config: RunConfig) -> RunConfig:
    """Apply environment variable overrides (currently the thread count)."""
    value = os.environ.get(THREADS_ENV_VAR)
    if not value:
        return config
    try:
        threads = int(value)
    except ValueError as e:
        raise ConfigError(f"{THREADS_ENV_VAR} must be an integer, got {value!r}") from e
    logger.info(f"Thread count overridden by {THREADS_ENV_VAR}={threads}")
    return config.with_overrides(threads=threads)
