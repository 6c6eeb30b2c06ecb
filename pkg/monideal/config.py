"""
Runtime settings, read from the environment and overridden by CLI flags.

Examples
--------
>>> from monideal.config import Settings
>>> Settings(horizon=4).horizon
4
"""

import os
from pathlib import Path
from typing import Mapping, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .errors import SchemaError

ENV_PREFIX = "MONIDEAL_"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _default_workers() -> int:
    return os.cpu_count() or 1


class Settings(BaseModel):
    """Process-level knobs shared by the CLI and the batch script.

    Attributes
    ----------
    cache_dir : Path, optional
        Directory for persisted powers; in-memory caching only when None.
    workers : int
        Threads used by colon pattern scans.
    horizon : int
        Default scan horizon ``L``.
    log_level : str
        Name of a :mod:`logging` level.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    cache_dir: Optional[Path] = None
    workers: int = Field(default_factory=_default_workers, ge=1)
    horizon: int = Field(default=6, ge=2)
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in LOG_LEVELS:
            raise ValueError(f"log level must be one of {', '.join(LOG_LEVELS)}")
        return value

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        """Read ``MONIDEAL_CACHE_DIR``, ``MONIDEAL_WORKERS``, ``MONIDEAL_HORIZON`` and ``MONIDEAL_LOG_LEVEL``.

        Raises
        ------
        SchemaError
            If a variable is set to an invalid value.
        """
        environ = os.environ if environ is None else environ
        values = {}
        for field in cls.model_fields:
            raw = environ.get(ENV_PREFIX + field.upper())
            if raw:
                values[field] = raw
        try:
            return cls(**values)
        except ValidationError as exc:
            raise SchemaError(f"invalid environment settings: {exc.errors(include_url=False)[0]['msg']}", exc) from exc

    def override(self, **changes) -> "Settings":
        """Return a copy with the non-None ``changes`` applied and validated."""
        changes = {k: v for k, v in changes.items() if v is not None}
        try:
            return type(self).model_validate({**self.model_dump(), **changes})
        except ValidationError as exc:
            raise SchemaError(f"invalid settings: {exc.errors(include_url=False)[0]['msg']}", exc) from exc
