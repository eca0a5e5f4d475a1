# Copyright 2026 mctsynth authors.
# See LICENSE file for licensing details.

"""Validated configuration for simulation and synthesis."""

import logging
from typing import Any, Literal, Mapping, Optional, Type, TypeVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from mctsynth.errors import ConfigurationError

logger = logging.getLogger(__name__)

LOG_LEVELS = ["debug", "info", "warning", "error"]

_ModelT = TypeVar("_ModelT", bound=BaseModel)


class SimulationConfig(BaseModel):
    """Tolerances and size limits of the simulators."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    tolerance: float = Field(default=1e-9, gt=0, description="Unitary comparison tolerance.")
    permutation_tolerance: float = Field(
        default=1e-12, gt=0, description="Amplitude tolerance for permutation circuits."
    )
    phase_threshold: float = Field(
        default=1e-6, gt=0, description="Smallest magnitude used as a phase reference."
    )
    dense_width_limit: int = Field(default=11, ge=1, le=14)
    basis_width_limit: int = Field(default=16, ge=1, le=24)
    batch_columns: int = Field(
        default=2**20,
        ge=1,
        description="Upper bound on amplitudes held per propagation batch.",
    )
    cross_check_inputs: int = Field(
        default=64,
        ge=1,
        description="Basis inputs propagated in floating point to cross-check the exact "
        "images of a permutation circuit wider than the dense limit.",
    )

    @model_validator(mode="after")
    def _dense_within_basis(self) -> "SimulationConfig":
        if self.dense_width_limit > self.basis_width_limit:
            raise ValueError("dense_width_limit must not exceed basis_width_limit")
        return self


class SynthesisConfig(BaseModel):
    """Options of the synthesis selector.

    `piece_bound` decides when a piece of the split construction may use borrowed
    lines: `floor` admits k controls when k <= floor(n/2), which reproduces the
    published table; `ceil` admits every piece for which enough idle lines exist.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    piece_bound: Literal["floor", "ceil"] = "floor"


def load_config(model: Type[_ModelT], overrides: Optional[Mapping[str, Any]] = None) -> _ModelT:
    """Build a configuration model from user overrides.

    Args:
        model: The configuration class to instantiate.
        overrides: Field values to set; `None` values are ignored.

    Returns:
        The validated configuration.

    Raises:
        ConfigurationError: if a value fails validation.
    """
    values = {key: value for key, value in (overrides or {}).items() if value is not None}
    try:
        return model.model_validate(values)
    except ValidationError as e:
        msg = f"invalid {model.__name__}: {values}"
        logger.debug(msg, exc_info=True)
        raise ConfigurationError(msg) from e


def is_log_level_valid(log_level: Optional[str]) -> bool:
    """Return whether the given log level name is accepted by the CLI."""
    return log_level in LOG_LEVELS
