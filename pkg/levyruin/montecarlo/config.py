""" config.py

    Simulation settings and the Monte Carlo result record.
"""

from typing import Any, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..consts import DEFAULT_BLOCK_SIZE, DEFAULT_EXIT_BUDGET


class SimConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid')

    n_paths: int = Field(100_000, ge=1)
    dt: float = Field(1e-3, gt=0.0)
    seed: int = Field(0, ge=0, lt=2 ** 64)
    bridge_correction: bool = False
    antithetic: bool = False
    budget: int = Field(DEFAULT_EXIT_BUDGET, ge=1)
    """ Cap on n_paths * steps """
    workers: int = Field(1, ge=1)
    block_size: int = Field(DEFAULT_BLOCK_SIZE, ge=2)

    @model_validator(mode='after')
    def _check_pairs(self):
        if self.antithetic and (self.n_paths % 2 or self.block_size % 2):
            raise ValueError('antithetic sampling needs an even n_paths and block_size')
        return self


class MCEstimate(BaseModel):
    p_hat: float
    stderr: float
    ci95: Tuple[float, float]
    n_paths: int
    n_effective: int
    dt: float
    steps: int
    seed: int
    model: Optional[dict] = None
    domain: Optional[List[Any]] = None
    experimental: bool = False

    def to_json(self) -> dict:
        return self.model_dump(mode='json')
