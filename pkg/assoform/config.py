"""Configuration management."""

from pathlib import Path
from typing import List, Literal, Optional, Tuple

import yaml
from pydantic import BaseModel, Field

Grid = List[Tuple[int, int]]


class RunConfig(BaseModel):
    """Parameters shared by every command."""
    n: int = Field(default=3, ge=2)
    d: int = Field(default=2, ge=2)
    seed: int = Field(default=0, ge=0, lt=2 ** 64)
    height: int = Field(default=9, ge=1)
    format: Literal["text", "json"] = "text"
    cases: Optional[int] = Field(default=None, ge=1)


class SamplingConfig(BaseModel):
    """Rejection sampling limits."""
    max_attempts: int = Field(default=10_000, ge=1)
    macaulay_retries: int = Field(default=20, ge=0)


class VerifyConfig(BaseModel):
    """Case counts and (n, d) grids of the verification suites."""
    roundtrip_cases: int = 100
    roundtrip_grid: Grid = Field(default_factory=lambda: [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)])
    dimension_grid: Grid = Field(default_factory=lambda: [(2, 2), (2, 3), (3, 2), (3, 3)])
    binary_pairs: int = 200
    ternary_triples: int = 100
    degenerate_triples: int = 20
    chart_cases: int = 50
    gl_cases: int = 50
    transform_cases: int = 50
    ternary_random: int = 200
    sl3_cases: int = 50


class Config(BaseModel):
    """Main configuration."""
    run: RunConfig = Field(default_factory=RunConfig)
    sampling: SamplingConfig = Field(default_factory=SamplingConfig)
    verify: VerifyConfig = Field(default_factory=VerifyConfig)

    @classmethod
    def load(cls, config_path: Optional[Path] = None) -> "Config":
        """Load configuration from file or use defaults."""
        if config_path is None:
            config_path = Path("assoform.yaml")

        if not config_path.exists():
            return cls()

        with open(config_path, "r") as f:
            data = yaml.safe_load(f) or {}

        return cls(**data)

    def with_overrides(self, **overrides) -> "Config":
        """Copy with run settings replaced by every override that is not None."""
        values = {k: v for k, v in overrides.items() if v is not None}
        run = RunConfig(**{**self.run.model_dump(), **values})
        return self.model_copy(update={"run": run})
