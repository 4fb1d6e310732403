"""Validated run configuration of one command-line invocation."""

from enum import Enum
from pathlib import Path

from pydantic import BaseModel, Field, model_validator

from plexlayout.core.config import settings
from plexlayout.utils.validators import GENERATOR_PATTERN


class OrderingName(str, Enum):
    NATIVE = "native"
    RCM = "rcm"
    SHUFFLE = "shuffle"


class RunConfig(BaseModel):
    """Everything a pipeline run needs; exactly one mesh source."""

    gen: str | None = Field(None, pattern=GENERATOR_PATTERN, description="Generator spec")
    mesh: Path | None = Field(None, description="Gmsh MSH 2.2 file")
    parts: int = Field(default=settings.DEFAULT_PARTS, ge=1, description="Number of simulated ranks")
    overlap: int = Field(default=settings.DEFAULT_OVERLAP, ge=0, le=1, description="Cell overlap")
    order: OrderingName = Field(default=OrderingName.NATIVE, description="Cell ordering")
    seed: int = Field(default=settings.SHUFFLE_SEED, ge=0, description="Seed of the shuffled ordering")
    degree: int = Field(default=settings.DEFAULT_DEGREE, ge=1, le=3, description="Lagrange degree")
    out: Path | None = Field(None, description="Output directory; stdout when absent")
    repeats: int = Field(default=settings.BENCH_REPEATS, ge=1, description="Timed benchmark repetitions")

    @model_validator(mode="after")
    def one_mesh_source(self) -> "RunConfig":
        if (self.gen is None) == (self.mesh is None):
            raise ValueError("exactly one of --gen and --mesh is required")
        if self.mesh is not None and self.mesh.suffix.lower() != ".msh":
            raise ValueError(f"mesh file must have the .msh extension: {self.mesh}")
        return self

    @property
    def source(self) -> str:
        return self.gen if self.gen is not None else str(self.mesh)
