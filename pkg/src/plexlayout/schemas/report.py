"""Schemas for JSON reports."""

from pydantic import BaseModel, Field


class StratumInfo(BaseModel):
    """Size of one depth stratum."""

    depth: int = Field(..., ge=0, description="Topological dimension")
    entity: str = Field(..., description="Entity kind: vertices, edges, facets or cells")
    start: int = Field(..., ge=0, description="First point of the stratum")
    size: int = Field(..., ge=0, description="Number of points")


class MeshInfo(BaseModel):
    """Topology summary emitted by ``info``."""

    source: str = Field(..., description="Mesh source as given on the command line")
    cell_dimension: int = Field(..., description="Topological dimension of the cells")
    chart_size: int = Field(..., ge=0, description="Total number of points")
    strata: list[StratumInfo] = Field(..., description="Strata in chart order")
    euler_characteristic: int = Field(..., description="Alternating sum of stratum sizes")
    labels: dict[str, dict[int, int]] = Field(
        default_factory=dict, description="Per label: value to point count"
    )


class ClassTally(BaseModel):
    """Point and cell count of one entity class."""

    points: int = Field(..., ge=0)
    cells: int = Field(..., ge=0)


class ClassCounts(BaseModel):
    """Entity class counts of one rank."""

    rank: int = Field(..., ge=0)
    core: ClassTally
    non_core: ClassTally = Field(..., alias="non-core")
    halo: ClassTally

    model_config = {"populate_by_name": True}


class ClassReport(BaseModel):
    """Per-rank entity classes emitted by ``classes``."""

    parts: int = Field(..., ge=1)
    ranks: list[ClassCounts]


class OrderingReport(BaseModel):
    """Sparsity metrics of one ordering, with optional loop timings."""

    bandwidth: int = Field(..., ge=0, description="Largest |i - j| over nonzeros")
    profile: int = Field(..., ge=0, description="Sum over rows of i minus the leftmost column")
    nnz: int = Field(..., ge=0, description="Number of nonzeros")
    timings: dict[str, float] = Field(default_factory=dict, description="Loop variant to seconds")


class TimingReport(BaseModel):
    """Benchmark timings emitted by ``bench``; kept apart from deterministic outputs."""

    mesh: str
    degree: int
    repeats: int
    timings: dict[str, float] = Field(..., description="Ordering and loop variant to seconds")
