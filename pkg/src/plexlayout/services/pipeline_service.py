"""Pipeline service composing mesh, partition, ordering, layout and analysis."""

import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from plexlayout.analysis import (
    SparsityPattern,
    bench_cell_loop,
    bench_facet_loop,
    build_sparsity,
    metrics,
    rank_bounds,
    write_portrait,
)
from plexlayout.layout import (
    CellMap,
    DofLayout,
    Section,
    cell_node_map,
    create_section,
    facet_maps,
    global_numbering,
    lagrange_dof_layout,
    owned_dof_counts,
)
from plexlayout.mesh import MeshGeometry, read_gmsh, reference_tet, unit_square_mesh
from plexlayout.middleware import log_stage
from plexlayout.ordering import Permutation, cell_ordering, compact_class_permutation
from plexlayout.parallel import (
    LocalMesh,
    PartitionMap,
    PointSF,
    class_counts,
    distribute,
    mark_entity_classes,
    partition,
)
from plexlayout.repositories import ArtifactRepository
from plexlayout.schemas import (
    ClassCounts,
    ClassReport,
    MeshInfo,
    OrderingName,
    OrderingReport,
    RunConfig,
    StratumInfo,
    TimingReport,
)
from plexlayout.services.base import BaseService
from plexlayout.topology import euler_characteristic
from plexlayout.utils import parse_generator_spec

logger = logging.getLogger(__name__)

ENTITY_NAMES = {0: "vertices", 1: "edges"}


def entity_name(depth: int, cell_dimension: int) -> str:
    if depth == cell_dimension:
        return "cells"
    if depth == cell_dimension - 1:
        return "facets"
    return ENTITY_NAMES[depth]


@dataclass(frozen=True, eq=False)
class RankLayout:
    """Everything one rank contributes to assembly."""

    local: LocalMesh
    sf: PointSF
    permutation: Permutation
    section: Section
    cellmap: CellMap

    def owned_cellmap(self) -> CellMap:
        """Rows of owned cells only, so that each cell is assembled once globally."""
        mask = self.local.owned[self.cellmap.cells]
        return CellMap(values=self.cellmap.values[mask], cells=self.cellmap.cells[mask])


class PipelineService(BaseService):
    """Service running the stages behind each command.

    Stages are computed lazily and cached, so a command pays only for the
    stages it needs.
    """

    def __init__(self, config: RunConfig, repository: ArtifactRepository):
        """Initialize the PipelineService.

        Args:
            config: Validated run configuration.
            repository: Destination of all artifacts.
        """
        super().__init__(config, repository)

    # Stages

    @cached_property
    def mesh(self) -> MeshGeometry:
        with log_stage("mesh", source=self.config.source):
            if self.config.mesh is not None:
                return read_gmsh(self.config.mesh)
            spec = parse_generator_spec(self.config.gen or "")
            if spec.kind == "square":
                return unit_square_mesh(*spec.shape)
            return reference_tet()

    @cached_property
    def dof_layout(self) -> DofLayout:
        with log_stage("layout", degree=self.config.degree):
            return lagrange_dof_layout(self.mesh.cell_dimension, self.config.degree)

    @cached_property
    def partition_map(self) -> PartitionMap:
        with log_stage("partition", parts=self.config.parts):
            return partition(self.mesh, self.config.parts)

    @cached_property
    def ranks(self) -> list[tuple[LocalMesh, PointSF]]:
        part = self.partition_map
        with log_stage("classes", parts=self.config.parts, overlap=self.config.overlap):
            ranks = distribute(self.mesh, part, overlap=self.config.overlap)
            for local, sf in ranks:
                mark_entity_classes(local, sf)
            return ranks

    def _permutation(self, local: LocalMesh, order: OrderingName) -> Permutation:
        return compact_class_permutation(local, cell_ordering(order.value, local.plex, self.config.seed))

    def _layout(self, local: LocalMesh, sf: PointSF, perm: Permutation) -> RankLayout:
        section = create_section(local, perm, self.dof_layout)
        return RankLayout(local, sf, perm, section, cell_node_map(local, section, self.dof_layout))

    def permutations_for(self, order: OrderingName) -> list[Permutation]:
        ranks = self.ranks
        with log_stage("reorder", order=order.value):
            return [self._permutation(local, order) for local, _ in ranks]

    def layouts_for(self, order: OrderingName) -> list[RankLayout]:
        permutations = self.permutations_for(order)
        with log_stage("layout", order=order.value, degree=self.config.degree):
            return [self._layout(local, sf, perm) for (local, sf), perm in zip(self.ranks, permutations, strict=True)]

    def rank_layout(self, order: OrderingName, rank: int = 0) -> RankLayout:
        """Permutation, section and maps of a single rank."""
        local, sf = self.ranks[rank]
        with log_stage("reorder", order=order.value, rank=rank):
            perm = self._permutation(local, order)
        with log_stage("layout", order=order.value, degree=self.config.degree, rank=rank):
            return self._layout(local, sf, perm)

    def sparsity_for(self, layouts: list[RankLayout]) -> tuple[SparsityPattern, list[int]]:
        with log_stage("sparsity", ranks=len(layouts)):
            numbering = global_numbering([(r.local, r.sf, r.section) for r in layouts])
            counts = owned_dof_counts([(r.local, r.sf, r.section) for r in layouts])
            pattern = build_sparsity([r.owned_cellmap() for r in layouts], numbering, n=sum(counts))
            return pattern, counts

    # Reports

    def mesh_info(self) -> MeshInfo:
        mesh = self.mesh
        plex = mesh.plex
        strata = [
            StratumInfo(
                depth=s.depth,
                entity=entity_name(s.depth, mesh.cell_dimension),
                start=s.start,
                size=s.end - s.start,
            )
            for s in plex.strata
        ]
        labels = {
            name: {value: plex.get_label(name).stratum_size(value) for value in plex.get_label(name).values()}
            for name in plex.label_names
        }
        return MeshInfo(
            source=self.config.source,
            cell_dimension=mesh.cell_dimension,
            chart_size=plex.chart_size,
            strata=strata,
            euler_characteristic=euler_characteristic(plex),
            labels=labels,
        )

    def class_report(self) -> ClassReport:
        ranks = [
            ClassCounts.model_validate({"rank": local.rank, **class_counts(local)}) for local, _ in self.ranks
        ]
        return ClassReport(parts=self.config.parts, ranks=ranks)

    def ordering_report(self) -> tuple[OrderingReport, SparsityPattern, list[int]]:
        pattern, counts = self.sparsity_for(self.layouts_for(self.config.order))
        return metrics(pattern), pattern, counts

    def timing_report(self) -> TimingReport:
        """Time the cell and interior-facet loops of rank 0 for native, RCM and the configured ordering."""
        orders = [OrderingName.NATIVE, OrderingName.RCM]
        if self.config.order not in orders:
            orders.append(self.config.order)
        timings: dict[str, float] = {}
        for order in orders:
            layout = self.rank_layout(order)
            with log_stage("bench", order=order.value, repeats=self.config.repeats):
                data = np.ones(layout.section.total_size)
                cell = bench_cell_loop(layout.cellmap, data, self.config.repeats)
                timings[f"{order.value}.cell"] = cell.seconds
                facets = facet_maps(layout.local, layout.section)
                if facets.interior_facets.size:
                    facet = bench_facet_loop(facets, layout.cellmap, data, self.config.repeats)
                    timings[f"{order.value}.facet"] = facet.seconds
        return TimingReport(
            mesh=self.config.source, degree=self.config.degree, repeats=self.config.repeats, timings=timings
        )

    # Commands

    def run_info(self) -> MeshInfo:
        info = self.mesh_info()
        self.repository.write_json("info.json", info)
        return info

    def run_partition(self) -> PartitionMap:
        part = self.partition_map
        self.repository.write_text("partition.csv", part.to_csv())
        return part

    def run_classes(self) -> ClassReport:
        report = self.class_report()
        self.repository.write_json("classes.json", report)
        return report

    def run_reorder(self) -> list[Permutation]:
        permutations = self.permutations_for(self.config.order)
        single = len(permutations) == 1
        for rank, perm in enumerate(permutations):
            self.repository.write_text(f"permutation_rank{rank}.csv", perm.to_csv(), document=single)
        return permutations

    def run_sparsity(self) -> OrderingReport:
        report, pattern, counts = self.ordering_report()
        self.repository.write_binary("portrait.pbm", lambda sink: write_portrait(pattern, sink))
        if len(counts) > 1:
            bounds = rank_bounds(counts)
            self.repository.write_binary(
                "portrait_ranks.pgm", lambda sink: write_portrait(pattern, sink, rank_bounds=bounds)
            )
        self.repository.write_json("metrics.json", report)
        return report

    def run_bench(self) -> TimingReport:
        report = self.timing_report()
        self.repository.write_json("timings.json", report)
        return report
