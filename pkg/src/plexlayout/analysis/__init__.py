"""Sparsity analysis, portraits and assembly-loop benchmarks."""

from plexlayout.analysis.bench import BenchResult, bench_cell_loop, bench_facet_loop
from plexlayout.analysis.portrait import rank_bounds, read_portrait, write_portrait
from plexlayout.analysis.sparsity import SparsityPattern, build_sparsity, metrics

__all__ = [
    "BenchResult",
    "SparsityPattern",
    "bench_cell_loop",
    "bench_facet_loop",
    "build_sparsity",
    "metrics",
    "rank_bounds",
    "read_portrait",
    "write_portrait",
]
