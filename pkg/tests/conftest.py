"""Pytest configuration and fixtures for plexlayout tests."""

import json
import logging
from collections.abc import Callable, Iterator
from pathlib import Path
from typing import NamedTuple

import pytest

from plexlayout.cli import run
from plexlayout.mesh import MeshGeometry, reference_tet, unit_square_mesh
from plexlayout.parallel import LocalMesh, PointSF, partition
from plexlayout.topology import Plex, build_from_cones

from tests.helpers import distributed, single_rank

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def tet() -> MeshGeometry:
    """Single tetrahedron with the canonical 15-point numbering.

    Returns:
        MeshGeometry: cell 0, vertices 1-4, facets 5-8, edges 9-14.
    """
    return reference_tet()


@pytest.fixture
def square() -> Callable[[int, int], MeshGeometry]:
    """Factory for unit square meshes.

    Returns:
        Callable: ``square(nx, ny)`` building a fresh mesh.
    """
    return unit_square_mesh


@pytest.fixture
def interval_plex() -> Plex:
    """Two-cell interval: cells 0, 1 and vertices 2, 3, 4."""
    return build_from_cones(5, [[2, 3], [3, 4], [], [], []])


@pytest.fixture
def fixture_path() -> Callable[[str], Path]:
    """Path to a file under tests/fixtures.

    Returns:
        Callable: maps a file name to its fixture path.
    """
    return lambda name: FIXTURES / name


@pytest.fixture
def golden_path() -> Callable[[str], Path]:
    """Path to a checked-in golden file."""
    return lambda name: GOLDEN / name


@pytest.fixture
def halves_4x4() -> list[tuple[LocalMesh, PointSF]]:
    """The partitioner's 2-way split of unit_square_mesh(4, 4): lower and upper rows, overlap 1."""
    mesh = unit_square_mesh(4, 4)
    return distributed(mesh, partition(mesh, 2))


@pytest.fixture
def sequential() -> Callable[[MeshGeometry], tuple[LocalMesh, PointSF]]:
    """Single-rank distribution with marked entity classes."""

    def build(mesh: MeshGeometry) -> tuple[LocalMesh, PointSF]:
        return distributed(mesh, single_rank(mesh))[0]

    return build


class CliResult(NamedTuple):
    exit_code: int
    stdout: str
    stderr: str

    def error(self) -> dict:
        """The JSON error document on the last stderr line."""
        return json.loads(self.stderr.strip().splitlines()[-1])


@pytest.fixture
def cli(capsys) -> Iterator[Callable[..., CliResult]]:
    """Run the command line in-process.

    Returns:
        Callable: ``cli(*argv)`` returning exit code and captured output.
    """

    def invoke(*argv: str) -> CliResult:
        code = run(list(argv))
        captured = capsys.readouterr()
        return CliResult(code, captured.out, captured.err)

    root, package = logging.getLogger(), logging.getLogger("plexlayout")
    handlers, levels = root.handlers[:], (root.level, package.level)
    yield invoke
    # setup_logging binds a handler to the captured stderr
    root.handlers[:] = handlers
    root.setLevel(levels[0])
    package.setLevel(levels[1])
