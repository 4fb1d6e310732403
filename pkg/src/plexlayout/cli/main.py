"""Command-line front door: ``plexlayout <command> [options]``."""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence

from pydantic import ValidationError

from plexlayout import __version__
from plexlayout.cli.error_handler import (
    general_error_handler,
    plexlayout_error_handler,
    validation_error_handler,
)
from plexlayout.core.exceptions import PlexLayoutError
from plexlayout.middleware import setup_logging
from plexlayout.repositories import ArtifactRepository
from plexlayout.schemas import OrderingName, RunConfig
from plexlayout.services import PipelineService

logger = logging.getLogger(__name__)

COMMANDS: dict[str, tuple[str, Callable[[PipelineService], object]]] = {
    "info": ("report strata sizes and the Euler characteristic", PipelineService.run_info),
    "partition": ("write the cell owner map as CSV", PipelineService.run_partition),
    "classes": ("report per-rank core/non-core/halo counts", PipelineService.run_classes),
    "reorder": ("write the compact class permutation of every rank", PipelineService.run_reorder),
    "sparsity": ("write the matrix portrait and bandwidth metrics", PipelineService.run_sparsity),
    "bench": ("time cell and interior-facet assembly loops", PipelineService.run_bench),
}

CONFIG_FIELDS = ("gen", "mesh", "parts", "overlap", "order", "seed", "degree", "out", "repeats")


def build_parser() -> argparse.ArgumentParser:
    options = argparse.ArgumentParser(add_help=False)
    source = options.add_argument_group("mesh source")
    source.add_argument("--gen", help="generator spec: square:NxM or tet:reference")
    source.add_argument("--mesh", help="Gmsh MSH 2.2 ASCII file")
    options.add_argument("--parts", type=int, help="number of simulated ranks")
    options.add_argument("--overlap", type=int, help="cell overlap between ranks (0 or 1)")
    options.add_argument("--order", choices=[o.value for o in OrderingName], help="cell ordering")
    options.add_argument("--seed", type=int, help="seed of the shuffled ordering")
    options.add_argument("--degree", type=int, help="Lagrange degree (1-3)")
    options.add_argument("--out", help="output directory; single documents go to stdout without it")
    options.add_argument("--repeats", type=int, help="timed repetitions per benchmark loop")
    options.add_argument("--log-level", help="logging level, overrides PLEXLAYOUT_LOG_LEVEL")

    parser = argparse.ArgumentParser(
        prog="plexlayout",
        description="Unstructured mesh topology, partitioning, reordering and data layout analysis.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, (help_text, _) in COMMANDS.items():
        commands.add_parser(name, parents=[options], help=help_text, description=help_text)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    setup_logging(args.log_level)
    try:
        config = RunConfig(**{f: getattr(args, f) for f in CONFIG_FIELDS if getattr(args, f) is not None})
    except ValidationError as exc:
        return validation_error_handler(exc)

    service = PipelineService(config, ArtifactRepository(config.out, stream=sys.stdout))
    _, command = COMMANDS[args.command]
    try:
        command(service)
    except PlexLayoutError as exc:
        return plexlayout_error_handler(exc)
    except Exception as exc:  # noqa: BLE001
        return general_error_handler(exc)
    logger.info(f"{args.command} completed", extra={"command": args.command})
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
