"""Application entry point for running the plexlayout command line from a checkout."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent / "src"))

from plexlayout.cli import run  # noqa: E402


def main() -> None:
    """Run the command line with the process arguments."""
    sys.exit(run())


if __name__ == "__main__":
    main()
