"""Validation utility functions."""

import re
from typing import NamedTuple

from plexlayout.core.exceptions import UsageError

GENERATOR_PATTERN = r"^(square:[1-9][0-9]*x[1-9][0-9]*|tet:reference)$"


class GeneratorSpec(NamedTuple):
    kind: str
    shape: tuple[int, ...]


def validate_generator_spec(spec: str) -> bool:
    """
    Validate a generator spec such as ``square:4x4`` or ``tet:reference``.

    Args:
        spec: Generator spec to validate

    Returns:
        True if valid, False otherwise
    """
    return bool(re.match(GENERATOR_PATTERN, spec))


def parse_generator_spec(spec: str) -> GeneratorSpec:
    """Split a generator spec into its kind and integer shape."""
    if not validate_generator_spec(spec):
        raise UsageError(
            f"Invalid generator spec '{spec}'; expected square:NxM or tet:reference",
            details={"gen": spec},
        )
    kind, _, arguments = spec.partition(":")
    if kind == "square":
        nx, ny = arguments.split("x")
        return GeneratorSpec(kind, (int(nx), int(ny)))
    return GeneratorSpec(kind, ())
