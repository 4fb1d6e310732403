"""Utility functions."""

from plexlayout.utils.validators import (
    GENERATOR_PATTERN,
    GeneratorSpec,
    parse_generator_spec,
    validate_generator_spec,
)

__all__ = ["GENERATOR_PATTERN", "GeneratorSpec", "parse_generator_spec", "validate_generator_spec"]
