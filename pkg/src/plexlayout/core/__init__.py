"""Core module for plexlayout."""

from plexlayout.core.config import Settings, get_settings, settings
from plexlayout.core.exceptions import (
    AmbiguityError,
    ArgumentError,
    ConfigurationError,
    IntegrityError,
    LayoutError,
    MeshFormatError,
    NonConsecutiveStratumError,
    OutputError,
    PlexLayoutError,
    PointRangeError,
    PreconditionError,
    TopologyError,
    UnsupportedElementError,
    UnsupportedVersionError,
    UsageError,
)

__all__ = [
    "Settings",
    "get_settings",
    "settings",
    "PlexLayoutError",
    "AmbiguityError",
    "ArgumentError",
    "ConfigurationError",
    "IntegrityError",
    "LayoutError",
    "MeshFormatError",
    "NonConsecutiveStratumError",
    "OutputError",
    "PointRangeError",
    "PreconditionError",
    "TopologyError",
    "UnsupportedElementError",
    "UnsupportedVersionError",
    "UsageError",
]
