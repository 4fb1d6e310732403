"""Exception hierarchy for plexlayout."""

from typing import Any

DATA_ERROR_EXIT_CODE = 1
USAGE_ERROR_EXIT_CODE = 2


class PlexLayoutError(Exception):
    """Base exception for all plexlayout errors."""

    def __init__(
        self,
        message: str = "An error occurred",
        exit_code: int = DATA_ERROR_EXIT_CODE,
        details: dict[str, Any] | None = None,
    ) -> None:
        self.message = message
        self.exit_code = exit_code
        self.details = details or {}
        self.stage: str | None = None
        super().__init__(self.message)


class ConfigurationError(PlexLayoutError):
    """Raised when there is a configuration error."""

    def __init__(self, message: str = "Configuration error", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, details=details)


class UsageError(PlexLayoutError):
    """Raised when the command line cannot be interpreted."""

    def __init__(self, message: str = "Usage error", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, exit_code=USAGE_ERROR_EXIT_CODE, details=details)


class ArgumentError(PlexLayoutError):
    """Raised when an operation receives an invalid argument."""

    def __init__(self, message: str = "Invalid argument", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, details=details)


class PointRangeError(PlexLayoutError):
    """Raised when a point or dimension lies outside the valid range."""

    def __init__(
        self,
        message: str = "Point out of range",
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message=message, details=details)


class TopologyError(PlexLayoutError):
    """Raised when the mesh topology violates a structural requirement."""

    def __init__(self, message: str = "Topology error", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, details=details)


class LayoutError(PlexLayoutError):
    """Raised when point numbering or data layout is inconsistent."""

    def __init__(self, message: str = "Layout error", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, details=details)


class NonConsecutiveStratumError(LayoutError):
    """Raised when the points of one depth stratum are not numbered consecutively."""

    def __init__(self, point: int, depth: int, details: dict[str, Any] | None = None) -> None:
        self.point = point
        self.depth = depth
        message = f"Stratum of depth {depth} is not consecutive: point {point} interrupts it"
        super().__init__(message=message, details={"point": point, "depth": depth, **(details or {})})


class MeshFormatError(PlexLayoutError):
    """Raised when a mesh file cannot be parsed."""

    def __init__(self, message: str = "Mesh format error", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, details=details)


class UnsupportedVersionError(MeshFormatError):
    """Raised when a mesh file declares an unsupported format version."""

    def __init__(self, version: str, details: dict[str, Any] | None = None) -> None:
        message = f"Unsupported mesh format version '{version}'"
        super().__init__(message=message, details={"version": version, **(details or {})})


class UnsupportedElementError(MeshFormatError):
    """Raised when a mesh file contains an element type that cannot be read."""

    def __init__(self, type_code: int, details: dict[str, Any] | None = None) -> None:
        self.type_code = type_code
        message = f"Unsupported element type {type_code}"
        super().__init__(message=message, details={"type_code": type_code, **(details or {})})


class IntegrityError(PlexLayoutError):
    """Raised when related data structures disagree with each other."""

    def __init__(self, message: str = "Integrity error", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, details=details)


class PreconditionError(PlexLayoutError):
    """Raised when an operation is invoked before its inputs are prepared."""

    def __init__(self, message: str = "Precondition failed", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, details=details)


class AmbiguityError(PlexLayoutError):
    """Raised when a reduction has more than one candidate value for a slot."""

    def __init__(self, message: str = "Ambiguous reduction", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, details=details)


class OutputError(PlexLayoutError):
    """Raised when writing an artifact fails."""

    def __init__(self, message: str = "Output error", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, details=details)
