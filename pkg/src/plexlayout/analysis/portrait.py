"""Matrix portraits as binary PBM and greyscale PGM images."""

import logging
import math
import re
from collections.abc import Sequence
from typing import BinaryIO

import numpy as np

from plexlayout.analysis.sparsity import SparsityPattern
from plexlayout.core.config import settings
from plexlayout.core.exceptions import ArgumentError, OutputError

logger = logging.getLogger(__name__)

WHITE, GREY, BLACK = 255, 128, 0

_P4_HEADER = re.compile(rb"^P4\s+(\d+)\s+(\d+)\s")
_P5_HEADER = re.compile(rb"^P5\s+(\d+)\s+(\d+)\s+(\d+)\s")


def rank_bounds(owned_counts: Sequence[int]) -> list[int]:
    """Global DoF positions where each rank after the first starts."""
    return np.cumsum(owned_counts)[:-1].astype(int).tolist()


def _pixels(pattern: SparsityPattern, max_pixels: int) -> tuple[np.ndarray, int]:
    """Boolean image of the nonzeros, max-pooled into blocks when ``n`` is too large."""
    block = max(1, math.ceil(pattern.n / max_pixels))
    side = math.ceil(pattern.n / block)
    image = np.zeros((side, side), dtype=bool)
    image[pattern.row_ids() // block, pattern.col_indices // block] = True
    return image, block


def write_portrait(
    pattern: SparsityPattern,
    sink: BinaryIO,
    rank_bounds: Sequence[int] | None = None,
    max_pixels: int | None = None,
) -> None:
    """Write the nonzero structure of ``pattern`` to ``sink``.

    Without ``rank_bounds`` the image is a P4 bitmap with black nonzeros.
    With them it is a P5 greymap: nonzeros black, rank boundary rows and
    columns grey, everything else white.

    Raises:
        OutputError: the sink cannot be written.
    """
    image, block = _pixels(pattern, max_pixels or settings.PORTRAIT_MAX_PIXELS)
    side = image.shape[0]
    if rank_bounds is None:
        payload = b"P4\n%d %d\n" % (side, side) + np.packbits(image, axis=1).tobytes()
    else:
        grey = np.full((side, side), WHITE, dtype=np.uint8)
        lines = [b // block for b in rank_bounds if 0 < b < pattern.n]
        grey[lines, :] = GREY
        grey[:, lines] = GREY
        grey[image] = BLACK
        payload = b"P5\n%d %d\n255\n" % (side, side) + grey.tobytes()
    try:
        sink.write(payload)
    except OSError as exc:
        raise OutputError(f"Failed to write portrait: {exc}") from exc
    logger.debug("Wrote portrait", extra={"side": side, "block": block, "ranks": rank_bounds is not None})


def read_portrait(source: BinaryIO | bytes) -> np.ndarray:
    """Parse a P4 or P5 portrait into a boolean image of black pixels."""
    raw = source if isinstance(source, bytes) else source.read()
    if match := _P4_HEADER.match(raw):
        width, height = int(match.group(1)), int(match.group(2))
        body = raw[match.end() :]
        row_bytes = (width + 7) // 8
        if len(body) != row_bytes * height:
            raise ArgumentError("Truncated P4 raster", details={"expected": row_bytes * height, "got": len(body)})
        bits = np.unpackbits(np.frombuffer(body, dtype=np.uint8).reshape(height, row_bytes), axis=1)
        return bits[:, :width].astype(bool)
    if match := _P5_HEADER.match(raw):
        width, height = int(match.group(1)), int(match.group(2))
        body = raw[match.end() :]
        if len(body) != width * height:
            raise ArgumentError("Truncated P5 raster", details={"expected": width * height, "got": len(body)})
        return np.frombuffer(body, dtype=np.uint8).reshape(height, width) == BLACK
    raise ArgumentError("Not a P4 or P5 portrait")
