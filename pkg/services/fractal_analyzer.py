"""Similarity dimension and box-counting dimension estimates of zero masks."""

from dataclasses import dataclass, field
import logging
import math

import numpy as np

from services.pattern_generator import ZeroMask
from utils.errors import DegenerateInputError, InvalidArgumentError
from utils.validators import ensure_valid, validate_power_of_two, validate_range

logger = logging.getLogger(__name__)

MIN_ESTIMATE_ORDER = 4


@dataclass(frozen=True)
class DimensionEstimate:
    """Least-squares slope of log(box count) against log(order / box size)."""

    slope: float
    points: list[tuple[int, int]] = field(default_factory=list)
    residual: float = 0.0

    def to_dict(self) -> dict:
        return {
            "slope": self.slope,
            "points": [[size, count] for size, count in self.points],
            "residual": self.residual,
        }


def similarity_dimension(pieces: int, scale: float) -> float:
    """
    Dimension of a set made of `pieces` copies of itself scaled by `scale`.

    Args:
        pieces: Number of self-similar pieces, >= 1
        scale: Linear scaling factor, 0 < scale < 1

    Returns:
        log(pieces) / log(1 / scale)

    Raises:
        InvalidArgumentError: If pieces < 1 or scale is outside (0, 1)
    """
    ensure_valid(validate_range(pieces, 1, 1 << 62, "pieces"))
    if not 0 < scale < 1:
        raise InvalidArgumentError(f"scale must lie in (0, 1), got {scale}")

    return math.log(pieces) / math.log(1 / scale)


def box_count(mask: ZeroMask, box_size: int) -> int:
    """
    Count box_size x box_size blocks holding at least one active cell.

    Args:
        mask: ZeroMask to cover
        box_size: Power of two dividing the mask order

    Returns:
        Number of occupied blocks

    Raises:
        InvalidArgumentError: If box_size is not a power of two dividing the order
    """
    ensure_valid(validate_power_of_two(box_size, "box size"))
    if mask.order % box_size:
        raise InvalidArgumentError(
            f"box size {box_size} does not divide mask order {mask.order}"
        )

    blocks = mask.order // box_size
    occupied = mask.bits.reshape(blocks, box_size, blocks, box_size).any(axis=(1, 3))
    return int(np.count_nonzero(occupied))


def estimate_dimension(mask: ZeroMask) -> DimensionEstimate:
    """
    Box-counting dimension of a mask over dyadic box sizes 1 .. order/2.

    Args:
        mask: ZeroMask with a power-of-two order >= 4

    Returns:
        DimensionEstimate with the fitted slope, the (size, count) points and
        the largest deviation of a log-point from the fitted line

    Raises:
        InvalidArgumentError: If the order is not a power of two or below 4
        DegenerateInputError: If the mask has no active cell
    """
    ensure_valid(validate_power_of_two(mask.order, "mask order"))
    if mask.order < MIN_ESTIMATE_ORDER:
        raise InvalidArgumentError(
            f"mask order must be at least {MIN_ESTIMATE_ORDER}, got {mask.order}"
        )
    if mask.is_empty:
        raise DegenerateInputError("mask has no active cells; dimension is undefined")

    sizes = []
    size = 1
    while size < mask.order:
        sizes.append(size)
        size *= 2

    points = [(s, box_count(mask, s)) for s in sizes]

    log_scale = np.log([mask.order / s for s, _ in points])
    log_count = np.log([c for _, c in points])
    slope, intercept = np.polyfit(log_scale, log_count, 1)
    residual = float(np.max(np.abs(log_count - (slope * log_scale + intercept))))

    logger.debug(f"Box-count fit over {len(points)} scales: slope={slope:.9f}, residual={residual:.3e}")
    return DimensionEstimate(slope=float(slope), points=points, residual=residual)
