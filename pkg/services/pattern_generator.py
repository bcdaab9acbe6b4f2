"""Level-indexed LSCVT grids and their zero-cell masks."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional
import logging

import numpy as np

from config import Config
from services.boolean_rules import (
    BooleanRule,
    default_rule,
    level_band,
    level_width,
    lscvt_array,
)
from utils.errors import ResourceLimitError
from utils.validators import ensure_valid, validate_non_negative, validate_range

logger = logging.getLogger(__name__)


class PatternKind(str, Enum):
    """How a grid of a given order relates to its level's natural order."""

    FRACTAL = 'fractal'
    TILED = 'tiled'
    PARTIAL = 'partial'


@dataclass(frozen=True, eq=False)
class PatternGrid:
    """LSCVT values over an order x order square; cells[row y][column x]."""

    level: int
    width: int
    order: int
    cells: np.ndarray
    rule_number: int

    @property
    def zero_count(self) -> int:
        return int(np.count_nonzero(self.cells == 0))

    def value_at(self, x: int, y: int) -> int:
        """Return the cell at column x, row y."""
        return int(self.cells[y, x])


@dataclass(frozen=True, eq=False)
class ZeroMask:
    """Boolean view of a grid: True where the cell value is 0 (the active cells)."""

    order: int
    bits: np.ndarray

    @property
    def true_count(self) -> int:
        return int(np.count_nonzero(self.bits))

    @property
    def is_empty(self) -> bool:
        return self.true_count == 0


@dataclass(frozen=True)
class LevelBand:
    """One row of the level band table."""

    low: int
    high: int
    width: int
    natural_order: int
    zero_cells: int
    kind: PatternKind

    def to_dict(self) -> dict:
        return {
            "low": self.low,
            "high": self.high,
            "width": self.width,
            "natural_order": self.natural_order,
            "zero_cells": self.zero_cells,
            "kind": self.kind.value,
        }


def _freeze(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


def natural_order(level: int) -> int:
    """
    Side length at which a level's pattern appears once, untiled.

    Args:
        level: Level >= 0

    Returns:
        2 ** level_width(level)
    """
    return 1 << level_width(level)


def classify_order(level: int, order: int) -> PatternKind:
    """
    Classify a grid order against the level's natural order.

    Args:
        level: Level >= 0
        order: Grid side length >= 1

    Returns:
        FRACTAL at the natural order, TILED for larger multiples of it,
        PARTIAL otherwise
    """
    ensure_valid(validate_range(order, 1, 1 << 62, "order"))
    natural = natural_order(level)
    if order == natural:
        return PatternKind.FRACTAL
    if order > natural and order % natural == 0:
        return PatternKind.TILED
    return PatternKind.PARTIAL


def generate_grid(level: int, order: int, rule: Optional[BooleanRule] = None) -> PatternGrid:
    """
    Fill an order x order grid with LSCVT(x, y, level).

    Args:
        level: Level >= 0 (third LSCVT input)
        order: Grid side length, 1 <= order <= Config.MAX_GRID_ORDER
        rule: Boolean rule; default_rule() when omitted

    Returns:
        Immutable PatternGrid with cells[row y][column x]

    Raises:
        InvalidArgumentError: If level or order is malformed
        ResourceLimitError: If order exceeds the configured cap
    """
    ensure_valid(validate_non_negative(level, "level"))
    ensure_valid(validate_range(order, 1, 1 << 62, "order"))
    if order > Config.MAX_GRID_ORDER:
        raise ResourceLimitError(
            f"Grid order {order} exceeds the cap of {Config.MAX_GRID_ORDER}"
        )

    level, order = int(level), int(order)
    rule = rule or default_rule()
    width = level_width(level)
    ys, xs = np.indices((order, order), dtype=np.int64)
    cells = lscvt_array(xs, ys, level, rule)

    logger.debug(
        f"Generated grid: level={level}, width={width}, order={order}, rule={rule.rule_number}"
    )
    return PatternGrid(
        level=level,
        width=width,
        order=order,
        cells=_freeze(cells),
        rule_number=rule.rule_number,
    )


def zero_mask(grid: PatternGrid) -> ZeroMask:
    """Mark the zero cells of a grid."""
    return ZeroMask(order=grid.order, bits=_freeze(grid.cells == 0))


def natural_mask(width: int, rule: Optional[BooleanRule] = None) -> ZeroMask:
    """
    Zero mask of the natural-order grid for a width.

    Args:
        width: Bit width >= 1
        rule: Boolean rule; default_rule() when omitted

    Returns:
        ZeroMask of order 2 ** width, built at the lowest level of the width's band
    """
    low, _ = level_band(width)
    return zero_mask(generate_grid(low, 1 << width, rule))


def level_bands(max_level: int, rule: Optional[BooleanRule] = None) -> list[LevelBand]:
    """
    Tabulate the level bands covering levels 0..max_level.

    Zero-cell counts are measured on the natural-order grid of each band's
    lowest level.

    Args:
        max_level: Highest level to cover, 0 <= max_level <= Config.MAX_SURVEY_LEVEL
        rule: Boolean rule; default_rule() when omitted

    Returns:
        One LevelBand per width, in increasing order
    """
    ensure_valid(validate_range(max_level, 0, Config.MAX_SURVEY_LEVEL, "max level"))

    bands = []
    for width in range(1, level_width(max_level) + 1):
        low, high = level_band(width)
        mask = natural_mask(width, rule)
        bands.append(LevelBand(
            low=low,
            high=min(high, int(max_level)),
            width=width,
            natural_order=mask.order,
            zero_cells=mask.true_count,
            kind=classify_order(low, mask.order),
        ))
        logger.debug(f"Band {low}..{high}: order {mask.order}, {mask.true_count} zero cells")

    return bands
