"""Port rotation over fractal-placed CDMA ports.

A 2^w x 2^w port grid keeps the zero cells of the rule-3 pattern active and
puts the rest on standby. The standby role rotates hierarchically: at every
depth d the quadrant holding it steps through a fixed 4-cycle, and depth d
moves 4x faster than depth d - 1, so the pattern at depth d turns at
4^d times the base clock.
"""

from dataclasses import dataclass
from fractions import Fraction
import logging

import numpy as np

from config import Config
from utils.validators import ensure_valid, validate_non_negative, validate_range

logger = logging.getLogger(__name__)

# (x bit, y bit) labels; the standby role starts on (0, 0)
QUADRANT_CYCLE = ((0, 0), (0, 1), (1, 1), (1, 0))
CYCLE_INDEX = {quadrant: i for i, quadrant in enumerate(QUADRANT_CYCLE)}

# Published efficiency figures that disagree with 4^w - 3^w
KNOWN_ERRATA = {
    4: (172, 256),
}


@dataclass(frozen=True)
class RotationSchedule:
    """Hierarchical quadrant-role rotation over a 2^width x 2^width port grid."""

    width: int
    quadrant_cycle: tuple[tuple[int, int], ...]
    period: int
    base_speed_label: float

    @property
    def order(self) -> int:
        return 1 << self.width


@dataclass(frozen=True)
class PortAssignment:
    """Standby and active ports at one tick; cells are (x, y)."""

    tick: int
    standby: frozenset
    active: frozenset


@dataclass(frozen=True)
class EfficiencyReport:
    """Resource saving of a 2^width x 2^width port grid."""

    width: int
    total_ports: int
    active_ports: int
    standby_ports: int
    saving_fraction: Fraction
    note: str | None = None

    @property
    def saving_percent(self) -> float:
        return float(self.saving_fraction * 100)

    def to_dict(self) -> dict:
        report = {
            "width": self.width,
            "total": self.total_ports,
            "active": self.active_ports,
            "standby": self.standby_ports,
            "saving_percent": self.saving_percent,
        }
        if self.note:
            report["note"] = self.note
        return report


@dataclass(frozen=True, eq=False)
class FairnessReport:
    """Per-port standby counts accumulated over a simulation run."""

    width: int
    ticks_run: int
    per_cell_standby_counts: np.ndarray
    min_standby_fraction: float
    max_standby_fraction: float

    def to_dict(self) -> dict:
        return {
            "width": self.width,
            "ticks_run": self.ticks_run,
            "per_cell_standby_counts": self.per_cell_standby_counts.tolist(),
            "min_standby_fraction": self.min_standby_fraction,
            "max_standby_fraction": self.max_standby_fraction,
        }


def build_schedule(width: int, base_speed_label: float = 1.0) -> RotationSchedule:
    """
    Build the rotation schedule for a port grid.

    Args:
        width: Grid width w, 1 <= w <= Config.MAX_ROTATION_WIDTH
        base_speed_label: Symbolic base clock x, carried for reporting only

    Returns:
        RotationSchedule with period 4^width

    Raises:
        InvalidArgumentError: If width is out of range
    """
    ensure_valid(validate_range(width, 1, Config.MAX_ROTATION_WIDTH, "width"))
    width = int(width)
    return RotationSchedule(
        width=width,
        quadrant_cycle=QUADRANT_CYCLE,
        period=4 ** width,
        base_speed_label=float(base_speed_label),
    )


def depth_speed(schedule: RotationSchedule, depth: int) -> float:
    """Rotation speed of the pattern at a depth: 4^depth * x."""
    ensure_valid(validate_range(depth, 0, schedule.width - 1, "depth"))
    return (4 ** int(depth)) * schedule.base_speed_label


def phases(schedule: RotationSchedule, tick: int) -> tuple[int, ...]:
    """
    Per-depth phases at a tick: the base-4 digits of tick mod period, depth 0 first.

    Args:
        schedule: RotationSchedule
        tick: Tick >= 0

    Returns:
        Tuple of width digits in 0..3
    """
    ensure_valid(validate_non_negative(tick, "tick"))
    t = int(tick) % schedule.period
    w = schedule.width
    return tuple((t // 4 ** (w - 1 - d)) % 4 for d in range(w))


def _quadrant_bits(order: int, shift: int) -> tuple[np.ndarray, np.ndarray]:
    ys, xs = np.indices((order, order), dtype=np.int64)
    return (xs >> shift) & 1, (ys >> shift) & 1


def standby_mask(schedule: RotationSchedule, tick: int) -> np.ndarray:
    """
    Standby ports at a tick as a boolean [row y][column x] array.

    A port is on standby when, at some depth, its quadrant is the one the
    rotation currently points at.
    """
    w = schedule.width
    standby = np.zeros((schedule.order, schedule.order), dtype=bool)
    for depth, phase in enumerate(phases(schedule, tick)):
        qx, qy = schedule.quadrant_cycle[phase]
        x_bits, y_bits = _quadrant_bits(schedule.order, w - 1 - depth)
        standby |= (x_bits == qx) & (y_bits == qy)
    return standby


def standby_set(schedule: RotationSchedule, tick: int) -> PortAssignment:
    """
    Split the ports into standby and active sets at a tick.

    Args:
        schedule: RotationSchedule
        tick: Tick >= 0, taken modulo the period

    Returns:
        PortAssignment whose cells are (x, y) tuples
    """
    mask = standby_mask(schedule, tick)
    ys, xs = np.nonzero(mask)
    standby = frozenset(zip(xs.tolist(), ys.tolist()))
    ys, xs = np.nonzero(~mask)
    active = frozenset(zip(xs.tolist(), ys.tolist()))
    return PortAssignment(tick=int(tick), standby=standby, active=active)


def efficiency(width: int) -> EfficiencyReport:
    """
    Resource saving of a 2^width x 2^width grid with 3^width active ports.

    Args:
        width: Grid width, 1 <= width <= Config.MAX_EFFICIENCY_WIDTH

    Returns:
        EfficiencyReport; saving_fraction is exact
    """
    ensure_valid(validate_range(width, 1, Config.MAX_EFFICIENCY_WIDTH, "width"))
    width = int(width)
    total = 4 ** width
    active = 3 ** width
    standby = total - active

    note = None
    if width in KNOWN_ERRATA:
        printed, base = KNOWN_ERRATA[width]
        note = (
            f"published figure {printed}/{base} is a misprint; "
            f"4^{width} - 3^{width} = {standby}"
        )
        logger.warning(f"Width {width}: {note}")

    return EfficiencyReport(
        width=width,
        total_ports=total,
        active_ports=active,
        standby_ports=standby,
        saving_fraction=Fraction(standby, total),
        note=note,
    )


def _replay_counts(schedule: RotationSchedule, ticks: int) -> np.ndarray:
    counts = np.zeros((schedule.order, schedule.order), dtype=np.int64)
    for tick in range(ticks):
        counts += standby_mask(schedule, tick)
    return counts


def _digit_counts(schedule: RotationSchedule, ticks: int) -> np.ndarray:
    # A port idles at tick t unless some phase digit of t equals its quadrant's
    # cycle index at that depth. Count the idle ticks digit by digit.
    w = schedule.width
    full_periods, remainder = divmod(ticks, schedule.period)
    avoided = np.full((schedule.order, schedule.order), full_periods * 3 ** w, dtype=np.int64)

    still_tight = np.ones((schedule.order, schedule.order), dtype=bool)
    remainder_digits = phases(schedule, remainder)
    for depth, digit in enumerate(remainder_digits):
        x_bits, y_bits = _quadrant_bits(schedule.order, w - 1 - depth)
        cycle_index = np.zeros_like(x_bits)
        for (qx, qy), index in CYCLE_INDEX.items():
            cycle_index[(x_bits == qx) & (y_bits == qy)] = index

        smaller = digit - (cycle_index < digit)
        avoided += np.where(still_tight, smaller * 3 ** (w - 1 - depth), 0)
        still_tight &= cycle_index != digit

    return ticks - avoided


def simulate(schedule: RotationSchedule, ticks: int) -> FairnessReport:
    """
    Accumulate per-port standby counts over ticks 0 .. ticks-1.

    Small runs replay standby_set tick by tick; runs above
    Config.BRUTE_FORCE_BUDGET port-ticks count standby ticks by base-4 digit
    counting, which yields the same counts.

    Args:
        schedule: RotationSchedule
        ticks: Number of ticks >= 1

    Returns:
        FairnessReport
    """
    ensure_valid(validate_range(ticks, 1, 1 << 62, "ticks"))
    ticks = int(ticks)
    cells = schedule.order ** 2

    if cells * ticks <= Config.BRUTE_FORCE_BUDGET:
        logger.debug(f"Replaying {ticks} ticks over {cells} ports")
        counts = _replay_counts(schedule, ticks)
    else:
        logger.debug(f"Counting {ticks} ticks over {cells} ports by phase digits")
        counts = _digit_counts(schedule, ticks)

    counts.flags.writeable = False
    return FairnessReport(
        width=schedule.width,
        ticks_run=ticks,
        per_cell_standby_counts=counts,
        min_standby_fraction=float(counts.min()) / ticks,
        max_standby_fraction=float(counts.max()) / ticks,
    )
