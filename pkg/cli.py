"""LSCVT Fractal Toolkit - command-line front end

Generates level-indexed LSCVT patterns, measures their fractal dimension,
reports the port-saving figures of fractal-placed CDMA ports, simulates the
standby rotation and demonstrates the Walsh-coded channel.

Usage:
    python cli.py pattern --level 3 --format pbm
    python cli.py dimension --level 255
    python cli.py efficiency --max-width 5
    python cli.py simulate --width 2
    python cli.py cdma --k 2 --data 3,-1,0,2
"""

from functools import wraps
from typing import Optional
import argparse
import logging
import sys

from config import Config
from services.boolean_rules import explain_lscvt, rule_from_number
from services.cdma_codec import channel_encode, decode_all, walsh_codes
from services.fractal_analyzer import estimate_dimension
from services.pattern_generator import (
    classify_order,
    generate_grid,
    level_bands,
    natural_order,
    zero_mask,
)
from services.pattern_renderer import PatternRenderer
from services.port_rotator import build_schedule, efficiency, simulate
from utils.errors import InvalidArgumentError, LscvtError
from utils.output_writer import OutputWriter
from utils.report_formatter import counts_csv, efficiency_csv, levels_csv, to_json
from utils.validators import ensure_valid, validate_range

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

PATTERN_FORMATS = ['ascii', 'pbm', 'values', 'pgm-values']
REPORT_FORMATS = ['csv', 'json']


def exit_status(command):
    """Map a command's outcome onto the 0 / 1 / 2 exit-code contract."""

    @wraps(command)
    def wrapper(*args, **kwargs) -> int:
        try:
            return command(*args, **kwargs)
        except LscvtError as e:
            logger.error(f"{command.__name__}: {e}")
            return e.exit_code
        except Exception as e:
            logger.error(f"{command.__name__} failed: {e}", exc_info=True)
            return EXIT_FAILURE

    return wrapper


@exit_status
def cmd_pattern(
    level: int,
    order: Optional[int] = None,
    rule: int = Config.DEFAULT_RULE,
    format: str = 'ascii',
    out_path: Optional[str] = None
) -> int:
    """
    Render the zero mask (or the values) of a level's grid.

    Args:
        level: Level >= 0
        order: Grid side length; defaults to the level's natural order
        rule: Boolean rule number
        format: ascii, pbm, values or pgm-values
        out_path: Destination file; standard output when omitted

    Returns:
        Exit status
    """
    boolean_rule = rule_from_number(rule)
    if order is None:
        order = natural_order(level)

    logger.info(f"Pattern request: level={level}, order={order}, rule={rule}, format={format}")
    grid = generate_grid(level, order, boolean_rule)
    logger.info(f"Grid is {classify_order(level, order).value} with {grid.zero_count} zero cells")

    renderer = PatternRenderer()
    if format in ('ascii', 'pbm'):
        data = renderer.render(zero_mask(grid), format)
    elif format == 'values':
        data = renderer.render_values(grid, 'text')
    elif format == 'pgm-values':
        data = renderer.render_values(grid, 'pgm')
    else:
        raise InvalidArgumentError(
            f"Invalid pattern format: {format}. Must be one of {', '.join(PATTERN_FORMATS)}"
        )

    OutputWriter(out_path).write(data)
    return EXIT_OK


@exit_status
def cmd_dimension(level: int, rule: int = Config.DEFAULT_RULE) -> int:
    """
    Print the box-counting dimension of a level's natural-order zero mask as JSON.

    Args:
        level: Level >= 0
        rule: Boolean rule number

    Returns:
        Exit status
    """
    grid = generate_grid(level, natural_order(level), rule_from_number(rule))
    estimate = estimate_dimension(zero_mask(grid))
    logger.info(f"Level {level}: slope={estimate.slope:.6f}, residual={estimate.residual:.3e}")

    OutputWriter().write(to_json(estimate.to_dict()))
    return EXIT_OK


@exit_status
def cmd_efficiency(max_width: int, format: str = 'csv') -> int:
    """
    Print the resource-saving table for widths 1..max_width.

    Args:
        max_width: Largest grid width, 1..Config.MAX_EFFICIENCY_WIDTH
        format: csv or json

    Returns:
        Exit status
    """
    ensure_valid(validate_range(max_width, 1, Config.MAX_EFFICIENCY_WIDTH, "max width"))

    reports = [efficiency(width) for width in range(1, max_width + 1)]
    if format == 'csv':
        data = efficiency_csv(reports)
    elif format == 'json':
        data = to_json([r.to_dict() for r in reports])
    else:
        raise InvalidArgumentError(f"Invalid report format: {format}")

    OutputWriter().write(data)
    return EXIT_OK


@exit_status
def cmd_simulate(
    width: int,
    ticks: Optional[int] = None,
    report_mode: str = 'json',
    base_speed: float = 1.0
) -> int:
    """
    Run the standby rotation and report per-port fairness.

    Args:
        width: Grid width, 1..Config.MAX_ROTATION_WIDTH
        ticks: Ticks to run; one full period when omitted
        report_mode: json (full FairnessReport) or csv (per-port counts)
        base_speed: Base clock label x

    Returns:
        Exit status
    """
    schedule = build_schedule(width, base_speed)
    if ticks is None:
        ticks = schedule.period

    logger.info(f"Simulating width {width} for {ticks} ticks (period {schedule.period})")
    report = simulate(schedule, ticks)

    if report_mode == 'json':
        data = to_json(report.to_dict())
    elif report_mode == 'csv':
        data = counts_csv(report.per_cell_standby_counts)
    else:
        raise InvalidArgumentError(f"Invalid report mode: {report_mode}")

    OutputWriter().write(data)
    return EXIT_OK


@exit_status
def cmd_cdma_demo(k: int, data: list[int]) -> int:
    """
    Encode data onto a Walsh-coded channel, decode every station and compare.

    Args:
        k: Codebook doubling count (2^k codes)
        data: One integer symbol per station

    Returns:
        0 when every symbol round-trips, 1 otherwise
    """
    book = walsh_codes(k)
    frame = channel_encode(data, book)
    decoded = decode_all(frame, book, len(data))

    OutputWriter().write(to_json({
        "k": k,
        "data": list(data),
        "frame": frame.tolist(),
        "decoded": decoded,
    }))

    if decoded != list(data):
        logger.error(f"Round trip mismatch: sent {data}, decoded {decoded}")
        return EXIT_FAILURE
    return EXIT_OK


@exit_status
def cmd_lscvt(x: int, y: int, z: int, rule: int = Config.DEFAULT_RULE) -> int:
    """Print the column layout and decimal result of one LSCVT evaluation."""
    trace = explain_lscvt(x, y, z, rule_from_number(rule))
    lines = trace.lines()
    lines.append(f"LSCVT({x},{y},{z}) = {trace.result.value}")
    OutputWriter().write(''.join(line + '\n' for line in lines).encode('ascii'))
    return EXIT_OK


@exit_status
def cmd_levels(max_level: int = 255, format: str = 'csv') -> int:
    """Print the level band table for levels 0..max_level."""
    bands = level_bands(max_level)
    if format == 'csv':
        data = levels_csv(bands)
    elif format == 'json':
        data = to_json([band.to_dict() for band in bands])
    else:
        raise InvalidArgumentError(f"Invalid report format: {format}")

    OutputWriter().write(data)
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        return [int(item) for item in text.split(',') if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per report."""
    parser = argparse.ArgumentParser(
        prog='lscvt',
        description='Level Sensitive Carry Value Transformation fractals and CDMA port rotation.'
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    pattern = subparsers.add_parser('pattern', help='render a level pattern')
    pattern.add_argument('--level', type=int, required=True)
    pattern.add_argument('--order', type=int, default=None)
    pattern.add_argument('--rule', type=int, default=Config.DEFAULT_RULE)
    pattern.add_argument('--format', choices=PATTERN_FORMATS, default='ascii')
    pattern.add_argument('--out', dest='out_path', default=None)

    dimension = subparsers.add_parser('dimension', help='box-counting dimension as JSON')
    dimension.add_argument('--level', type=int, required=True)
    dimension.add_argument('--rule', type=int, default=Config.DEFAULT_RULE)

    efficiency_cmd = subparsers.add_parser('efficiency', help='port-saving table')
    efficiency_cmd.add_argument('--max-width', type=int, default=5)
    efficiency_cmd.add_argument('--format', choices=REPORT_FORMATS, default='csv')

    simulate_cmd = subparsers.add_parser('simulate', help='standby rotation fairness')
    simulate_cmd.add_argument('--width', type=int, required=True)
    simulate_cmd.add_argument('--ticks', type=int, default=None)
    simulate_cmd.add_argument('--report-mode', choices=['json', 'csv'], default='json')
    simulate_cmd.add_argument('--base-speed', type=float, default=1.0)

    cdma = subparsers.add_parser('cdma', help='Walsh-coded channel round trip')
    cdma.add_argument('--k', type=int, required=True)
    cdma.add_argument('--data', type=_int_list, required=True)

    lscvt_cmd = subparsers.add_parser('lscvt', help='explain one LSCVT evaluation')
    lscvt_cmd.add_argument('--x', type=int, required=True)
    lscvt_cmd.add_argument('--y', type=int, required=True)
    lscvt_cmd.add_argument('--z', type=int, required=True)
    lscvt_cmd.add_argument('--rule', type=int, default=Config.DEFAULT_RULE)

    levels = subparsers.add_parser('levels', help='level band table')
    levels.add_argument('--max-level', type=int, default=255)
    levels.add_argument('--format', choices=REPORT_FORMATS, default='csv')

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    """Parse arguments, dispatch one subcommand and return its exit status."""
    logging.basicConfig(level=Config.log_level(), format=Config.LOG_FORMAT)

    try:
        Config.validate()
    except ValueError as e:
        logger.error(f"Configuration error: {e}")

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    if args.command == 'pattern':
        return cmd_pattern(args.level, args.order, args.rule, args.format, args.out_path)
    if args.command == 'dimension':
        return cmd_dimension(args.level, args.rule)
    if args.command == 'efficiency':
        return cmd_efficiency(args.max_width, args.format)
    if args.command == 'simulate':
        return cmd_simulate(args.width, args.ticks, args.report_mode, args.base_speed)
    if args.command == 'cdma':
        return cmd_cdma_demo(args.k, args.data)
    if args.command == 'lscvt':
        return cmd_lscvt(args.x, args.y, args.z, args.rule)
    return cmd_levels(args.max_level, args.format)


if __name__ == '__main__':
    sys.exit(main())
