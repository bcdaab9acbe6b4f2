"""JSON and CSV serialization of reports.

Reals are fixed to Config.REPORT_DECIMALS places so that identical runs give
byte-identical output.
"""

import csv
import io
import json

from config import Config

EFFICIENCY_HEADER = ['width', 'total', 'active', 'standby', 'saving_percent']
LEVELS_HEADER = ['low', 'high', 'width', 'natural_order', 'zero_cells', 'kind']


def _fixed(value: float) -> str:
    return f"{value:.{Config.REPORT_DECIMALS}f}"


def _round_reals(obj):
    if isinstance(obj, float):
        return round(obj, Config.REPORT_DECIMALS)
    if isinstance(obj, dict):
        return {key: _round_reals(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_reals(value) for value in obj]
    return obj


def to_json(obj) -> bytes:
    """
    Serialize a report (dict or list of dicts) as one JSON line.

    Args:
        obj: JSON-compatible structure; floats are rounded to the report precision

    Returns:
        UTF-8 bytes terminated by a newline
    """
    return (json.dumps(_round_reals(obj)) + '\n').encode('utf-8')


def _to_csv(header: list[str], rows: list[list]) -> bytes:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fixed(v) if isinstance(v, float) else v for v in row])
    return buffer.getvalue().encode('utf-8')


def efficiency_csv(reports) -> bytes:
    """
    Render efficiency reports as CSV.

    Args:
        reports: Iterable of EfficiencyReport

    Returns:
        CSV bytes with header width,total,active,standby,saving_percent
    """
    rows = [
        [r.width, r.total_ports, r.active_ports, r.standby_ports, r.saving_percent]
        for r in reports
    ]
    return _to_csv(EFFICIENCY_HEADER, rows)


def levels_csv(bands) -> bytes:
    """Render LevelBand rows as CSV."""
    rows = [[b.low, b.high, b.width, b.natural_order, b.zero_cells, b.kind.value] for b in bands]
    return _to_csv(LEVELS_HEADER, rows)


def counts_csv(counts) -> bytes:
    """Render a 2-D count array as CSV, row y per line, no header."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    for row in counts:
        writer.writerow([int(v) for v in row])
    return buffer.getvalue().encode('utf-8')
