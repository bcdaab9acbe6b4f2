"""Renders zero masks and value grids as text, PBM and PGM bytes."""

import logging

from services.pattern_generator import PatternGrid, ZeroMask
from utils.errors import InvalidArgumentError

MASK_FORMATS = ('ascii', 'pbm')
VALUE_FORMATS = ('text', 'pgm')

# plain PGM allows maxval up to 65535
MAX_PGM_WIDTH = 16


class PatternRenderer:
    """Turns masks and grids into the byte layouts written by the CLI."""

    def __init__(self, active_char: str = '#', idle_char: str = '.'):
        """
        Initialize PatternRenderer.

        Args:
            active_char: ASCII glyph for zero (active) cells
            idle_char: ASCII glyph for every other cell
        """
        self.active_char = active_char
        self.idle_char = idle_char
        self.logger = logging.getLogger(__name__)

    def render(self, mask: ZeroMask, format: str = 'ascii') -> bytes:
        """
        Render a zero mask, row 0 first.

        Args:
            mask: ZeroMask to draw
            format: 'ascii' ('#' for zero cells, '.' otherwise) or 'pbm' (plain P1)

        Returns:
            Encoded bytes

        Raises:
            InvalidArgumentError: If the format is unknown
        """
        if format == 'ascii':
            lines = [
                ''.join(self.active_char if bit else self.idle_char for bit in row)
                for row in mask.bits
            ]
            text = ''.join(line + '\n' for line in lines)
        elif format == 'pbm':
            header = f"P1\n{mask.order} {mask.order}\n"
            body = ''.join(
                ' '.join('1' if bit else '0' for bit in row) + '\n'
                for row in mask.bits
            )
            text = header + body
        else:
            raise InvalidArgumentError(
                f"Invalid mask format: {format}. Must be one of {', '.join(MASK_FORMATS)}"
            )

        self.logger.debug(f"Rendered {mask.order}x{mask.order} mask as {format}")
        return text.encode('ascii')

    def render_values(self, grid: PatternGrid, format: str = 'text') -> bytes:
        """
        Render the decimal cell values of a grid.

        Args:
            grid: PatternGrid to print
            format: 'text' (space-separated rows) or 'pgm' (plain P2 graymap)

        Returns:
            Encoded bytes

        Raises:
            InvalidArgumentError: If the format is unknown or the width is too
                large for a graymap
        """
        body = ''.join(
            ' '.join(str(int(value)) for value in row) + '\n'
            for row in grid.cells
        )

        if format == 'text':
            text = body
        elif format == 'pgm':
            if grid.width > MAX_PGM_WIDTH:
                raise InvalidArgumentError(
                    f"Width {grid.width} exceeds the {MAX_PGM_WIDTH}-bit graymap limit"
                )
            maxval = max((1 << grid.width) - 1, 1)
            text = f"P2\n{grid.order} {grid.order}\n{maxval}\n" + body
        else:
            raise InvalidArgumentError(
                f"Invalid value format: {format}. Must be one of {', '.join(VALUE_FORMATS)}"
            )

        return text.encode('ascii')
