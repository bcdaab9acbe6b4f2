"""Output utilities for the LSCVT toolkit."""

import logging
import os
import sys
from typing import Optional


class OutputWriter:
    """Writes rendered bytes to a file or to standard output."""

    def __init__(self, out_path: Optional[str] = None):
        """
        Initialize OutputWriter.

        Args:
            out_path: Destination file path; None writes to standard output
        """
        self.out_path = out_path
        self.logger = logging.getLogger(__name__)
        if self.out_path:
            self._ensure_directory_exists()

    def _ensure_directory_exists(self):
        """Create the destination's parent directory if it doesn't exist."""
        directory = os.path.dirname(os.path.abspath(self.out_path))
        if not os.path.exists(directory):
            os.makedirs(directory)

    def write(self, data: bytes) -> Optional[str]:
        """
        Write data to the destination.

        Args:
            data: Encoded output

        Returns:
            Full filepath written, or None for standard output
        """
        if not self.out_path:
            sys.stdout.buffer.write(data)
            sys.stdout.buffer.flush()
            return None

        filepath = os.path.abspath(self.out_path)
        with open(filepath, 'wb') as f:
            f.write(data)

        self.logger.info(f"Wrote {len(data)} bytes to {filepath}")
        return filepath
