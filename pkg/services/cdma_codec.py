"""Code-division channel arithmetic with Walsh spreading codes.

Each station i multiplies its data symbol d_i by its code c_i; the channel
carries the sum of all d_i * c_i. Multiplying the channel by c_i and dividing
by the code length recovers d_i because distinct codes are orthogonal.
"""

from dataclasses import dataclass
import logging

import numpy as np

from config import Config
from utils.errors import ArithmeticOverflowError, InvalidArgumentError
from utils.validators import ensure_valid, validate_range

logger = logging.getLogger(__name__)

# Despreading yields order * d_i, which must stay inside int64
_CORRELATION_LIMIT = 1 << 63


@dataclass(frozen=True, eq=False)
class WalshCodeBook:
    """m = 2^k mutually orthogonal +1/-1 codes of length m; codes[i] is station i's code."""

    order: int
    codes: np.ndarray

    def inner_products(self) -> np.ndarray:
        """Gram matrix of the codebook (m times the identity when orthogonal)."""
        return self.codes @ self.codes.T


@dataclass(frozen=True)
class ChannelFrame:
    """Superposed channel samples, one per chip."""

    samples: np.ndarray

    def __add__(self, other: 'ChannelFrame') -> 'ChannelFrame':
        if len(self.samples) != len(other.samples):
            raise InvalidArgumentError(
                f"Frame lengths differ: {len(self.samples)} vs {len(other.samples)}"
            )
        return ChannelFrame(samples=self.samples + other.samples)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChannelFrame):
            return NotImplemented
        return np.array_equal(self.samples, other.samples)

    def tolist(self) -> list[int]:
        return [int(s) for s in self.samples]


def walsh_codes(k: int) -> WalshCodeBook:
    """
    Build 2^k Walsh codes by recursive doubling.

    H(1) = [1]; H(2m) = [[H(m), H(m)], [H(m), -H(m)]].

    Args:
        k: Doubling count, 0 <= k <= Config.MAX_WALSH_K

    Returns:
        WalshCodeBook of order 2^k

    Raises:
        InvalidArgumentError: If k is out of range
    """
    ensure_valid(validate_range(k, 0, Config.MAX_WALSH_K, "k"))

    codes = np.ones((1, 1), dtype=np.int64)
    for _ in range(int(k)):
        codes = np.block([[codes, codes], [codes, -codes]])

    codes.flags.writeable = False
    logger.debug(f"Built Walsh codebook of order {len(codes)}")
    return WalshCodeBook(order=len(codes), codes=codes)


def channel_encode(data, book: WalshCodeBook) -> ChannelFrame:
    """
    Superpose the stations' spread symbols onto one channel frame.

    Args:
        data: Integer symbols, data[i] sent by station i
        book: WalshCodeBook with at least len(data) codes

    Returns:
        ChannelFrame with samples = sum_i data[i] * codes[i]

    Raises:
        InvalidArgumentError: If there are more symbols than codes
        ArithmeticOverflowError: If order * |data[i]| could leave the 64-bit range
    """
    symbols = [int(d) for d in data]
    if len(symbols) > book.order:
        raise InvalidArgumentError(
            f"{len(symbols)} stations exceed the {book.order} codes available"
        )
    if symbols and max(abs(d) for d in symbols) * book.order >= _CORRELATION_LIMIT:
        raise ArithmeticOverflowError(
            f"Symbols must stay below 2^63 / {book.order} in magnitude for 64-bit despreading"
        )

    samples = np.zeros(book.order, dtype=np.int64)
    if symbols:
        samples = np.asarray(symbols, dtype=np.int64) @ book.codes[:len(symbols)]

    return ChannelFrame(samples=samples)


def channel_decode(frame: ChannelFrame, book: WalshCodeBook, station: int) -> int:
    """
    Recover one station's symbol from a channel frame.

    Args:
        frame: ChannelFrame built with this codebook
        book: WalshCodeBook
        station: Station index, 0 <= station < book.order

    Returns:
        The station's data symbol

    Raises:
        InvalidArgumentError: If the station index is out of range or the frame
            does not match the codebook
    """
    ensure_valid(validate_range(station, 0, book.order - 1, "station"))
    if len(frame.samples) != book.order:
        raise InvalidArgumentError(
            f"Frame length {len(frame.samples)} does not match codebook order {book.order}"
        )

    correlation = int(np.dot(frame.samples.astype(object), book.codes[int(station)].astype(object)))
    symbol, leftover = divmod(correlation, book.order)
    if leftover:
        raise InvalidArgumentError(
            f"Correlation {correlation} is not a multiple of {book.order}; frame was not built from this codebook"
        )
    return symbol


def decode_all(frame: ChannelFrame, book: WalshCodeBook, stations: int) -> list[int]:
    """Decode the first `stations` symbols of a frame."""
    ensure_valid(validate_range(stations, 0, book.order, "stations"))
    return [channel_decode(frame, book, i) for i in range(int(stations))]
