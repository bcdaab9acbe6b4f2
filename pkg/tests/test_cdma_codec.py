import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from services.cdma_codec import (
    ChannelFrame,
    channel_decode,
    channel_encode,
    decode_all,
    walsh_codes,
)
from utils.errors import ArithmeticOverflowError, InvalidArgumentError

symbols = st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=4, max_size=4)


def test_walsh_order_0():
    book = walsh_codes(0)
    assert book.order == 1
    assert book.codes.tolist() == [[1]]


def test_walsh_order_1():
    assert walsh_codes(1).codes.tolist() == [[1, 1], [1, -1]]


def test_walsh_order_2_pairwise_orthogonal():
    codes = walsh_codes(2).codes
    for i in range(4):
        for j in range(4):
            dot = int(np.dot(codes[i], codes[j]))
            assert dot == (4 if i == j else 0)


def test_orthogonality_up_to_k_6():
    for k in range(7):
        book = walsh_codes(k)
        assert set(np.unique(book.codes)) <= {-1, 1}
        assert np.array_equal(book.inner_products(), book.order * np.eye(book.order, dtype=int))


@pytest.mark.parametrize("k", [-1, 11])
def test_walsh_k_range(k):
    with pytest.raises(InvalidArgumentError):
        walsh_codes(k)


def test_encode_zero_data():
    frame = channel_encode([0, 0, 0, 0], walsh_codes(2))
    assert frame.tolist() == [0, 0, 0, 0]
    assert channel_decode(frame, walsh_codes(2), 1) == 0


def test_single_station():
    book = walsh_codes(1)
    frame = channel_encode([5], book)
    assert frame.tolist() == [5, 5]
    assert channel_decode(frame, book, 0) == 5


def test_four_stations():
    book = walsh_codes(2)
    frame = channel_encode([3, -1, 0, 2], book)
    assert channel_decode(frame, book, 3) == 2
    assert decode_all(frame, book, 4) == [3, -1, 0, 2]


def test_randomized_round_trip():
    rng = random.Random(2024)
    for _ in range(1000):
        k = rng.randrange(7)
        book = walsh_codes(k)
        data = [rng.randint(-1000, 1000) for _ in range(rng.randint(0, book.order))]
        frame = channel_encode(data, book)
        assert decode_all(frame, book, len(data)) == data


@given(symbols, symbols)
def test_linearity(first, second):
    book = walsh_codes(2)
    combined = channel_encode([a + b for a, b in zip(first, second)], book)
    assert combined == channel_encode(first, book) + channel_encode(second, book)


def test_too_many_stations():
    with pytest.raises(InvalidArgumentError):
        channel_encode([1, 2, 3], walsh_codes(1))


def test_station_out_of_range():
    book = walsh_codes(1)
    frame = channel_encode([1], book)
    with pytest.raises(InvalidArgumentError):
        channel_decode(frame, book, 2)


def test_frame_from_another_codebook():
    frame = channel_encode([1, 2], walsh_codes(1))
    with pytest.raises(InvalidArgumentError):
        channel_decode(frame, walsh_codes(2), 0)


def test_foreign_frame_is_rejected():
    with pytest.raises(InvalidArgumentError):
        channel_decode(ChannelFrame(samples=np.array([1, 0])), walsh_codes(1), 0)


def test_frame_addition_requires_equal_lengths():
    with pytest.raises(InvalidArgumentError):
        channel_encode([1], walsh_codes(1)) + channel_encode([1], walsh_codes(2))


def test_encode_overflow():
    with pytest.raises(ArithmeticOverflowError):
        channel_encode([2 ** 62], walsh_codes(1))


@pytest.mark.parametrize("k, largest", [(2, 2 ** 61 - 1), (10, 2 ** 53 - 1)])
def test_largest_symbols_round_trip(k, largest):
    book = walsh_codes(k)
    data = [largest, -largest, 3]
    frame = channel_encode(data, book)
    assert decode_all(frame, book, len(data)) == data


@pytest.mark.parametrize("k, too_big", [(2, 2 ** 61), (10, 2 ** 53)])
def test_symbols_past_the_despreading_range(k, too_big):
    book = walsh_codes(k)
    with pytest.raises(ArithmeticOverflowError):
        channel_encode([too_big, 3], book)
    with pytest.raises(ArithmeticOverflowError):
        channel_encode([1, -too_big], book)
