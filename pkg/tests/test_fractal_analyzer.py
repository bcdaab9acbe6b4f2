import math

import numpy as np
import pytest

from services.fractal_analyzer import box_count, estimate_dimension, similarity_dimension
from services.pattern_generator import ZeroMask, natural_mask
from utils.errors import DegenerateInputError, InvalidArgumentError

SIERPINSKI = math.log(3) / math.log(2)


def _mask(bits):
    bits = np.asarray(bits, dtype=bool)
    return ZeroMask(order=bits.shape[0], bits=bits)


def test_similarity_dimension():
    assert similarity_dimension(3, 0.5) == pytest.approx(1.5849625007)
    assert similarity_dimension(4, 0.5) == pytest.approx(2.0)
    assert similarity_dimension(1, 0.5) == 0.0


@pytest.mark.parametrize("scale", [0, 1, 1.5, -0.5])
def test_similarity_dimension_rejects_bad_scale(scale):
    with pytest.raises(InvalidArgumentError):
        similarity_dimension(3, scale)


def test_similarity_dimension_rejects_zero_pieces():
    with pytest.raises(InvalidArgumentError):
        similarity_dimension(0, 0.5)


def test_box_count_width_3():
    assert box_count(natural_mask(3), 2) == 9


def test_exact_box_count_law():
    for w in range(1, 7):
        mask = natural_mask(w)
        for j in range(w + 1):
            assert box_count(mask, 2 ** j) == 3 ** (w - j)


def test_box_count_whole_mask():
    assert box_count(natural_mask(4), 16) == 1
    assert box_count(_mask(np.zeros((8, 8))), 8) == 0


def test_box_count_all_true():
    assert box_count(_mask(np.ones((4, 4))), 1) == 16


def test_box_count_monotone():
    for w in range(2, 7):
        mask = natural_mask(w)
        counts = [box_count(mask, 2 ** j) for j in range(w + 1)]
        assert counts == sorted(counts, reverse=True)


@pytest.mark.parametrize("size", [3, 0, 8])
def test_box_count_rejects_bad_sizes(size):
    with pytest.raises(InvalidArgumentError):
        box_count(natural_mask(2), size)


def test_estimate_is_exactly_sierpinski():
    for w in range(2, 11):
        estimate = estimate_dimension(natural_mask(w))
        assert estimate.slope == pytest.approx(SIERPINSKI, abs=1e-9)
        assert estimate.residual < 1e-9


def test_estimate_agrees_to_four_places():
    estimate = estimate_dimension(natural_mask(8))
    assert math.floor(estimate.slope * 10 ** 4) == 15849


def test_estimate_points():
    estimate = estimate_dimension(natural_mask(4))
    assert estimate.points == [(1, 81), (2, 27), (4, 9), (8, 3)]
    assert estimate.to_dict()["points"] == [[1, 81], [2, 27], [4, 9], [8, 3]]


def test_estimate_plane_filling():
    estimate = estimate_dimension(_mask(np.ones((16, 16))))
    assert estimate.slope == pytest.approx(2.0, abs=1e-9)


def test_estimate_single_cell():
    bits = np.zeros((8, 8), dtype=bool)
    bits[5, 2] = True
    assert estimate_dimension(_mask(bits)).slope == pytest.approx(0.0, abs=1e-9)


def test_estimate_rejects_empty_mask():
    with pytest.raises(DegenerateInputError):
        estimate_dimension(_mask(np.zeros((8, 8))))


def test_estimate_rejects_small_or_odd_orders():
    with pytest.raises(InvalidArgumentError):
        estimate_dimension(natural_mask(1))
    with pytest.raises(InvalidArgumentError):
        estimate_dimension(_mask(np.ones((6, 6))))
