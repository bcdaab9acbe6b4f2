import numpy as np
import pytest

from utils.errors import InvalidArgumentError
from utils.validators import (
    ensure_valid,
    validate_bit,
    validate_non_negative,
    validate_power_of_two,
    validate_range,
)


def test_validate_non_negative():
    assert validate_non_negative(0, "level") == (True, "")
    assert validate_non_negative(np.int64(5), "level") == (True, "")
    is_valid, error_msg = validate_non_negative(-3, "level")
    assert not is_valid
    assert "level" in error_msg


def test_booleans_are_not_integers():
    assert validate_non_negative(True, "level")[0] is False
    assert validate_range(False, 0, 1, "bit")[0] is False
    assert validate_bit(True, "a")[0] is False


def test_validate_range():
    assert validate_range(8, 1, 8, "width")[0]
    assert not validate_range(9, 1, 8, "width")[0]
    assert not validate_range(2.5, 1, 8, "width")[0]


@pytest.mark.parametrize("value, ok", [(1, True), (2, True), (1024, True), (0, False), (6, False), (-4, False)])
def test_validate_power_of_two(value, ok):
    assert validate_power_of_two(value, "order")[0] is ok


def test_validate_bit():
    assert validate_bit(0, "a")[0]
    assert validate_bit(1, "a")[0]
    assert not validate_bit(2, "a")[0]


def test_ensure_valid_raises():
    ensure_valid((True, ""))
    with pytest.raises(InvalidArgumentError, match="too big"):
        ensure_valid((False, "too big"))
