"""Input validation utilities for the LSCVT toolkit."""

import numbers

from utils.errors import InvalidArgumentError


def _is_int(value) -> bool:
    # bool is an int subclass but never a meaningful level, order or width
    return isinstance(value, numbers.Integral) and not isinstance(value, bool)


def validate_non_negative(value, name: str) -> tuple[bool, str]:
    """
    Validate a non-negative integer.

    Args:
        value: The value to check
        name: Human-readable name used in the error message

    Returns:
        Tuple of (is_valid, error_message)
    """
    if not _is_int(value):
        return False, f"{name} must be an integer"

    if value < 0:
        return False, f"{name} must be non-negative, got {value}"

    return True, ""


def validate_range(value, low: int, high: int, name: str) -> tuple[bool, str]:
    """
    Validate an integer inside the closed range [low, high].

    Args:
        value: The value to check
        low: Smallest allowed value
        high: Largest allowed value
        name: Human-readable name used in the error message

    Returns:
        Tuple of (is_valid, error_message)
    """
    if not _is_int(value):
        return False, f"{name} must be an integer"

    if value < low or value > high:
        return False, f"{name} must be between {low} and {high}, got {value}"

    return True, ""


def validate_power_of_two(value, name: str) -> tuple[bool, str]:
    """
    Validate a positive power of two.

    Args:
        value: The value to check
        name: Human-readable name used in the error message

    Returns:
        Tuple of (is_valid, error_message)
    """
    if not _is_int(value) or value < 1:
        return False, f"{name} must be a positive integer"

    if value & (value - 1):
        return False, f"{name} must be a power of two, got {value}"

    return True, ""


def validate_bit(value, name: str) -> tuple[bool, str]:
    """Validate a single binary digit."""
    if value not in (0, 1) or isinstance(value, bool):
        return False, f"{name} must be 0 or 1, got {value!r}"

    return True, ""


def ensure_valid(check: tuple[bool, str]) -> None:
    """
    Raise InvalidArgumentError when a validator rejected its input.

    Args:
        check: Result of one of the validate_* functions

    Raises:
        InvalidArgumentError: If the check failed
    """
    is_valid, error_msg = check
    if not is_valid:
        raise InvalidArgumentError(error_msg)
