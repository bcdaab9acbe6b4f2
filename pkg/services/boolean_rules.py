"""Three-variable Boolean rules, the Carry Value Transformation and its level-sensitive variant.

Rules are numbered the Wolfram way: bit i of the rule number is the output for
the input triple (a, b, c) whose 3-bit value abc equals i, so f(0,0,0) sits at
the least-significant bit.
"""

from dataclasses import dataclass
from typing import Optional
import logging

import numpy as np

from config import Config
from utils.errors import ArithmeticOverflowError, InvalidArgumentError
from utils.validators import (
    ensure_valid,
    validate_bit,
    validate_non_negative,
    validate_range,
)

logger = logging.getLogger(__name__)

TABLE_SIZE = 8


@dataclass(frozen=True)
class BooleanRule:
    """Truth table of a three-variable Boolean function."""

    rule_number: int
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != TABLE_SIZE or any(bit not in (0, 1) for bit in self.table):
            raise InvalidArgumentError("Truth table must hold exactly 8 binary outputs")
        if rule_number_from_table(self.table) != self.rule_number:
            raise InvalidArgumentError(
                f"Truth table does not match rule number {self.rule_number}"
            )

    def table_array(self) -> np.ndarray:
        """Return the truth table as a numpy lookup array."""
        return np.asarray(self.table, dtype=np.int64)


@dataclass(frozen=True)
class BitWord:
    """A non-negative integer viewed as a fixed-width bit string."""

    value: int
    width: int

    def __post_init__(self):
        ensure_valid(validate_non_negative(self.value, "value"))
        ensure_valid(validate_range(self.width, 1, 1 << 30, "width"))
        if self.value >> self.width:
            raise InvalidArgumentError(
                f"value {self.value} does not fit in {self.width} bits"
            )

    def bit(self, i: int) -> int:
        """Return bit i (0 = least significant)."""
        return (self.value >> i) & 1

    def bits(self) -> tuple[int, ...]:
        """Return the bits most-significant first, as written in a worked example."""
        return tuple(self.bit(i) for i in reversed(range(self.width)))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits())


@dataclass(frozen=True)
class LsCvtResult:
    """Value of an LSCVT evaluation and the width it was computed at."""

    value: int
    width: int


@dataclass(frozen=True)
class CvtSum:
    """Outcome of adding two integers by repeated carry-value transformation."""

    total: int
    iterations: int


@dataclass(frozen=True)
class LsCvtTrace:
    """Column layout of one LSCVT evaluation: three operand rows and the result row."""

    x: BitWord
    y: BitWord
    z: BitWord
    result: BitWord
    rule_number: int

    def lines(self) -> list[str]:
        """Render the trace as aligned text lines, one operand per line."""
        label_width = max(len(str(w.value)) for w in (self.x, self.y, self.z))
        rows = []
        for word in (self.x, self.y, self.z):
            rows.append(f"{word.value:>{label_width}} ---- " + " ".join(str(b) for b in word.bits()))
        rows.append(" " * (label_width + 6) + " ".join(str(b) for b in self.result.bits()))
        return rows


def rule_number_from_table(table) -> int:
    """
    Rebuild a rule number from its 8 outputs.

    Args:
        table: Sequence of 8 bits, table[i] = f(a, b, c) for abc = i

    Returns:
        Rule number in [0, 255]
    """
    if len(table) != TABLE_SIZE:
        raise InvalidArgumentError("Truth table must hold exactly 8 outputs")

    number = 0
    for i, bit in enumerate(table):
        ensure_valid(validate_bit(int(bit), f"table[{i}]"))
        number |= int(bit) << i
    return number


def rule_from_number(r: int) -> BooleanRule:
    """
    Build the truth table of rule r.

    Args:
        r: Rule number in [0, 255]

    Returns:
        BooleanRule whose table[i] is bit i of r

    Raises:
        InvalidArgumentError: If r is out of range
    """
    ensure_valid(validate_range(r, 0, 255, "rule number"))
    r = int(r)
    return BooleanRule(rule_number=r, table=tuple((r >> i) & 1 for i in range(TABLE_SIZE)))


RULE_3 = rule_from_number(3)


def default_rule() -> BooleanRule:
    """Return the rule named by Config.DEFAULT_RULE, used wherever a rule is omitted."""
    return rule_from_number(Config.DEFAULT_RULE)


def eval_rule(rule: BooleanRule, a: int, b: int, c: int) -> int:
    """Evaluate the rule on one input triple."""
    for name, bit in (("a", a), ("b", b), ("c", c)):
        ensure_valid(validate_bit(bit, name))
    return rule.table[4 * a + 2 * b + c]


def _check_word(value: int, what: str) -> int:
    if value.bit_length() > Config.WORD_BITS:
        raise ArithmeticOverflowError(
            f"{what} needs {value.bit_length()} bits, exceeding the {Config.WORD_BITS}-bit word"
        )
    return value


def cvt(a: int, b: int) -> int:
    """
    Carry Value Transformation: the carry word of a ripple addition.

    Args:
        a: Non-negative integer
        b: Non-negative integer

    Returns:
        (a AND b) shifted left by one bit

    Raises:
        InvalidArgumentError: If either operand is negative
        ArithmeticOverflowError: If the shifted carry leaves the machine word
    """
    ensure_valid(validate_non_negative(a, "a"))
    ensure_valid(validate_non_negative(b, "b"))
    return _check_word((int(a) & int(b)) << 1, f"CVT({a}, {b})")


def xor_value(a: int, b: int) -> int:
    """Carry-less sum of a and b (the companion of cvt in a ripple addition)."""
    ensure_valid(validate_non_negative(a, "a"))
    ensure_valid(validate_non_negative(b, "b"))
    return int(a) ^ int(b)


def cvt_add(a: int, b: int) -> CvtSum:
    """
    Add two integers using only XOR and CVT.

    The pair (a, b) is replaced by (a XOR b, CVT(a, b)) until the carry word
    vanishes; what is left in the first slot is a + b.

    Args:
        a: Non-negative integer
        b: Non-negative integer

    Returns:
        CvtSum with the total and the number of transformation rounds
    """
    ensure_valid(validate_non_negative(a, "a"))
    ensure_valid(validate_non_negative(b, "b"))
    _check_word(int(a), "a")
    _check_word(int(b), "b")

    iterations = 0
    while b:
        a, b = xor_value(a, b), cvt(a, b)
        iterations += 1

    logger.debug(f"cvt_add converged after {iterations} rounds")
    return CvtSum(total=a, iterations=iterations)


def level_width(z: int) -> int:
    """
    Bit width shared by all levels in z's band.

    Levels 2^n .. 2^(n+1) - 1 have width n + 1. Level 0 is treated like level 1.

    Args:
        z: Level, z >= 0

    Returns:
        Width >= 1
    """
    ensure_valid(validate_non_negative(z, "level"))
    return max(int(z).bit_length(), 1)


def level_band(width: int) -> tuple[int, int]:
    """
    Range of levels sharing a width.

    Args:
        width: Bit width >= 1

    Returns:
        (low, high) inclusive; width 1 covers levels 0 and 1
    """
    ensure_valid(validate_range(width, 1, 1 << 30, "width"))
    if width == 1:
        return 0, 1
    return 1 << (width - 1), (1 << width) - 1


def lscvt(x: int, y: int, z: int, rule: Optional[BooleanRule] = None) -> LsCvtResult:
    """
    Level Sensitive Carry Value Transformation.

    Bit i of the result is the rule applied to bit i of x, y and z. The width
    comes from z alone and only the low `width` bits of x and y take part.

    Args:
        x: Column coordinate (first rule input)
        y: Row coordinate (second rule input)
        z: Level (third rule input)
        rule: Boolean rule; default_rule() when omitted

    Returns:
        LsCvtResult with the value and the width it was computed at
    """
    ensure_valid(validate_non_negative(x, "x"))
    ensure_valid(validate_non_negative(y, "y"))
    width = level_width(z)
    x, y, z = int(x), int(y), int(z)
    rule = rule or default_rule()

    value = 0
    for i in range(width):
        index = (((x >> i) & 1) << 2) | (((y >> i) & 1) << 1) | ((z >> i) & 1)
        value |= rule.table[index] << i
    return LsCvtResult(value=value, width=width)


def lscvt_array(xs: np.ndarray, ys: np.ndarray, z: int, rule: Optional[BooleanRule] = None) -> np.ndarray:
    """
    Vectorized LSCVT over coordinate arrays at one level.

    Args:
        xs: Non-negative integer array of first inputs
        ys: Non-negative integer array of second inputs, same shape as xs
        z: Level
        rule: Boolean rule; default_rule() when omitted

    Returns:
        Array of LSCVT values with the shape of xs; uint64 when the width
        fits the machine word, Python ints (object dtype) otherwise
    """
    xs = np.asarray(xs, dtype=np.int64)
    ys = np.asarray(ys, dtype=np.int64)
    if xs.shape != ys.shape:
        raise InvalidArgumentError(f"Coordinate shapes differ: {xs.shape} vs {ys.shape}")
    if xs.size and (xs.min() < 0 or ys.min() < 0):
        raise InvalidArgumentError("Coordinates must be non-negative")

    width = level_width(z)
    z = int(z)
    table = (rule or default_rule()).table_array()
    wide = width > Config.WORD_BITS
    values = np.zeros(xs.shape, dtype=object if wide else np.uint64)

    # Above the coordinates' own bit length, x_i = y_i = 0 and the column is constant
    coord_bits = int(max(xs.max(initial=0), ys.max(initial=0))).bit_length()

    for i in range(width):
        z_bit = (z >> i) & 1
        if i < coord_bits:
            column = table[(((xs >> i) & 1) << 2) | (((ys >> i) & 1) << 1) | z_bit]
        else:
            column = np.full(xs.shape, table[z_bit], dtype=np.int64)

        if wide:
            values += column.astype(object) << i
        else:
            values |= column.astype(np.uint64) << np.uint64(i)

    return values


def explain_lscvt(x: int, y: int, z: int, rule: Optional[BooleanRule] = None) -> LsCvtTrace:
    """
    Lay out an LSCVT evaluation column by column.

    Args:
        x: First operand
        y: Second operand
        z: Level
        rule: Boolean rule; default_rule() when omitted

    Returns:
        LsCvtTrace holding the operand words truncated to the level width
    """
    rule = rule or default_rule()
    result = lscvt(x, y, z, rule)
    mask = (1 << result.width) - 1
    return LsCvtTrace(
        x=BitWord(int(x) & mask, result.width),
        y=BitWord(int(y) & mask, result.width),
        z=BitWord(int(z), result.width),
        result=BitWord(result.value, result.width),
        rule_number=rule.rule_number,
    )
