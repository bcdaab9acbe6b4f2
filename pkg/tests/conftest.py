"""Shared fixtures: an LSCVT evaluator that works straight from a printed truth table."""

import pytest

# Output column of rule 3, rows (a, b, c) = 000 .. 111
RULE_3_PRINTED = {
    (0, 0, 0): 1,
    (0, 0, 1): 1,
    (0, 1, 0): 0,
    (0, 1, 1): 0,
    (1, 0, 0): 0,
    (1, 0, 1): 0,
    (1, 1, 0): 0,
    (1, 1, 1): 0,
}


def truth_table_lscvt(x, y, z, table=None):
    """Recompute LSCVT bit by bit from a {(a, b, c): bit} table."""
    table = table or RULE_3_PRINTED
    width = max(z.bit_length(), 1)
    value = 0
    for i in range(width):
        key = ((x >> i) & 1, (y >> i) & 1, (z >> i) & 1)
        value += table[key] * 2 ** i
    return value


def table_for(rule_number):
    """Printed-table dict for an arbitrary rule number."""
    return {
        (a, b, c): (rule_number >> (4 * a + 2 * b + c)) & 1
        for a in (0, 1) for b in (0, 1) for c in (0, 1)
    }


@pytest.fixture
def oracle():
    return truth_table_lscvt


@pytest.fixture
def rule_table():
    return table_for
