from fractions import Fraction
from itertools import product
import math

import numpy as np
import pytest

from config import Config
from services.pattern_generator import generate_grid, natural_mask
from services.port_rotator import (
    QUADRANT_CYCLE,
    build_schedule,
    depth_speed,
    efficiency,
    phases,
    simulate,
    standby_mask,
    standby_set,
)
from utils.errors import InvalidArgumentError


@pytest.mark.parametrize("width, period", [(1, 4), (2, 16), (3, 64), (8, 65536)])
def test_schedule_period(width, period):
    schedule = build_schedule(width)
    assert schedule.period == period
    assert schedule.quadrant_cycle == QUADRANT_CYCLE


@pytest.mark.parametrize("width", [0, 9, -1])
def test_schedule_width_cap(width):
    with pytest.raises(InvalidArgumentError):
        build_schedule(width)


def test_quadrant_cycle_visits_every_quadrant():
    assert sorted(QUADRANT_CYCLE) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert QUADRANT_CYCLE[0] == (0, 0)


def test_depth_speed():
    schedule = build_schedule(3, base_speed_label=1)
    assert [depth_speed(schedule, d) for d in range(3)] == [1, 4, 16]
    assert depth_speed(build_schedule(2, 2.5), 1) == 10.0
    with pytest.raises(InvalidArgumentError):
        depth_speed(schedule, 3)


def test_standby_width_1_walks_the_cycle():
    schedule = build_schedule(1)
    first = standby_set(schedule, 0)
    assert first.standby == {(0, 0)}
    assert first.active == {(0, 1), (1, 0), (1, 1)}
    assert [standby_set(schedule, t).standby for t in range(1, 5)] == [
        {(0, 1)}, {(1, 1)}, {(1, 0)}, {(0, 0)},
    ]


def test_width_2_tick_0_matches_grid():
    grid = generate_grid(2, 4)
    nonzero = {(x, y) for y in range(4) for x in range(4) if grid.cells[y, x] != 0}
    assert standby_set(build_schedule(2), 0).standby == nonzero
    assert len(nonzero) == 7


def test_tick_0_is_complement_of_zero_mask():
    for w in range(1, 6):
        assert np.array_equal(standby_mask(build_schedule(w), 0), ~natural_mask(w).bits)


def test_constant_standby_cardinality():
    for w in range(1, 4):
        schedule = build_schedule(w)
        for t in range(schedule.period):
            assignment = standby_set(schedule, t)
            assert len(assignment.standby) == 4 ** w - 3 ** w
            assert len(assignment.active) == 3 ** w
            assert not assignment.standby & assignment.active


def test_phase_enumeration():
    for w in range(1, 4):
        schedule = build_schedule(w)
        seen = [phases(schedule, t) for t in range(schedule.period)]
        assert sorted(seen) == list(product(range(4), repeat=w))


def test_deepest_depth_moves_every_tick():
    schedule = build_schedule(3)
    assert phases(schedule, 0) == (0, 0, 0)
    assert phases(schedule, 1) == (0, 0, 1)
    assert phases(schedule, 4) == (0, 1, 0)
    assert phases(schedule, 16) == (1, 0, 0)
    assert phases(schedule, 64) == (0, 0, 0)


def test_perfect_fairness_over_a_period():
    for w in range(1, 4):
        schedule = build_schedule(w)
        report = simulate(schedule, schedule.period)
        assert (report.per_cell_standby_counts == 4 ** w - 3 ** w).all()
        fraction = efficiency(w).saving_percent / 100
        assert report.min_standby_fraction == fraction
        assert report.max_standby_fraction == fraction
        assert 1 - (3 / 4) ** w == pytest.approx(fraction)


def test_simulate_examples():
    counts = simulate(build_schedule(1), 4).per_cell_standby_counts
    assert counts.tolist() == [[1, 1], [1, 1]]

    counts = simulate(build_schedule(2), 16).per_cell_standby_counts
    assert (counts == 7).all()

    counts = simulate(build_schedule(1), 1).per_cell_standby_counts
    assert counts.sum() == 1
    assert counts.max() == 1


def test_simulate_counts_sum():
    for w, ticks in ((1, 7), (2, 37), (3, 100)):
        report = simulate(build_schedule(w), ticks)
        assert report.per_cell_standby_counts.sum() == ticks * (4 ** w - 3 ** w)


def test_digit_counting_matches_replay(monkeypatch):
    runs = [(w, ticks) for w in (1, 2, 3) for ticks in (1, 2, 5, 17, 63, 64, 65, 130, 200)]
    replayed = {run: simulate(build_schedule(run[0]), run[1]).per_cell_standby_counts for run in runs}

    monkeypatch.setattr(Config, 'BRUTE_FORCE_BUDGET', 0)
    for run in runs:
        counted = simulate(build_schedule(run[0]), run[1]).per_cell_standby_counts
        assert np.array_equal(counted, replayed[run]), run


def test_simulate_at_the_width_cap():
    schedule = build_schedule(8)
    report = simulate(schedule, schedule.period)
    assert (report.per_cell_standby_counts == 4 ** 8 - 3 ** 8).all()


def test_simulate_rejects_zero_ticks():
    with pytest.raises(InvalidArgumentError):
        simulate(build_schedule(1), 0)


@pytest.mark.parametrize("width, percent", [(1, 25.0), (2, 43.75), (3, 57.8125)])
def test_efficiency_published_figures(width, percent):
    assert efficiency(width).saving_percent == percent


def test_efficiency_width_5():
    report = efficiency(5)
    assert report.saving_fraction == Fraction(781, 1024)
    assert math.floor(report.saving_percent * 100) / 100 == 76.26


def test_efficiency_width_4_notes_erratum():
    report = efficiency(4)
    assert report.standby_ports == 175
    assert report.saving_fraction == Fraction(175, 256)
    assert report.saving_percent == 68.359375
    assert "172/256" in report.note
    assert "note" in report.to_dict()


def test_efficiency_accounting():
    for w in range(1, 10):
        report = efficiency(w)
        assert report.active_ports + report.standby_ports == report.total_ports
        assert report.total_ports == 4 ** w
        assert report.active_ports == 3 ** w
        assert report.note is None or w == 4


def test_efficiency_width_cap():
    assert efficiency(Config.MAX_EFFICIENCY_WIDTH).total_ports == 4 ** Config.MAX_EFFICIENCY_WIDTH
    with pytest.raises(InvalidArgumentError):
        efficiency(Config.MAX_EFFICIENCY_WIDTH + 1)
