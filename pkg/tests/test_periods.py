import pytest
from hypothesis import given

from fockcrystal.abacus import T, abacus_from_charged, charged_from_abacus, left_justified
from fockcrystal.crystal import dual_e_tilde, e_tilde, reduced_words
from fockcrystal.partitions import all_charged, parse_charged
from fockcrystal.periods import (ShiftBlocked, all_periods, first_period, is_doubly_hw, is_hw_e,
                                 period_part_sizes, remove_beads, shift_left, shift_right,
                                 strip_periods)

from conftest import charged

DHW = parse_charged("3|3.1|1", "(-1,0,0)")


def test_example_periods():
    ab = abacus_from_charged(DHW)
    strip = strip_periods(ab, 2)
    assert strip.totally_periodic
    assert period_part_sizes(ab, 2)[:2] == [3, 1]
    assert is_doubly_hw(DHW, 2)


def test_empty_vertex_is_totally_periodic():
    assert strip_periods(left_justified((0, 2, 1)), 3).totally_periodic


def test_first_period_takes_the_lowest_row():
    # 1^4|1 (0,1) with e=3 is the case where the topmost reading goes wrong
    v = parse_charged("1^4|1", "(0,1)")
    assert is_hw_e(v, 3) == all(e_tilde(v, i, 3) is None for i in range(3))


@given(charged(levels=(2, 3), max_part=3))
def test_hw_criterion_matches_raising_operators(v):
    for e in (2, 3):
        assert is_hw_e(v, e) == all(e_tilde(v, i, e) is None for i in range(e))
        l_hw = all(dual_e_tilde(v, j, e) is None for j in range(v.level))
        assert is_doubly_hw(v, e) == (is_hw_e(v, e) and l_hw)


@given(charged(levels=(2, 3), max_part=3))
def test_removing_a_period_keeps_reduced_words(v):
    for e in (2, 3):
        ab = abacus_from_charged(v)
        p = first_period(ab, e)
        if p is None:
            continue
        w = charged_from_abacus(remove_beads(ab, p))
        assert reduced_words(w, e) == reduced_words(v, e)


def test_shift_left_then_right():
    ab = abacus_from_charged(DHW)
    p = strip_periods(ab, 2).periods[0]
    moved = shift_left(ab, p)
    q = tuple((j, c - 1) for j, c in p)
    assert shift_right(moved, q) == ab


def test_blocked_shift_raises():
    ab = left_justified((0, 0))
    p = all_periods(ab, 2)[0]
    with pytest.raises(ShiftBlocked):
        shift_left(ab, p)


def test_doubly_hw_is_symmetric_under_T():
    for v in all_charged((0, 1, 1), 4):
        if is_doubly_hw(v, 2):
            assert is_doubly_hw(T(v, 2), 3)
