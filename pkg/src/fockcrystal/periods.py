"""e-periods of abaci, total periodicity and period shifts.

A period starts at the greatest position; at it and each of the next e-1
positions it takes the lowest bead, and these rows must weakly decrease.
An abacus is totally e-periodic when stripping first periods eventually leaves
a left-justified abacus; this is the highest weight criterion for the e-crystal.
"""
from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .abacus import Abacus, T, abacus_from_charged
from .partitions import ChargedMultipartition

Period = tuple[tuple[int, int], ...]

_MAX_STRIP = 10**6


class Strip(NamedTuple):
    periods: tuple[Period, ...]
    remainder: Abacus
    totally_periodic: bool


def first_period(ab: Abacus, e: int) -> Period | None:
    """At each of the positions top, top-1, ... take the lowest bead there.

    Rows must weakly decrease along the period; None if they cannot.
    """
    top = ab.max_position()
    ab = ab.extended(min(ab.window_low, top - e))
    beads = []
    prev = ab.level
    for c in range(top, top - e, -1):
        rows = [j for j in range(1, ab.level + 1) if ab.has(j, c)]
        if not rows or rows[0] > prev:
            return None
        lowest = rows[0]
        beads.append((lowest, c))
        prev = lowest
    return tuple(beads)


def remove_beads(ab: Abacus, beads) -> Abacus:
    low = min(c for _, c in beads)
    ab = ab.extended(min(ab.window_low, low - 1))
    rows = [set(r) for r in ab.rows]
    for j, c in beads:
        rows[j - 1].remove(c)
    return Abacus(ab.window_low, tuple(frozenset(r) for r in rows))


def is_left_justified(ab: Abacus) -> bool:
    return all(not row or len(row) == max(row) - ab.window_low + 1 for row in ab.rows)


def strip_periods(ab: Abacus, e: int) -> Strip:
    """Remove first periods until the remainder is left-justified or none exists."""
    periods = []
    rem = ab
    for _ in range(_MAX_STRIP):
        if is_left_justified(rem):
            return Strip(tuple(periods), rem, True)
        p = first_period(rem, e)
        if p is None:
            return Strip(tuple(periods), rem, False)
        periods.append(p)
        rem = remove_beads(rem, p)
    raise RuntimeError("period stripping did not terminate")


def all_periods(ab: Abacus, e: int, extra_trivial: int = 1) -> tuple[Period, ...]:
    """The stripped periods followed by ``extra_trivial`` periods of the remainder."""
    strip = strip_periods(ab, e)
    periods = list(strip.periods)
    rem = strip.remainder
    if strip.totally_periodic:
        for _ in range(extra_trivial):
            p = first_period(rem, e)
            periods.append(p)
            rem = remove_beads(rem, p)
    return tuple(periods)


def bead_part_size(ab: Abacus, j: int, c: int) -> int:
    """Number of empty positions to the left of (j, c) on row j."""
    row = ab.rows[j - 1]
    return sum(1 for x in range(ab.window_low, c) if x not in row)


def is_trivial(p: Period, ab: Abacus) -> bool:
    return all(bead_part_size(ab, j, c) == 0 for j, c in p)


def period_part_sizes(ab: Abacus, e: int) -> list[int]:
    """Part size carried by each non-trivial period, in stripping order."""
    strip = strip_periods(ab, e)
    if not strip.totally_periodic:
        raise ValueError("abacus is not totally periodic")
    sizes = []
    for p in strip.periods:
        if is_trivial(p, ab):
            continue
        s = {bead_part_size(ab, j, c) for j, c in p}
        if len(s) != 1:
            raise ValueError(f"period {p} carries several part sizes {sorted(s)}")
        sizes.append(s.pop())
    return sizes


def nontrivial_periods(ab: Abacus, e: int) -> list[Period]:
    return [p for p in strip_periods(ab, e).periods if not is_trivial(p, ab)]


def first_trivial_period(ab: Abacus, e: int) -> Period:
    for p in all_periods(ab, e):
        if is_trivial(p, ab):
            return p
    raise ValueError("no trivial period")


class ShiftBlocked(ValueError):
    pass


def _shift(ab: Abacus, p, delta: int) -> Abacus:
    moved = {(j, c + delta) for j, c in p}
    low = min(c for _, c in moved)
    ab = ab.extended(min(ab.window_low, low - 1))
    pset = set(p)
    for j, c in moved:
        if (j, c) not in pset and ab.has(j, c):
            raise ShiftBlocked(f"position ({j}, {c}) is occupied")
    rows = [set(r) for r in ab.rows]
    for j, c in p:
        rows[j - 1].discard(c)
    for j, c in moved:
        rows[j - 1].add(c)
    return Abacus(ab.window_low, tuple(frozenset(r) for r in rows))


def shift_left(ab: Abacus, p: Period) -> Abacus:
    """Move every bead of p one step left; other beads stay fixed."""
    return _shift(ab, p, -1)


def shift_right(ab: Abacus, p: Period) -> Abacus:
    return _shift(ab, p, 1)


def shift_steps(ab: Abacus, p: Period, steps: int) -> Abacus:
    """Shift p by |steps| single steps (negative = left), tracking its beads."""
    delta = -1 if steps < 0 else 1
    for _ in range(abs(steps)):
        ab = _shift(ab, p, delta)
        p = tuple((j, c + delta) for j, c in p)
    return ab


@lru_cache(maxsize=1 << 16)
def is_hw_e(cmp: ChargedMultipartition, e: int) -> bool:
    return strip_periods(abacus_from_charged(cmp), e).totally_periodic


def is_hw_l(cmp: ChargedMultipartition, e: int) -> bool:
    return is_hw_e(T(cmp, e), cmp.level)


def is_doubly_hw(cmp: ChargedMultipartition, e: int) -> bool:
    return is_hw_e(cmp, e) and is_hw_l(cmp, e)
