"""Heisenberg crystal: kappa, the period-shifting maps b~_{+-sigma}, depth.

Every map is first defined on doubly highest weight vertices, where it shifts
whole e-periods of the l-abacus. ``extend`` carries it to an arbitrary vertex
by raising to the attached doubly highest weight vertex and replaying the
raising path downwards afterwards. ``None`` plays the role of the zero vector.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Callable

from .abacus import T, T_inv, abacus_from_charged, charged_from_abacus
from .crystal import CrystalPath, highest_weight, replay_down
from .partitions import ChargedMultipartition, Partition, conjugate, partition
from .periods import (ShiftBlocked, all_periods, first_trivial_period, is_doubly_hw, is_hw_e,
                      nontrivial_periods, period_part_sizes, shift_steps,
                      strip_periods)

Vertex = ChargedMultipartition
Op = Callable[[Vertex], "Vertex | None"]


class NotDoublyHighestWeight(ValueError):
    pass


def _require_dhw(cmp: Vertex, e: int):
    if not is_doubly_hw(cmp, e):
        raise NotDoublyHighestWeight(f"{cmp} is not a doubly highest weight vertex (e={e})")


# -- kappa ----------------------------------------------------------------------

def kappa_pair(cmp: Vertex, e: int) -> tuple[Partition, Partition]:
    """(kappa, kappa-dot) of a doubly highest weight vertex; checks kappa-dot = kappa'."""
    _require_dhw(cmp, e)
    k = partition(period_part_sizes(abacus_from_charged(cmp), e))
    kd = partition(period_part_sizes(abacus_from_charged(T(cmp, e)), cmp.level))
    if kd != conjugate(k):
        raise AssertionError(f"kappa-dot {kd} is not the conjugate of kappa {k}")
    return k, kd


def kappa_by_multiplicity(cmp: Vertex, e: int) -> Partition:
    """kappa from part multiplicities of the l-view, each divided by e."""
    counts: dict[int, int] = {}
    for p in cmp.parts:
        for x in p:
            counts[x] = counts.get(x, 0) + 1
    out = []
    for size in sorted(counts, reverse=True):
        m, r = divmod(counts[size], e)
        if r:
            raise ValueError(f"multiplicity of part {size} is not divisible by {e}")
        out += [size] * m
    return tuple(out)


# -- maps on doubly highest weight vertices ------------------------------------

def _shift_on(cmp: Vertex, modulus: int, steps: int) -> Vertex | None:
    ab = abacus_from_charged(cmp)
    if steps < 0:
        periods = nontrivial_periods(ab, modulus)
        if not periods:
            return None
        p = periods[-1]
    else:
        p = first_trivial_period(ab, modulus)
    try:
        return charged_from_abacus(shift_steps(ab, p, steps))
    except ShiftBlocked:
        return None


def b_minus_z_dhw(cmp: Vertex, z: int, e: int) -> Vertex | None:
    """Shift the last non-trivial e-period of the l-abacus z steps left."""
    _require_dhw(cmp, e)
    return _shift_on(cmp, e, -z)


def b_plus_z_dhw(cmp: Vertex, z: int, e: int) -> Vertex | None:
    """Shift the first trivial e-period of the l-abacus z steps right."""
    _require_dhw(cmp, e)
    return _shift_on(cmp, e, z)


def b_minus_z_dual_dhw(cmp: Vertex, z: int, e: int) -> Vertex | None:
    """b~'_{-z}: the same move on the l-periods of the e-abacus."""
    _require_dhw(cmp, e)
    out = _shift_on(T(cmp, e), cmp.level, -z)
    return None if out is None else T_inv(out, cmp.level)


def b_plus_z_dual_dhw(cmp: Vertex, z: int, e: int) -> Vertex | None:
    _require_dhw(cmp, e)
    out = _shift_on(T(cmp, e), cmp.level, z)
    return None if out is None else T_inv(out, cmp.level)


def b_minus_sigma_dhw(cmp: Vertex, sigma, e: int, dual: bool = False) -> Vertex | None:
    """b~_{-sigma} = b~_{-sigma_1} o ... o b~_{-sigma_t}: the last part acts first."""
    step = b_minus_z_dual_dhw if dual else b_minus_z_dhw
    for z in reversed(partition(sigma)):
        if cmp is None or not is_doubly_hw(cmp, e):
            return None
        cmp = step(cmp, z, e)
    return cmp


def b_plus_sigma_dhw(cmp: Vertex, sigma, e: int, dual: bool = False) -> Vertex | None:
    """b~_sigma = b~_{sigma_t} o ... o b~_{sigma_1}: the first part acts first."""
    step = b_plus_z_dual_dhw if dual else b_plus_z_dhw
    for z in partition(sigma):
        if cmp is None or not is_doubly_hw(cmp, e):
            return None
        cmp = step(cmp, z, e)
    return cmp


# -- extension to arbitrary vertices -------------------------------------------

@lru_cache(maxsize=1 << 16)
def attached_dhw(cmp: Vertex, e: int) -> tuple[Vertex, CrystalPath]:
    """Doubly highest weight vertex of cmp and the raising path (e-steps, then l-steps)."""
    up, e_path = highest_weight(cmp, "e", e)
    top, l_path = highest_weight(up, "l", e)
    if not is_doubly_hw(top, e):
        raise AssertionError(f"raising {cmp} did not reach a doubly highest weight vertex")
    return top, e_path + l_path


def extend(op: Op, cmp: Vertex, e: int) -> Vertex | None:
    top, path = attached_dhw(cmp, e)
    image = op(top)
    if image is None:
        return None
    return replay_down(image, path, e)


def b_minus_sigma(cmp: Vertex, sigma, e: int) -> Vertex | None:
    return extend(lambda v: b_minus_sigma_dhw(v, sigma, e), cmp, e)


def b_plus_sigma(cmp: Vertex, sigma, e: int) -> Vertex | None:
    return extend(lambda v: b_plus_sigma_dhw(v, sigma, e), cmp, e)


def b_minus_sigma_dual(cmp: Vertex, sigma, e: int) -> Vertex | None:
    return extend(lambda v: b_minus_sigma_dhw(v, sigma, e, dual=True), cmp, e)


def b_plus_sigma_dual(cmp: Vertex, sigma, e: int) -> Vertex | None:
    return extend(lambda v: b_plus_sigma_dhw(v, sigma, e, dual=True), cmp, e)


def kappa(cmp: Vertex, e: int) -> Partition:
    """kappa of the attached doubly highest weight vertex."""
    return kappa_pair(attached_dhw(cmp, e)[0], e)[0]


def depth(cmp: Vertex, e: int) -> int:
    return sum(kappa(cmp, e))


def is_heis_hw(cmp: Vertex, e: int) -> bool:
    return depth(cmp, e) == 0


def add_box_on_diagonal(p: Partition, c: int) -> Partition | None:
    """p plus the addable box (a, b) with b - a = c, if there is one."""
    p = list(p) + [0]
    for a in range(len(p)):
        if (a == 0 or p[a - 1] > p[a]) and p[a] - a == c:
            p[a] += 1
            return partition(p)
    return None


def heis_op(cmp: Vertex, c: int, e: int) -> Vertex | None:
    """b~_{1,c} = b~_{kappa+} o b~_{-kappa}, kappa+ = kappa plus a box on diagonal c."""
    def op(v):
        k = kappa_pair(v, e)[0]
        bigger = add_box_on_diagonal(k, c)
        if bigger is None:
            return None
        return b_plus_sigma_dhw(b_minus_sigma_dhw(v, k, e), bigger, e)
    return extend(op, cmp, e)


def heis_lower(cmp: Vertex, c: int, e: int) -> Vertex | None:
    """Inverse arrow: remove the box of kappa on diagonal c."""
    def op(v):
        k = list(kappa_pair(v, e)[0])
        for a in range(len(k) - 1, -1, -1):
            if k[a] - 1 - a == c and (a + 1 == len(k) or k[a + 1] < k[a]):
                smaller = k[:a] + [k[a] - 1] + k[a + 1:]
                return b_plus_sigma_dhw(b_minus_sigma_dhw(v, tuple(k), e), partition(smaller), e)
        return None
    return extend(op, cmp, e)


def heis_diagonals(sigma) -> list[int]:
    """Contents b - a of the boxes of sigma, bottom to top and right to left."""
    sigma = partition(sigma)
    out = []
    for a in range(len(sigma), 0, -1):
        for b in range(sigma[a - 1], 0, -1):
            out.append(b - a)
    return out


def b_plus_sigma_by_heis(cmp: Vertex, sigma, e: int) -> Vertex | None:
    """b~_{1,c_1} o ... o b~_{1,c_n}: the last diagonal acts first."""
    for c in reversed(heis_diagonals(sigma)):
        if cmp is None:
            return None
        cmp = heis_op(cmp, c, e)
    return cmp


# -- the asymptotic case --------------------------------------------------------

def asymptotic_data(charge) -> tuple[int, int]:
    """(j0, N) with j0 the unique largest charge and N = s_j0 - max_{j != j0} s_j - 1."""
    charge = tuple(charge)
    top = max(charge)
    if charge.count(top) != 1 or len(charge) < 2:
        raise ValueError(f"charge {charge} is not asymptotic")
    j0 = charge.index(top) + 1
    n = top - max(s for j, s in enumerate(charge, 1) if j != j0) - 1
    if n < 1:
        raise ValueError(f"charge {charge} is not asymptotic")
    return j0, n


def theta(cmp: Vertex, e: int) -> Partition:
    """theta with lambda^{j0} = (theta_1^e, theta_2^e, ...)."""
    j0, n = asymptotic_data(cmp.charge)
    if cmp.rank > n:
        raise ValueError(f"rank {cmp.rank} exceeds the asymptotic bound {n}")
    lam = cmp.parts[j0 - 1]
    if len(lam) % e or any(lam[k] != lam[k - k % e] for k in range(len(lam))):
        raise ValueError(f"component {j0} is not of the form (theta_1^e, theta_2^e, ...)")
    return lam[::e]


def losev_a_sigma(cmp: Vertex, sigma, e: int) -> Vertex:
    """Replace component j0 by (sigma_1^e, sigma_2^e, ...) when theta is empty."""
    sigma = partition(sigma)
    j0, n = asymptotic_data(cmp.charge)
    if cmp.rank + e * sum(sigma) > n:
        raise ValueError(f"|lambda| + e|sigma| = {cmp.rank + e * sum(sigma)} exceeds N = {n}")
    if not is_hw_e(cmp, e):
        raise ValueError("expected an e-crystal highest weight vertex")
    if theta(cmp, e):
        raise ValueError("theta is not empty")
    parts = list(cmp.parts)
    parts[j0 - 1] = tuple(x for x in sigma for _ in range(e))
    return ChargedMultipartition(tuple(parts), cmp.charge)


def hw_path_shift_description(cmp: Vertex, amounts, e: int, direction: int) -> list[tuple[int, int]]:
    """Plan [(k, steps)]: the k-th period of the abacus moves amounts[k] steps.

    Left moves (direction -1, amounts = kappa) run from the last period to the
    first; right moves (direction +1, amounts = sigma) from the first to the
    last, so that no period runs into one that has not moved yet.
    """
    if not is_hw_e(cmp, e):
        raise ValueError("expected an e-crystal highest weight vertex")
    amounts = partition(amounts)
    ks = range(len(amounts), 0, -1) if direction < 0 else range(1, len(amounts) + 1)
    return [(k, direction * amounts[k - 1]) for k in ks]


def apply_shift_plan(cmp: Vertex, plan, e: int) -> Vertex:
    ab = abacus_from_charged(cmp)
    need = max((k for k, _ in plan), default=0)
    strip = strip_periods(ab, e)
    periods = list(all_periods(ab, e, extra_trivial=max(0, need - len(strip.periods))))
    for k, steps in plan:
        ab = shift_steps(ab, periods[k - 1], steps)
    return charged_from_abacus(ab)
