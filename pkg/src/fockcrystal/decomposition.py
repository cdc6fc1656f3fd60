"""Triple decomposition of a vertex, the labelling iota, FLOTW multipartitions.

Every charged l-partition is F-dot_(j) o b~_sigma o F_(i) applied to an empty
multipartition whose charge lies in the fundamental domain.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .abacus import T, in_fundamental_domain
from .crystal import apply_lowering, crystal_component, highest_weight, node_key
from .heisenberg import b_minus_sigma, b_plus_sigma, depth, kappa
from .partitions import (BoxCoord, ChargedMultipartition, Partition, multipartitions_of,
                         part, residue)
from .periods import is_hw_e


@dataclass(frozen=True)
class TripleDecomposition:
    e_path: tuple[int, ...]
    sigma: Partition
    l_path: tuple[int, ...]
    base_charge: tuple[int, ...]

    def replay(self, e: int) -> ChargedMultipartition | None:
        v = ChargedMultipartition.empty(self.base_charge)
        v = apply_lowering(v, self.e_path, "e", e)
        v = None if v is None else b_plus_sigma(v, self.sigma, e)
        return None if v is None else apply_lowering(v, self.l_path, "l", e)


@dataclass(frozen=True)
class IotaLabel:
    flotw_l: ChargedMultipartition
    sigma: Partition
    flotw_e: ChargedMultipartition


def _colors(path) -> tuple[int, ...]:
    return tuple(step.color for step in path)


@lru_cache(maxsize=1 << 16)
def decompose(cmp: ChargedMultipartition, e: int) -> TripleDecomposition:
    """Raise in the l-crystal, strip kappa, raise in the e-crystal."""
    v, l_path = highest_weight(cmp, "l", e)
    sigma = kappa(v, e)
    v = b_minus_sigma(v, sigma, e)
    if v is None:
        raise AssertionError(f"b~_(-kappa) undefined on {cmp}")
    v, e_path = highest_weight(v, "e", e)
    if v.rank or not in_fundamental_domain(v.charge, e):
        raise AssertionError(f"decomposition of {cmp} ended at {v}")
    return TripleDecomposition(_colors(e_path), sigma, _colors(l_path), v.charge)


def iota(cmp: ChargedMultipartition, e: int) -> IotaLabel:
    d = decompose(cmp, e)
    base = ChargedMultipartition.empty(d.base_charge)
    flotw_l = apply_lowering(base, d.e_path, "e", e)
    flotw_e = apply_lowering(T(base, e), d.l_path, "e", cmp.level)
    if flotw_l is None or flotw_e is None:
        raise AssertionError(f"lowering path of {cmp} is not defined on the empty vertex")
    return IotaLabel(flotw_l, d.sigma, flotw_e)


# -- FLOTW -----------------------------------------------------------------------

OK = "ok"
CHARGE_OUTSIDE_DOMAIN = "charge-outside-domain"
CONDITION_1 = "condition-1"
CONDITION_2 = "condition-2"


def flotw_reason(cmp: ChargedMultipartition, e: int) -> str:
    """``ok`` or the first FLOTW condition that fails."""
    s, lam, l = cmp.charge, cmp.parts, cmp.level
    if not in_fundamental_domain(s, e):
        return CHARGE_OUTSIDE_DOMAIN
    longest = max((len(p) for p in lam), default=0)
    for j in range(l):
        shift = (s[j + 1] - s[j]) if j + 1 < l else (e + s[0] - s[l - 1])
        nxt = lam[(j + 1) % l]
        if any(part(lam[j], k) < part(nxt, k + shift) for k in range(1, longest + 1)):
            return CONDITION_1
    seen: dict[int, set[int]] = {}
    for j, p in enumerate(lam, 1):
        for a, size in enumerate(p, 1):
            seen.setdefault(size, set()).add(residue(BoxCoord(a, size, j), s, e))
    if any(len(r) == e for r in seen.values()):
        return CONDITION_2
    return OK


def is_flotw(cmp: ChargedMultipartition, e: int) -> bool:
    return flotw_reason(cmp, e) == OK


def enumerate_flotw(e: int, s, n: int) -> list[ChargedMultipartition]:
    """Rank-n FLOTW multipartitions of charge s, in canonical order."""
    s = tuple(s)
    if not in_fundamental_domain(s, e):
        raise ValueError(f"charge {s} is outside the fundamental domain for e={e}")
    out = [ChargedMultipartition(parts, s) for parts in multipartitions_of(n, len(s))]
    return sorted((v for v in out if is_flotw(v, e)), key=node_key)


def flotw_by_crystal(e: int, s, n: int) -> list[ChargedMultipartition]:
    """Rank-n vertices of the e-crystal component of the empty vertex."""
    g = crystal_component(ChargedMultipartition.empty(tuple(s)), "e", e, n)
    return g.nodes_of_rank(n)


def is_finite_dim_label(cmp: ChargedMultipartition, e: int) -> bool:
    """T(cmp) is FLOTW at level e with modulus l."""
    return is_flotw(T(cmp, e), cmp.level)


def is_finite_dim_by_crystal(cmp: ChargedMultipartition, e: int) -> bool:
    return is_hw_e(cmp, e) and depth(cmp, e) == 0

