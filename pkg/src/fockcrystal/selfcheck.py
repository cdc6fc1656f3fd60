"""Exhaustive invariant suites over small vertex sets, with a plain-text report.

Each check walks every charged multipartition up to ``max_rank`` for each
(e, charge) case and counts violations. The report is deterministic.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .abacus import (T, T_inv, abacus_from_charged, charged_from_abacus, e_core_and_quotient,
                     in_fundamental_domain, to_one_view)
from .crystal import (dual_e_tilde, dual_f_tilde, e_tilde, f_tilde, reduced_words)
from .decomposition import (decompose, enumerate_flotw, flotw_by_crystal, iota,
                            is_finite_dim_by_crystal, is_finite_dim_label, is_flotw)
from .fock import commutator_defect, conjugate_action_check
from .heisenberg import (apply_shift_plan, attached_dhw, b_minus_sigma, b_minus_sigma_dhw,
                         b_plus_sigma, heis_op, hw_path_shift_description, kappa,
                         kappa_by_multiplicity, kappa_pair, losev_a_sigma, theta)
from .partitions import ChargedMultipartition, all_charged, partitions_of
from .periods import (ShiftBlocked, all_periods, first_period, is_doubly_hw, is_hw_e,
                      remove_beads, shift_left)

Case = tuple[int, tuple[int, ...]]  # (e, charge)


@dataclass
class SuiteConfig:
    cases: list[Case]
    max_rank: int
    heis_diagonals: tuple[int, ...] = (-2, -1, 0, 1, 2)
    seed: int = 0
    samples: int = 100


QUICK = SuiteConfig(cases=[(2, (0, 1, 1)), (3, (0, 1)), (2, (1, 0))], max_rank=4)
FULL = SuiteConfig(
    cases=[(2, (0, 1, 1)), (2, (0, 0, 3)),   # (e, l) = (2, 3); the second is outside A(s)
           (3, (0, 2)), (3, (1, -2)),        # (3, 2)
           (4, (0, 1)), (4, (0, 5)),         # (4, 2)
           (2, (0, 1)), (2, (1, -2))],       # (2, 2)
    max_rank=8,
)


@dataclass
class CheckResult:
    name: str
    statement: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, detail: str):
        if len(self.failures) < 5:
            self.failures.append(detail)
        elif self.failures[-1] != "...":
            self.failures.append("...")


def _vertices(cfg: SuiteConfig) -> Iterable[tuple[int, ChargedMultipartition]]:
    for e, charge in cfg.cases:
        for v in all_charged(charge, cfg.max_rank):
            yield e, v


# -- individual checks ------------------------------------------------------------

def check_ef_inverse(cfg: SuiteConfig) -> CheckResult:
    r = CheckResult("ef_inverse", "e~_i f~_i = id and f~_i e~_i = id where defined")
    for e, v in _vertices(cfg):
        for i in range(e):
            r.checked += 1
            up, down = e_tilde(v, i, e), f_tilde(v, i, e)
            if down is not None and e_tilde(down, i, e) != v:
                r.fail(f"e~_{i} f~_{i} {v}")
            if up is not None and f_tilde(up, i, e) != v:
                r.fail(f"f~_{i} e~_{i} {v}")
    return r


def check_crystals_commute(cfg: SuiteConfig) -> CheckResult:
    r = CheckResult("crystals_commute", "primal and dual crystal operators commute")
    for e, v in _vertices(cfg):
        for i in range(e):
            for j in range(v.level):
                r.checked += 1
                for op, dop in ((f_tilde, dual_f_tilde), (e_tilde, dual_e_tilde)):
                    a = op(v, i, e)
                    a = None if a is None else dop(a, j, e)
                    b = dop(v, j, e)
                    b = None if b is None else op(b, i, e)
                    if a != b:
                        r.fail(f"{op.__name__}_{i} vs {dop.__name__}_{j} on {v} (e={e})")
    return r


def check_period_words(cfg: SuiteConfig) -> CheckResult:
    r = CheckResult("period_words", "removing the first period keeps every reduced i-word")
    for e, v in _vertices(cfg):
        ab = abacus_from_charged(v)
        p = first_period(ab, e)
        if p is None:
            continue
        r.checked += 1
        if reduced_words(charged_from_abacus(remove_beads(ab, p)), e) != reduced_words(v, e):
            r.fail(f"{v} (e={e})")
    return r


def check_hw_oracle(cfg: SuiteConfig) -> CheckResult:
    r = CheckResult("hw_oracle", "totally e-periodic <=> every e~_i vanishes")
    for e, v in _vertices(cfg):
        r.checked += 1
        if is_hw_e(v, e) != all(e_tilde(v, i, e) is None for i in range(e)):
            r.fail(f"{v} (e={e})")
    return r


def check_shift_correspondence(cfg: SuiteConfig) -> CheckResult:
    r = CheckResult("shift_correspondence",
                    "shifting an e-period left = shifting some l-period of the e-abacus left")
    for e, v in _vertices(cfg):
        if not is_doubly_hw(v, e):
            continue
        l = v.level
        ab, abw = abacus_from_charged(v), abacus_from_charged(T(v, e))
        images = set()
        for q in all_periods(abw, l):
            try:
                images.add(T_inv(charged_from_abacus(shift_left(abw, q)), l))
            except ShiftBlocked:
                pass
        for p in all_periods(ab, e):
            try:
                w = charged_from_abacus(shift_left(ab, p))
            except ShiftBlocked:
                continue
            r.checked += 1
            if w not in images:
                r.fail(f"{v} period {p} (e={e})")
    return r


def check_kappa(cfg: SuiteConfig) -> CheckResult:
    r = CheckResult("kappa", "b~_-kappa empties the attached doubly hw vertex with charge in A(s); "
                             "ranks e|kappa|, l|kappa|, el|kappa| + |e-core|; kappa-dot = kappa'")
    for e, v in _vertices(cfg):
        top, _ = attached_dhw(v, e)
        r.checked += 1
        k, kd = kappa_pair(top, e)
        bottom = b_minus_sigma_dhw(top, k, e)
        dual_bottom = b_minus_sigma_dhw(top, kd, e, dual=True)
        if bottom is None or bottom.rank or not in_fundamental_domain(bottom.charge, e):
            r.fail(f"b~_-kappa {top} -> {bottom}")
        if dual_bottom is None or T(dual_bottom, e).rank or not in_fundamental_domain(T(dual_bottom, e).charge, v.level):
            r.fail(f"b~'_-kappa' {top} -> {dual_bottom}")
        one = to_one_view(top, e)
        core, _ = e_core_and_quotient(one.parts[0], one.charge[0], e)
        if (top.rank != e * sum(k) or T(top, e).rank != v.level * sum(k)
                or one.rank - sum(core) != e * v.level * sum(k)):
            r.fail(f"rank identities at {top}")
        if kappa_by_multiplicity(top, e) != k:
            r.fail(f"multiplicity reading at {top}")
    return r


def _commutes(a_op, b_op, v) -> bool:
    x = a_op(v)
    x = None if x is None else b_op(x)
    y = b_op(v)
    y = None if y is None else a_op(y)
    return x == y


def check_heis_commute(cfg: SuiteConfig) -> CheckResult:
    r = CheckResult("heis_commute", "b~_{1,c} commutes with f~_i, e~_i, f~-dot_j, e~-dot_j")
    for e, v in _vertices(cfg):
        for c in cfg.heis_diagonals:
            h = lambda x, c=c, e=e: heis_op(x, c, e)
            for i in range(e):
                for op in (f_tilde, e_tilde):
                    r.checked += 1
                    if not _commutes(h, lambda x, op=op, i=i, e=e: op(x, i, e), v):
                        r.fail(f"b~_(1,{c}) vs {op.__name__}_{i} on {v} (e={e})")
            for j in range(v.level):
                for op in (dual_f_tilde, dual_e_tilde):
                    r.checked += 1
                    if not _commutes(h, lambda x, op=op, j=j, e=e: op(x, j, e), v):
                        r.fail(f"b~_(1,{c}) vs {op.__name__}_{j} on {v} (e={e})")
    return r


def check_decompose(cfg: SuiteConfig) -> CheckResult:
    r = CheckResult("decompose", "F-dot o b~_sigma o F on |empty, s~> reproduces every vertex")
    for e, v in _vertices(cfg):
        r.checked += 1
        if decompose(v, e).replay(e) != v:
            r.fail(f"{v} (e={e})")
    return r


def check_iota(cfg: SuiteConfig) -> CheckResult:
    r = CheckResult("iota", "iota is injective with FLOTW outer labels")
    for e, charge in cfg.cases:
        seen: dict = {}
        for v in all_charged(charge, cfg.max_rank):
            r.checked += 1
            lab = iota(v, e)
            if lab in seen:
                r.fail(f"{v} and {seen[lab]} share a label (e={e})")
            seen[lab] = v
            if not is_flotw(lab.flotw_l, e) or not is_flotw(lab.flotw_e, v.level):
                r.fail(f"label of {v} is not FLOTW (e={e})")
    return r


def check_finite_dim(cfg: SuiteConfig) -> CheckResult:
    r = CheckResult("finite_dim", "T(v) FLOTW <=> v e-crystal hw with depth 0")
    for e, v in _vertices(cfg):
        r.checked += 1
        if is_finite_dim_label(v, e) != is_finite_dim_by_crystal(v, e):
            r.fail(f"{v} (e={e})")
    return r


def check_flotw_bfs(cfg: SuiteConfig) -> CheckResult:
    r = CheckResult("flotw_bfs", "FLOTW multipartitions = component of the empty vertex")
    for e, charge in cfg.cases:
        if not in_fundamental_domain(charge, e):
            continue
        for n in range(cfg.max_rank + 1):
            r.checked += 1
            if enumerate_flotw(e, charge, n) != flotw_by_crystal(e, charge, n):
                r.fail(f"e={e} s={charge} rank {n}")
    return r


def check_shift_plan(cfg: SuiteConfig) -> CheckResult:
    r = CheckResult("shift_plan", "on e-hw vertices b~_-kappa and b~_sigma move the k-th periods")
    for e, v in _vertices(cfg):
        if not is_hw_e(v, e):
            continue
        k = kappa(v, e)
        plans = [(k, -1, b_minus_sigma)] if k else [(s, 1, b_plus_sigma) for s in ((1,), (2,), (1, 1))]
        for amounts, direction, op in plans:
            r.checked += 1
            try:
                got = apply_shift_plan(v, hw_path_shift_description(v, amounts, e, direction), e)
            except ShiftBlocked:
                r.fail(f"blocked plan {amounts} on {v} (e={e})")
                continue
            if got != op(v, amounts, e):
                r.fail(f"plan {amounts} on {v} (e={e})")
    return r


CHECKS: dict[str, Callable[[SuiteConfig], CheckResult]] = {
    "ef_inverse": check_ef_inverse,
    "crystals_commute": check_crystals_commute,
    "period_words": check_period_words,
    "hw_oracle": check_hw_oracle,
    "shift_correspondence": check_shift_correspondence,
    "kappa": check_kappa,
    "heis_commute": check_heis_commute,
    "decompose": check_decompose,
    "iota": check_iota,
    "finite_dim": check_finite_dim,
    "flotw_bfs": check_flotw_bfs,
    "shift_plan": check_shift_plan,
}


# -- random-sample checks ---------------------------------------------------------

def random_asymptotic_instance(rng: random.Random, e: int, l: int):
    """(vertex, sigma): an e-hw vertex with empty component j0 and a far larger charge there."""
    gap = rng.randint(4 * e + 4, 5 * e + 8)
    while True:
        charge = [rng.randint(0, 2) for _ in range(l)]
        j0 = rng.randrange(l)
        charge[j0] = max(charge) + gap
        pool = [v for v in all_charged(tuple(charge), 3) if not v.parts[j0]]
        v = rng.choice(pool)
        if is_hw_e(v, e):
            sigma = rng.choice([s for n in range(3) for s in partitions_of(n)])
            return v, sigma


def check_losev_random(seed: int = 0, samples: int = 100) -> CheckResult:
    r = CheckResult("losev", "a~_sigma = extend(b~_sigma) and theta = kappa on asymptotic vertices")
    rng = random.Random(seed)
    for _ in range(samples):
        e, l = rng.choice([(2, 2), (3, 2), (2, 3), (4, 2)])
        base, sigma = random_asymptotic_instance(rng, e, l)
        r.checked += 1
        try:
            a = losev_a_sigma(base, sigma, e)
        except ValueError as exc:
            r.fail(f"{base} sigma={sigma}: {exc}")
            continue
        if b_plus_sigma(base, sigma, e) != a:
            r.fail(f"a~ vs b~ on {base} sigma={sigma}")
        if theta(a, e) != kappa(a, e):
            r.fail(f"theta {theta(a, e)} vs kappa {kappa(a, e)} on {a}")
    return r


def check_fock_commutator(max_rank: int = 6, cases=((2, (0, 1)), (3, (0, 1)), (2, (0, 0, 1)))) -> CheckResult:
    r = CheckResult("fock_commutator", "[e_i, f_j] = delta_ij [N_i] on basis vectors")
    for e, charge in cases:
        for v in all_charged(charge, max_rank):
            for i in range(e):
                for j in range(e):
                    r.checked += 1
                    if commutator_defect(v, i, j, e):
                        r.fail(f"i={i} j={j} {v} (e={e})")
    return r


def check_fock_conjugation(seed: int = 0, samples: int = 100) -> CheckResult:
    r = CheckResult("fock_conjugation", "e_{-i}, f_{-i} on conjugates: q^{-N_i-1} and q^{N_i-1}")
    rng = random.Random(seed)
    for _ in range(samples):
        e = rng.choice([2, 3, 4])
        l = rng.choice([1, 2, 3])
        charge = tuple(rng.randint(-3, 3) for _ in range(l))
        pool = list(all_charged(charge, rng.randint(0, 6)))
        v = rng.choice(pool)
        for i in range(e):
            r.checked += 1
            if not conjugate_action_check(v, i, e):
                r.fail(f"i={i} {v} (e={e})")
    return r


# -- report -------------------------------------------------------------------------

def run_suite(profile: str = "quick", seed: int = 0, only: Iterable[str] | None = None) -> list[CheckResult]:
    cfg = {"quick": QUICK, "full": FULL}[profile]
    names = list(only) if only else list(CHECKS)
    results = [CHECKS[n](cfg) for n in names]
    if not only:
        samples = 20 if profile == "quick" else 100
        results.append(check_losev_random(seed, samples))
        results.append(check_fock_commutator(3 if profile == "quick" else 6))
        results.append(check_fock_conjugation(seed, samples))
    return results


def format_report(results: list[CheckResult]) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status} {r.name:<22} {r.checked:>7} cases  {r.statement}")
        for f in r.failures:
            lines.append(f"     {f}")
    total = sum(not r.passed for r in results)
    lines.append(f"{len(results) - total}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"


def timed_suite(profile: str, seed: int = 0) -> tuple[list[CheckResult], float]:
    t = time.perf_counter()
    res = run_suite(profile, seed)
    return res, time.perf_counter() - t
