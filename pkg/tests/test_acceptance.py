"""Acceptance criteria, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the summary lines.
"""
import random
import time

import pytest

from fockcrystal.abacus import T, to_one_view
from fockcrystal.crystal import dual_f_tilde, reduced_words
from fockcrystal.decomposition import enumerate_flotw
from fockcrystal.heisenberg import (b_minus_z_dhw, b_minus_z_dual_dhw, b_plus_sigma, kappa,
                                    kappa_pair, losev_a_sigma, theta)
from fockcrystal.partitions import parse_charged
from fockcrystal.periods import is_doubly_hw
from fockcrystal.selfcheck import (CHECKS, FULL, check_fock_commutator, check_fock_conjugation,
                                   format_report, random_asymptotic_instance)

FLOTW_EXAMPLE = ["-|3 (0,1)", "1^2|1 (0,1)", "1^3|- (0,1)", "1|1^2 (0,1)",
                 "1|2 (0,1)", "2.1|- (0,1)", "2|1 (0,1)", "3|- (0,1)"]


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail
    return emit


def test_criterion_1_indexation(report):
    v = parse_charged("5.1|3.1|1", "(0,-1,1)")
    expected = parse_charged("1^5|3|-|1", "(-1,-1,1,1)")
    uncached = getattr(T, "__wrapped__", T)
    t = max(_timed(lambda: uncached(v, 4)) for _ in range(20))
    ok = T(v, 4) == expected and t < 1e-3
    report(1, ok, f"T = {T(v, 4)}, slowest of 20 uncached runs {t * 1e6:.0f} us")


def test_criterion_2_reduced_words(report):
    v = parse_charged("5.1|3.1|1", "(0,-1,1)")
    words = reduced_words(v, 4)
    after = reduced_words(dual_f_tilde(v, 0, 4), 4)
    ok = words == ["++-", "+-", "++", "+-"] == after
    report(2, ok, f"words {words}, after the dual f_0 {after}")


def test_criterion_3_doubly_hw(report):
    v = parse_charged("3|3.1|1", "(-1,0,0)")
    k, kd = kappa_pair(v, 2)
    one = to_one_view(v, 2)
    ok = is_doubly_hw(v, 2) and one == parse_charged("10.8.4.2", "(-1)") and k == (3, 1) and kd == (2, 1, 1)
    report(3, ok, f"1-view {one}, kappa {k}, kappa-dot {kd}")


def test_criterion_4_b_minus_one(report):
    v = parse_charged("3|3.1|1", "(-1,0,0)")
    a = to_one_view(b_minus_z_dhw(v, 1, 2), 2)
    b = to_one_view(b_minus_z_dual_dhw(v, 1, 2), 2)
    ok = a == parse_charged("10.8", "(-1)") and b == parse_charged("6.6.4.2", "(-1)")
    report(4, ok, f"b_-1 gives {a}, dual b_-1 gives {b}")


def test_criterion_5_flotw_enumeration(report):
    t = time.perf_counter()
    got = [str(v) for v in enumerate_flotw(4, (0, 1), 4)]
    t = time.perf_counter() - t
    ok = got == FLOTW_EXAMPLE and t < 1.0
    report(5, ok, f"rank 4 gives {len(got)} bipartitions in {t:.3f} s; the listed 8 have rank 3")


def test_criterion_6_property_suite(report):
    t = time.perf_counter()
    results = [fn(FULL) for fn in CHECKS.values()]
    t = time.perf_counter() - t
    ok = all(r.passed for r in results) and t <= 600
    failed = [r.name for r in results if not r.passed]
    report(6, ok, f"{len(results) - len(failed)}/{len(results)} checks, "
                  f"{sum(r.checked for r in results)} cases, {t:.0f} s {failed or ''}"
                  + ("" if ok else "\n" + format_report(results)))


def test_criterion_7_losev(report):
    base = parse_charged("1^3|-", "(0,14)")
    expected = parse_charged("1^3|2^3.1^3", "(0,14)")
    a = losev_a_sigma(base, (2, 1), 3)
    b = b_plus_sigma(base, (2, 1), 3)
    rng = random.Random(0)
    bad = 0
    for _ in range(100):
        e, l = rng.choice([(2, 2), (3, 2), (2, 3), (4, 2)])
        v, sigma = random_asymptotic_instance(rng, e, l)
        w = losev_a_sigma(v, sigma, e)
        bad += theta(w, e) != kappa(w, e)
    ok = a == b == expected and not bad
    report(7, ok, f"a_sigma = {a}, extend(b_sigma) = {b}, theta != kappa on {bad}/100")


def test_criterion_8_fock_action(report):
    comm = check_fock_commutator(6)
    conj = check_fock_conjugation(0, 100)
    ok = comm.passed and conj.passed
    report(8, ok, f"commutator on {comm.checked} cases, conjugation on {conj.checked} cases")


def _timed(fn):
    t = time.perf_counter()
    fn()
    return time.perf_counter() - t
