import pytest

from fockcrystal.abacus import T
from fockcrystal.decomposition import (CHARGE_OUTSIDE_DOMAIN, CONDITION_1, CONDITION_2, OK,
                                       TripleDecomposition, decompose, enumerate_flotw,
                                       flotw_by_crystal, flotw_reason, iota,
                                       is_finite_dim_by_crystal, is_finite_dim_label, is_flotw)
from fockcrystal.partitions import all_charged, parse_charged

RANK3 = ["-|3 (0,1)", "1^2|1 (0,1)", "1^3|- (0,1)", "1|1^2 (0,1)",
         "1|2 (0,1)", "2.1|- (0,1)", "2|1 (0,1)", "3|- (0,1)"]


def test_decompose_example():
    d = decompose(parse_charged("3|3.1|1", "(-1,0,0)"), 2)
    assert d == TripleDecomposition((), (3, 1), (), (-1, 0, 0))


@pytest.mark.parametrize("e,charge", [(2, (0, 1, 1)), (3, (0, 2)), (2, (1, -2))])
def test_decompose_replays(e, charge):
    for v in all_charged(charge, 5):
        assert decompose(v, e).replay(e) == v


def test_iota_is_injective_with_flotw_labels():
    seen = {}
    for v in all_charged((0, 1), 5):
        lab = iota(v, 3)
        assert is_flotw(lab.flotw_l, 3)
        assert is_flotw(lab.flotw_e, 2)
        assert seen.setdefault(lab, v) == v


def test_flotw_rank_three():
    assert [str(v) for v in enumerate_flotw(4, (0, 1), 3)] == RANK3


@pytest.mark.parametrize("e,charge", [(4, (0, 1)), (2, (0, 1, 1)), (2, (0, 2)), (3, (0, 0, 3))])
def test_flotw_equals_crystal_component(e, charge):
    for n in range(5):
        assert enumerate_flotw(e, charge, n) == flotw_by_crystal(e, charge, n)


def test_reason_codes():
    assert flotw_reason(parse_charged("1|-", "(0,1)"), 4) == OK
    assert flotw_reason(parse_charged("-|1", "(1,0)"), 4) == CHARGE_OUTSIDE_DOMAIN
    assert flotw_reason(parse_charged("-|1", "(0,0)"), 4) == CONDITION_1
    assert flotw_reason(parse_charged("1^2|-", "(0,0)"), 2) == CONDITION_2


def test_enumerate_outside_domain_raises():
    with pytest.raises(ValueError):
        enumerate_flotw(4, (0, 7), 2)


def test_finite_dim_criterion():
    for v in all_charged((0, 1, 1), 5):
        assert is_finite_dim_label(v, 2) == is_finite_dim_by_crystal(v, 2)
    assert is_flotw(T(parse_charged("-|-", "(0,1)"), 3), 2)
