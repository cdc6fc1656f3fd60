from hypothesis import given

from fockcrystal.abacus import (T, T_inv, TripleVertex, abacus_from_charged, charged_from_abacus,
                                e_core_and_quotient, from_one_view, in_fundamental_domain,
                                to_one_view)
from fockcrystal.partitions import parse_charged

from conftest import charged


def test_indexation_example():
    v = parse_charged("5.1|3.1|1", "(0,-1,1)")
    assert T(v, 4) == parse_charged("1^5|3|-|1", "(-1,-1,1,1)")


def test_one_view_examples():
    assert to_one_view(parse_charged("3|3.1|1", "(-1,0,0)"), 2) == parse_charged("10.8.4.2", "(-1)")
    tv = TripleVertex.from_e(parse_charged("2^2.1|2.1^2", "(0,1)"), 3)
    assert tv.l_view == parse_charged("2|2.1|1", "(-1,0,0)")
    assert tv.one_view == parse_charged("6^2.4.2", "(-1)")


@given(charged())
def test_abacus_round_trip(v):
    assert charged_from_abacus(abacus_from_charged(v)) == v
    assert charged_from_abacus(abacus_from_charged(v, pad=3)) == v


@given(charged(), charged(levels=(1,)))
def test_level_rank_round_trip(v, w):
    for e in (2, 3, 4):
        assert T_inv(T(v, e), v.level) == v
        assert from_one_view(to_one_view(v, e), e, v.level) == v
    tv = TripleVertex.from_l(v, 3)
    assert TripleVertex.from_e(tv.e_view, v.level) == tv


@given(charged(levels=(1,), max_len=4, max_part=6))
def test_core_plus_quotient_rank(v):
    (lam,), (s,) = v.parts, v.charge
    for e in (2, 3):
        core, quot = e_core_and_quotient(lam, s, e)
        assert sum(core) + e * quot.rank == sum(lam)


def test_fundamental_domain_is_closed():
    assert in_fundamental_domain((0, 1), 4)
    assert in_fundamental_domain((0, 4), 4)
    assert not in_fundamental_domain((0, 5), 4)
    assert not in_fundamental_domain((1, 0), 4)


def test_render_ascii():
    text = abacus_from_charged(parse_charged("1|-", "(0,0)")).render(ascii=True)
    assert "o" in text and "." in text and "●" not in text
