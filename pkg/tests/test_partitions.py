import pytest
from hypothesis import given

from fockcrystal.partitions import (BoxCoord, ChargedMultipartition, GrammarError, conjugate,
                                    content, format_charge, format_multipartition,
                                    multipartitions_of, parse_charge, parse_charged,
                                    partitions_of, residue)

from conftest import charged, partitions


def test_partition_counts_match_euler():
    assert [sum(1 for _ in partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_bipartition_counts():
    assert [sum(1 for _ in multipartitions_of(n, 2)) for n in range(5)] == [1, 2, 5, 10, 20]


@given(partitions())
def test_conjugate_is_an_involution(p):
    assert conjugate(conjugate(p)) == p
    assert sum(conjugate(p)) == sum(p)


@given(charged())
def test_text_round_trip(v):
    assert parse_charged(format_multipartition(v.parts), format_charge(v.charge)) == v


def test_exponent_notation():
    v = parse_charged("2^2.1^3|-", "(0,1)")
    assert v.parts == ((2, 2, 1, 1, 1), ())
    assert str(v) == "2^2.1^3|- (0,1)"


@pytest.mark.parametrize("text,col", [("3.x|1", 3), ("3.1|1.2", 5), ("2^|1", 1)])
def test_grammar_errors_report_a_column(text, col):
    with pytest.raises(GrammarError) as info:
        parse_charged(text, "(0,0)")
    assert info.value.column == col


def test_bad_charge_is_rejected():
    with pytest.raises(GrammarError):
        parse_charge("(0,,1)")


def test_level_mismatch_is_rejected():
    with pytest.raises(ValueError):
        parse_charged("1|1", "(0,1,2)")


def test_content_and_residue():
    box = BoxCoord(2, 3, 1)
    assert content(box, (5, 0)) == 6
    assert residue(box, (5, 0), 4) == 2


def test_rank_and_empty():
    v = ChargedMultipartition.empty((0, 3))
    assert v.rank == 0 and v.is_empty and v.level == 2
