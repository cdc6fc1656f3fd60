import pytest
from hypothesis import given, strategies as st

from fockcrystal.fock import (FockVector, chevalley_e, chevalley_f, commutator_defect,
                              conjugate_action_check)
from fockcrystal.laurent import LaurentInt, quantum_integer
from fockcrystal.partitions import ChargedMultipartition, all_charged, parse_charged

laurents = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentInt)


@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert (a * b).bar() == a.bar() * b.bar()


@given(laurents, laurents)
def test_exact_division(a, b):
    if b:
        assert (a * b).exact_div(b) == a


def test_quantum_integer():
    q = LaurentInt.monomial(1)
    assert quantum_integer(2) == q + q.bar()
    assert quantum_integer(0) == LaurentInt()


def test_f_on_empty_vertex():
    v = FockVector.basis(ChargedMultipartition.empty((0, 1)))
    assert chevalley_f(0, v, 2) == FockVector.basis(parse_charged("1|-", "(0,1)"))
    assert not chevalley_e(0, v, 2)


@pytest.mark.parametrize("e,charge", [(2, (0, 1)), (3, (0, 0, 1)), (3, (2,))])
def test_commutator_small(e, charge):
    for v in all_charged(charge, 3):
        for i in range(e):
            for j in range(e):
                assert not commutator_defect(v, i, j, e)


@pytest.mark.parametrize("e", [2, 3])
def test_conjugate_action(e):
    for v in all_charged((0, 1), 3):
        for i in range(e):
            assert conjugate_action_check(v, i, e)
