"""Chevalley action of U'_q(sl_e^) on a level-l Fock space, exact in q.

The same formulas serve the level-e Fock space of the dual algebra: call them
with the level-e multipartitions and ``modulus=l``. The dual variable p is never
substituted; it is just the formal variable of that second action.
"""
from __future__ import annotations

from .abacus import conjugate_multipartition
from .laurent import LaurentInt, quantum_integer
from .partitions import (ChargedMultipartition, add_box, addable_boxes, count_Ni,
                         count_Ni_greater, count_Ni_less, remove_box, removable_boxes)


class FockVector:
    """Finite formal sum of charged multipartitions with Laurent coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[ChargedMultipartition, LaurentInt] = {}
        for k, v in (terms or {}).items():
            self._add(k, LaurentInt.coerce(v))

    @classmethod
    def basis(cls, cmp: ChargedMultipartition) -> "FockVector":
        return cls({cmp: 1})

    def _add(self, key, coeff: LaurentInt):
        if self.terms and next(iter(self.terms)).charge != key.charge:
            raise ValueError("all terms of a Fock vector share one charge")
        total = self.terms.get(key, LaurentInt()) + coeff
        if total:
            self.terms[key] = total
        else:
            self.terms.pop(key, None)

    def __add__(self, other: "FockVector") -> "FockVector":
        out = FockVector(self.terms)
        for k, v in other.terms.items():
            out._add(k, v)
        return out

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scaled(LaurentInt.coerce(-1))

    def scaled(self, c: LaurentInt) -> "FockVector":
        return FockVector({k: v * c for k, v in self.terms.items()})

    def bar_conjugate(self) -> "FockVector":
        """Anti-linear conjugation: multipartitions conjugated, q -> q^{-1}."""
        return FockVector({conjugate_multipartition(k): v.bar() for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, FockVector) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({v}) |{k}>" for k, v in sorted(self.terms.items()))


def _check(i: int, modulus: int):
    if not 0 <= i < modulus:
        raise ValueError(f"residue {i} out of range for modulus {modulus}")


def chevalley_t(i: int, v: FockVector, modulus: int) -> FockVector:
    _check(i, modulus)
    return FockVector({k: c * LaurentInt.monomial(count_Ni(k, i, modulus)) for k, c in v.terms.items()})


def chevalley_t_inv(i: int, v: FockVector, modulus: int) -> FockVector:
    _check(i, modulus)
    return FockVector({k: c * LaurentInt.monomial(-count_Ni(k, i, modulus)) for k, c in v.terms.items()})


def chevalley_e(i: int, v: FockVector, modulus: int) -> FockVector:
    """Sum over removable i-boxes, coefficient q^{-N_i^<}."""
    _check(i, modulus)
    out = FockVector()
    for lam, c in v.terms.items():
        for g in removable_boxes(lam, i, modulus):
            mu = remove_box(lam, g)
            out._add(mu, c * LaurentInt.monomial(-count_Ni_less(mu, lam, i, modulus)))
    return out


def chevalley_f(i: int, v: FockVector, modulus: int) -> FockVector:
    """Sum over addable i-boxes, coefficient q^{N_i^>}."""
    _check(i, modulus)
    out = FockVector()
    for lam, c in v.terms.items():
        for g in addable_boxes(lam, i, modulus):
            mu = add_box(lam, g)
            out._add(mu, c * LaurentInt.monomial(count_Ni_greater(lam, mu, i, modulus)))
    return out


_DUAL = {"e": chevalley_e, "f": chevalley_f, "t": chevalley_t}


def chevalley_dual(kind: str, j: int, v: FockVector, l: int) -> FockVector:
    """Dual generators e-dot_j, f-dot_j, t-dot_j on level-e vectors (variable p)."""
    return _DUAL[kind](j, v, l)


def commutator_defect(cmp: ChargedMultipartition, i: int, j: int, modulus: int) -> FockVector:
    """(e_i f_j - f_j e_i)|cmp> minus delta_ij [N_i]|cmp>; zero when the relation holds."""
    v = FockVector.basis(cmp)
    lhs = chevalley_e(i, chevalley_f(j, v, modulus), modulus) - chevalley_f(j, chevalley_e(i, v, modulus), modulus)
    if i == j:
        lhs = lhs - v.scaled(quantum_integer(count_Ni(cmp, i, modulus)))
    return lhs


def conjugate_action_check(cmp: ChargedMultipartition, i: int, modulus: int) -> bool:
    """Action of e_{-i}, f_{-i} on the conjugate multipartition.

    Checks, exactly,
        e_{-i}|lam', s'> = q^{-N_i - 1} (e_i|lam, s>)'
        f_{-i}|lam', s'> = q^{ N_i - 1} (f_i|lam, s>)'
    with N_i = N_i(|lam, s>). Conjugation reverses the box order, which
    trades N^< for N^> and produces these offsets.
    """
    e = modulus
    n = count_Ni(cmp, i, e)
    v = FockVector.basis(cmp)
    w = FockVector.basis(conjugate_multipartition(cmp))
    j = (-i) % e
    ok_e = chevalley_e(j, w, e) == chevalley_e(i, v, e).bar_conjugate().scaled(LaurentInt.monomial(-n - 1))
    ok_f = chevalley_f(j, w, e) == chevalley_f(i, v, e).bar_conjugate().scaled(LaurentInt.monomial(n - 1))
    return ok_e and ok_f
