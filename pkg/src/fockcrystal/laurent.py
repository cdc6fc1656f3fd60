"""Sparse Laurent polynomials in one variable with integer coefficients."""
from __future__ import annotations


class LaurentInt:
    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        self._c = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentInt":
        return cls({exponent: coeff})

    @classmethod
    def coerce(cls, x) -> "LaurentInt":
        return x if isinstance(x, LaurentInt) else cls({0: int(x)})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentInt.coerce(other)
        return isinstance(other, LaurentInt) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        other = LaurentInt.coerce(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return LaurentInt(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentInt({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-LaurentInt.coerce(other))

    def __rsub__(self, other):
        return LaurentInt.coerce(other) - self

    def __mul__(self, other):
        other = LaurentInt.coerce(other)
        out: dict[int, int] = {}
        for a, x in self._c.items():
            for b, y in other._c.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return LaurentInt(out)

    __rmul__ = __mul__

    def bar(self) -> "LaurentInt":
        """q -> q^{-1}."""
        return LaurentInt({-k: v for k, v in self._c.items()})

    def low(self) -> int:
        return min(self._c)

    def high(self) -> int:
        return max(self._c)

    def exact_div(self, divisor: "LaurentInt") -> "LaurentInt":
        """Long division; raises ArithmeticError when the remainder is non-zero."""
        divisor = LaurentInt.coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        rem = LaurentInt(self._c)
        dh = divisor.high()
        lead = divisor._c[dh]
        quot: dict[int, int] = {}
        span = dh - divisor.low()
        while rem and rem.high() - rem.low() >= span:
            k = rem.high() - dh
            c, r = divmod(rem._c[rem.high()], lead)
            if r:
                raise ArithmeticError("non-integral quotient")
            quot[k] = c
            rem = rem - divisor * LaurentInt.monomial(k, c)
        if rem:
            raise ArithmeticError(f"non-zero remainder {rem}")
        return LaurentInt(quot)

    def __repr__(self):
        if not self._c:
            return "0"
        terms = []
        for k in sorted(self._c, reverse=True):
            v = self._c[k]
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono and abs(v) == 1:
                coef = "-" if v < 0 else ""
            else:
                coef = str(v)
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ")

    __str__ = __repr__


q = LaurentInt.monomial(1)
ONE = LaurentInt.monomial(0)


def quantum_integer(n: int) -> LaurentInt:
    """[n] = (q^n - q^{-n}) / (q - q^{-1})."""
    return (LaurentInt.monomial(n) - LaurentInt.monomial(-n)).exact_div(q - LaurentInt.monomial(-1))
