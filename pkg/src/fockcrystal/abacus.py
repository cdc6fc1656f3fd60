"""Beta-number abaci and Uglov's maps between the three indexations.

An abacus of level r is stored in charge-normal form: every position strictly
below ``window_low`` is implicitly a bead on every row, and ``rows[j-1]`` holds
the bead positions >= ``window_low`` on row j. Rows are numbered 1..r from
bottom to top.

Position arithmetic uses mathematical floor/ceiling, also for negative
positions (``-(-c // e)`` is ceil(c / e)).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import ChargedMultipartition, Partition, conjugate, partition


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True, eq=False)
class Abacus:
    window_low: int
    rows: tuple[frozenset[int], ...]

    def __post_init__(self):
        for row in self.rows:
            if row and min(row) < self.window_low:
                raise ValueError("stored bead below the window")

    @property
    def level(self) -> int:
        return len(self.rows)

    @property
    def beads(self) -> frozenset[tuple[int, int]]:
        return frozenset((j, c) for j, row in enumerate(self.rows, 1) for c in row)

    def has(self, j: int, c: int) -> bool:
        return c < self.window_low or c in self.rows[j - 1]

    def extended(self, low: int) -> "Abacus":
        """Same abacus with the window lowered to ``low`` (no-op if already lower)."""
        if low >= self.window_low:
            return self
        fill = frozenset(range(low, self.window_low))
        return Abacus(low, tuple(row | fill for row in self.rows))

    def charge(self) -> tuple[int, ...]:
        return tuple(self.window_low - 1 + len(row) for row in self.rows)

    def max_position(self) -> int:
        top = [max(row) for row in self.rows if row]
        return max(top) if top else self.window_low - 1

    def canonical(self) -> tuple:
        """Window-independent key: per row, the beads above the row's first gap."""
        out = []
        for row in self.rows:
            c = self.window_low
            while c in row:
                c += 1
            out.append((c, tuple(sorted(x for x in row if x > c))))
        return tuple(out)

    def __eq__(self, other):
        if not isinstance(other, Abacus):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def to_json(self) -> dict:
        return {"level": self.level, "window_low": self.window_low,
                "beads": sorted([j, c] for j, c in self.beads)}

    @classmethod
    def from_json(cls, data: dict) -> "Abacus":
        level = data["level"]
        rows = [set() for _ in range(level)]
        for j, c in data["beads"]:
            if c in rows[j - 1]:
                raise ValueError(f"duplicate bead ({j}, {c})")
            rows[j - 1].add(c)
        return cls(data["window_low"], tuple(frozenset(r) for r in rows))

    def render(self, lo: int | None = None, hi: int | None = None, ascii: bool = False,
               marks: dict | None = None) -> str:
        """Rows top first; ``marks`` maps (j, c) to a single label character."""
        bead, hole = ("o", ".") if ascii else ("●", "○")
        lo = self.window_low if lo is None else lo
        hi = self.max_position() + 1 if hi is None else hi
        width = max(len(str(lo)), len(str(hi))) + 1
        lines = []
        for j in range(self.level, 0, -1):
            cells = []
            for c in range(lo, hi + 1):
                ch = bead if self.has(j, c) else hole
                if marks and (j, c) in marks:
                    ch = marks[(j, c)]
                cells.append(ch.rjust(width))
            lines.append(f"{j:>3} " + "".join(cells))
        lines.append("    " + "".join(str(c).rjust(width) for c in range(lo, hi + 1)))
        return "\n".join(lines)


def left_justified(charge, low: int | None = None) -> Abacus:
    if low is None:
        low = min(charge) + 1
    return Abacus(low, tuple(frozenset(range(low, s + 1)) for s in charge))


def abacus_from_charged(cmp: ChargedMultipartition, pad: int = 0) -> Abacus:
    """beta_k = lambda_k + s_j - k + 1 for k >= 1 (zero parts included)."""
    low = min(s - len(p) for p, s in zip(cmp.parts, cmp.charge)) - pad
    rows = []
    for p, s in zip(cmp.parts, cmp.charge):
        row = set()
        k = 1
        while True:
            b = (p[k - 1] if k <= len(p) else 0) + s - k + 1
            if b < low:
                break
            row.add(b)
            k += 1
        rows.append(frozenset(row))
    return Abacus(low, tuple(rows))


def charged_from_abacus(ab: Abacus) -> ChargedMultipartition:
    parts, charge = [], []
    for row in ab.rows:
        s = ab.window_low - 1 + len(row)
        beads = sorted(row, reverse=True)
        parts.append(partition(b - (s - k + 1) for k, b in enumerate(beads, 1)))
        charge.append(s)
    return ChargedMultipartition(tuple(parts), tuple(charge))


def charged_partition(cmp: ChargedMultipartition) -> tuple[Partition, int]:
    if cmp.level != 1:
        raise ValueError("expected a level-1 charged partition")
    return cmp.parts[0], cmp.charge[0]


# -- Uglov's bijections ------------------------------------------------------
#
# tau^{-1}: rectangle R_k = rows 1..l x positions (k-1)e+1..ke is stacked into
# one-row positions (k-1)el+1..kel, row l first:
#   (j, c) -> (k-1)el + (l-j)e + r   with c = (k-1)e + r, 1 <= r <= e.

def tau_inv(ab: Abacus, e: int) -> Abacus:
    l = ab.level
    k0 = _ceil_div(ab.window_low, e)
    ab = ab.extended((k0 - 1) * e + 1)
    one = set()
    for j, row in enumerate(ab.rows, 1):
        for c in row:
            k = _ceil_div(c, e)
            r = c - (k - 1) * e
            one.add((k - 1) * e * l + (l - j) * e + r)
    return Abacus((k0 - 1) * e * l + 1, (frozenset(one),))


def tau(ab: Abacus, e: int, l: int) -> Abacus:
    if ab.level != 1:
        raise ValueError("tau expects a level-1 abacus")
    K0 = _ceil_div(ab.window_low, e * l)
    ab = ab.extended((K0 - 1) * e * l + 1)
    rows = [set() for _ in range(l)]
    for p in ab.rows[0]:
        K = _ceil_div(p, e * l)
        t = p - (K - 1) * e * l - 1  # 0 .. el-1
        j = l - t // e
        r = t % e + 1
        rows[j - 1].add((K - 1) * e + r)
    return Abacus((K0 - 1) * e + 1, tuple(frozenset(r) for r in rows))


def tau_dot(ab: Abacus, e: int) -> Abacus:
    """(1, c) -> ((-c) mod e + 1, ceil(c / e))."""
    if ab.level != 1:
        raise ValueError("tau_dot expects a level-1 abacus")
    K0 = _ceil_div(ab.window_low, e)
    ab = ab.extended((K0 - 1) * e + 1)
    rows = [set() for _ in range(e)]
    for c in ab.rows[0]:
        rows[(-c) % e].add(_ceil_div(c, e))
    return Abacus(K0, tuple(frozenset(r) for r in rows))


def tau_dot_inv(ab: Abacus) -> Abacus:
    e = ab.level
    one = {p * e - (i - 1) for i, row in enumerate(ab.rows, 1) for p in row}
    return Abacus((ab.window_low - 1) * e + 1, (frozenset(one),))


def conjugate_charged(lam: Partition, s: int) -> tuple[Partition, int]:
    return conjugate(lam), -s


def conjugate_multipartition(cmp: ChargedMultipartition) -> ChargedMultipartition:
    """Conjugate each component, reverse the order, negate and reverse the charge."""
    return ChargedMultipartition(tuple(conjugate(p) for p in reversed(cmp.parts)),
                                 tuple(-s for s in reversed(cmp.charge)))


def to_one_view(cmp: ChargedMultipartition, e: int) -> ChargedMultipartition:
    return charged_from_abacus(tau_inv(abacus_from_charged(cmp), e))


def from_one_view(one: ChargedMultipartition, e: int, l: int) -> ChargedMultipartition:
    return charged_from_abacus(tau(abacus_from_charged(one), e, l))


@lru_cache(maxsize=1 << 16)
def T(cmp: ChargedMultipartition, e: int) -> ChargedMultipartition:
    """l-partition |lam, s> to the conjugated e-partition |lam-dot', s-dot'>."""
    lam, s = charged_partition(to_one_view(cmp, e))
    lc, sc = conjugate_charged(lam, s)
    one = ChargedMultipartition((lc,), (sc,))
    return charged_from_abacus(tau_dot(abacus_from_charged(one), e))


@lru_cache(maxsize=1 << 16)
def T_inv(cmp_e: ChargedMultipartition, l: int) -> ChargedMultipartition:
    e = cmp_e.level
    one = charged_from_abacus(tau_dot_inv(abacus_from_charged(cmp_e)))
    lc, sc = conjugate_charged(*charged_partition(one))
    return from_one_view(ChargedMultipartition((lc,), (sc,)), e, l)


def e_core_and_quotient(lam: Partition, s: int, e: int) -> tuple[Partition, ChargedMultipartition]:
    """e-core of lam and its e-quotient as a charged e-partition (via tau_dot)."""
    ab = tau_dot(abacus_from_charged(ChargedMultipartition((lam,), (s,))), e)
    quotient = charged_from_abacus(ab)
    core_ab = tau_dot_inv(left_justified(quotient.charge, ab.window_low))
    core, _ = charged_partition(charged_from_abacus(core_ab))
    return core, quotient


def in_fundamental_domain(charge, modulus: int) -> bool:
    """s_1 <= ... <= s_r <= s_1 + modulus (the closed alcove)."""
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    ok = all(charge[k] <= charge[k + 1] for k in range(len(charge) - 1))
    return ok and charge[-1] <= charge[0] + modulus


@dataclass(frozen=True)
class TripleVertex:
    """One basis vector of the level-one Fock space in its three indexations."""
    l_view: ChargedMultipartition
    one_view: ChargedMultipartition
    e_view: ChargedMultipartition
    e: int
    l: int

    @classmethod
    def from_l(cls, cmp: ChargedMultipartition, e: int) -> "TripleVertex":
        return cls(cmp, to_one_view(cmp, e), T(cmp, e), e, cmp.level)._checked()

    @classmethod
    def from_one(cls, one: ChargedMultipartition, e: int, l: int) -> "TripleVertex":
        return cls.from_l(from_one_view(one, e, l), e)

    @classmethod
    def from_e(cls, cmp_e: ChargedMultipartition, l: int) -> "TripleVertex":
        return cls.from_l(T_inv(cmp_e, l), cmp_e.level)

    def _checked(self) -> "TripleVertex":
        if from_one_view(self.one_view, self.e, self.l) != self.l_view:
            raise ValueError("inconsistent window: one-view does not round trip")
        if T_inv(self.e_view, self.l) != self.l_view:
            raise ValueError("inconsistent window: e-view does not round trip")
        if sum(self.l_view.charge) != self.one_view.charge[0]:
            raise ValueError("level-one charge is not the sum of the multicharge")
        return self
