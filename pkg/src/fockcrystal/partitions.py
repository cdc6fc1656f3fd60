"""Partitions, charged multipartitions, boxes, contents and residues.

Partitions are plain tuples of positive integers in weakly decreasing order
(the infinitely many zero parts are implicit). A charged multipartition pairs
an l-tuple of such partitions with an l-tuple of integers.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]


class GrammarError(ValueError):
    """Malformed partition / multipartition / charge text."""

    def __init__(self, message: str, text: str, column: int):
        super().__init__(f"{message} at column {column}: {text!r}")
        self.text = text
        self.column = column


def partition(parts: Iterable[int] = ()) -> Partition:
    """Validate and normalise ``parts`` (trailing zeros are dropped)."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"parts must be positive: {p}")
    if any(p[k] < p[k + 1] for k in range(len(p) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {p}")
    return p


def part(p: Partition, k: int) -> int:
    """The k-th part (1-indexed), zero beyond the stored length."""
    return p[k - 1] if 1 <= k <= len(p) else 0


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > c) for c in range(p[0]))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


class BoxCoord(NamedTuple):
    a: int  # row
    b: int  # column
    j: int  # component, 1-based


@dataclass(frozen=True, order=True)
class ChargedMultipartition:
    parts: tuple[Partition, ...]
    charge: tuple[int, ...]

    def __post_init__(self):
        if len(self.parts) != len(self.charge):
            raise ValueError("multipartition and charge have different levels")
        if not self.parts:
            raise ValueError("level must be at least 1")

    @classmethod
    def make(cls, parts, charge) -> "ChargedMultipartition":
        return cls(tuple(partition(p) for p in parts), tuple(int(s) for s in charge))

    @classmethod
    def empty(cls, charge) -> "ChargedMultipartition":
        return cls(tuple(() for _ in charge), tuple(int(s) for s in charge))

    @property
    def level(self) -> int:
        return len(self.charge)

    @property
    def rank(self) -> int:
        return sum(sum(p) for p in self.parts)

    def is_empty(self) -> bool:
        return all(not p for p in self.parts)

    def boxes(self) -> Iterator[BoxCoord]:
        for j, p in enumerate(self.parts, 1):
            for a, row in enumerate(p, 1):
                for b in range(1, row + 1):
                    yield BoxCoord(a, b, j)

    def __str__(self) -> str:
        return f"{format_multipartition(self.parts)} {format_charge(self.charge)}"


def content(box: BoxCoord, charge) -> int:
    if not 1 <= box.j <= len(charge):
        raise IndexError(f"component {box.j} out of range for level {len(charge)}")
    return box.b - box.a + charge[box.j - 1]


def residue(box: BoxCoord, charge, e: int) -> int:
    if e < 2:
        raise ValueError(f"modulus must be >= 2, got {e}")
    # Python's % already lands in {0, ..., e-1} for negative contents.
    return content(box, charge) % e


def box_key(box: BoxCoord, charge) -> tuple[int, int]:
    """Sort key realising the box order: content first, then larger j first."""
    return (content(box, charge), -box.j)


def box_order_less(g: BoxCoord, h: BoxCoord, charge) -> bool:
    return box_key(g, charge) < box_key(h, charge)


def _all_addable(cmp: ChargedMultipartition) -> Iterator[BoxCoord]:
    for j, p in enumerate(cmp.parts, 1):
        for a in range(1, len(p) + 2):
            if a == 1 or part(p, a - 1) > part(p, a):
                yield BoxCoord(a, part(p, a) + 1, j)


def _all_removable(cmp: ChargedMultipartition) -> Iterator[BoxCoord]:
    for j, p in enumerate(cmp.parts, 1):
        for a in range(1, len(p) + 1):
            if p[a - 1] > part(p, a + 1):
                yield BoxCoord(a, p[a - 1], j)


def addable_boxes(cmp: ChargedMultipartition, i: int | None = None, e: int | None = None) -> list[BoxCoord]:
    """Addable boxes (of residue i when given), ascending in box order."""
    boxes = [g for g in _all_addable(cmp) if i is None or residue(g, cmp.charge, e) == i]
    return sorted(boxes, key=lambda g: box_key(g, cmp.charge))


def removable_boxes(cmp: ChargedMultipartition, i: int | None = None, e: int | None = None) -> list[BoxCoord]:
    boxes = [g for g in _all_removable(cmp) if i is None or residue(g, cmp.charge, e) == i]
    return sorted(boxes, key=lambda g: box_key(g, cmp.charge))


def add_box(cmp: ChargedMultipartition, box: BoxCoord) -> ChargedMultipartition:
    parts = list(cmp.parts)
    p = list(parts[box.j - 1])
    if box.a == len(p) + 1:
        p.append(0)
    p[box.a - 1] += 1
    parts[box.j - 1] = partition(p)
    return ChargedMultipartition(tuple(parts), cmp.charge)


def remove_box(cmp: ChargedMultipartition, box: BoxCoord) -> ChargedMultipartition:
    parts = list(cmp.parts)
    p = list(parts[box.j - 1])
    p[box.a - 1] -= 1
    parts[box.j - 1] = partition(p)
    return ChargedMultipartition(tuple(parts), cmp.charge)


def count_Ni(cmp: ChargedMultipartition, i: int, e: int) -> int:
    return len(addable_boxes(cmp, i, e)) - len(removable_boxes(cmp, i, e))


def _added_box(lam: ChargedMultipartition, mu: ChargedMultipartition, i: int, e: int) -> BoxCoord:
    if lam.charge != mu.charge or mu.rank != lam.rank + 1:
        raise ValueError("mu is not lambda plus one box")
    for g in addable_boxes(lam, i, e):
        if add_box(lam, g) == mu:
            return g
    raise ValueError(f"mu is not lambda plus one addable {i}-box")


def _count_relative(lam, mu, i, e, below: bool) -> int:
    g = _added_box(lam, mu, i, e)
    key = box_key(g, lam.charge)

    def side(h):
        k = box_key(h, lam.charge)
        return k < key if below else k > key

    return (sum(1 for h in addable_boxes(lam, i, e) if side(h))
            - sum(1 for h in removable_boxes(mu, i, e) if side(h)))


def count_Ni_less(lam: ChargedMultipartition, mu: ChargedMultipartition, i: int, e: int) -> int:
    """Addable i-boxes of lam below the added box minus removable i-boxes of mu below it."""
    return _count_relative(lam, mu, i, e, below=True)


def count_Ni_greater(lam: ChargedMultipartition, mu: ChargedMultipartition, i: int, e: int) -> int:
    return _count_relative(lam, mu, i, e, below=False)


def multipartitions_of(n: int, level: int) -> Iterator[tuple[Partition, ...]]:
    """All level-tuples of partitions of total rank n."""
    if level == 1:
        for p in partitions_of(n):
            yield (p,)
        return
    for k in range(n, -1, -1):
        for p in partitions_of(k):
            for rest in multipartitions_of(n - k, level - 1):
                yield (p,) + rest


def all_charged(charge, max_rank: int) -> Iterator[ChargedMultipartition]:
    charge = tuple(charge)
    for n in range(max_rank + 1):
        for mp in multipartitions_of(n, len(charge)):
            yield ChargedMultipartition(mp, charge)


# -- text grammar -----------------------------------------------------------

def format_partition(p: Partition) -> str:
    if not p:
        return "-"
    out = []
    k = 0
    while k < len(p):
        m = 1
        while k + m < len(p) and p[k + m] == p[k]:
            m += 1
        out.append(f"{p[k]}^{m}" if m > 1 else str(p[k]))
        k += m
    return ".".join(out)


def format_multipartition(parts) -> str:
    return "|".join(format_partition(p) for p in parts)


def format_charge(charge) -> str:
    return "(" + ",".join(str(s) for s in charge) + ")"


_PART_TOKEN = re.compile(r"(\d+)(?:\^(\d+))?")


def parse_partition(text: str, offset: int = 0) -> Partition:
    s = text.strip()
    lead = offset + len(text) - len(text.lstrip()) + 1
    if s in ("-", "", "∅"):
        return ()
    parts: list[int] = []
    col = lead
    for token in s.split("."):
        m = _PART_TOKEN.fullmatch(token)
        if not m:
            raise GrammarError(f"bad part {token!r}", text, col)
        size = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) else 1
        if size == 0:
            raise GrammarError("zero part", text, col)
        parts.extend([size] * mult)
        col += len(token) + 1
    try:
        return partition(parts)
    except ValueError as exc:
        raise GrammarError(str(exc), text, lead) from None


def parse_multipartition(text: str) -> tuple[Partition, ...]:
    out = []
    offset = 0
    for chunk in text.split("|"):
        try:
            out.append(parse_partition(chunk, offset))
        except GrammarError as exc:
            raise GrammarError(str(exc).split(" at column")[0], text, exc.column) from None
        offset += len(chunk) + 1
    return tuple(out)


def parse_charge(text: str) -> tuple[int, ...]:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise GrammarError("charge must be parenthesised", text, 1)
    body = s[1:-1]
    out = []
    col = 2
    for token in body.split(","):
        try:
            out.append(int(token.replace("−", "-")))
        except ValueError:
            raise GrammarError(f"bad charge entry {token!r}", text, col) from None
        col += len(token) + 1
    return tuple(out)


def parse_charged(mp_text: str, charge_text: str) -> ChargedMultipartition:
    mp = parse_multipartition(mp_text)
    ch = parse_charge(charge_text)
    if len(mp) != len(ch):
        raise GrammarError(f"level mismatch: {len(mp)} components, {len(ch)} charges", charge_text, 1)
    return ChargedMultipartition(mp, ch)
