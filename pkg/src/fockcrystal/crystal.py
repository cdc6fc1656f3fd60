"""Kashiwara crystal of the Fock space and its level-rank dual.

The e-crystal acts on l-partitions by the i-word rule. The dual l-crystal is
the same rule applied to the conjugated e-partition T|lam, s> with residues
taken mod l, transported back with T^{-1}.
"""
from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Literal, NamedTuple

from .abacus import T, T_inv
from .partitions import (BoxCoord, ChargedMultipartition, add_box, addable_boxes,
                         box_key, format_charge, format_multipartition, remove_box,
                         removable_boxes)

Kind = Literal["e", "l", "heis"]

DEFAULT_MAX_NODES = 10**6


class Sign(NamedTuple):
    sign: str  # "+" addable, "-" removable
    box: BoxCoord


SignWord = tuple[Sign, ...]


def i_word(cmp: ChargedMultipartition, i: int, e: int) -> SignWord:
    if not 0 <= i < e:
        raise ValueError(f"residue {i} out of range for modulus {e}")
    signs = [Sign("+", g) for g in addable_boxes(cmp, i, e)]
    signs += [Sign("-", g) for g in removable_boxes(cmp, i, e)]
    signs.sort(key=lambda s: box_key(s.box, cmp.charge))
    return tuple(signs)


def reduce_word(word: SignWord) -> SignWord:
    """Cancel (-+) pairs until the word reads (+)^a (-)^b."""
    stack: list[Sign] = []
    for s in word:
        if s.sign == "+" and stack and stack[-1].sign == "-":
            stack.pop()
        else:
            stack.append(s)
    return tuple(stack)


def word_string(word: SignWord) -> str:
    return "".join(s.sign for s in word)


def reduced_words(cmp: ChargedMultipartition, e: int) -> list[str]:
    return [word_string(reduce_word(i_word(cmp, i, e))) for i in range(e)]


def eps_phi(cmp: ChargedMultipartition, i: int, e: int) -> tuple[int, int]:
    w = reduce_word(i_word(cmp, i, e))
    minus = sum(1 for s in w if s.sign == "-")
    return minus, len(w) - minus


@lru_cache(maxsize=1 << 18)
def f_tilde(cmp: ChargedMultipartition, i: int, e: int) -> ChargedMultipartition | None:
    """Add the good addable i-box: the rightmost + of the reduced word."""
    plus = [s for s in reduce_word(i_word(cmp, i, e)) if s.sign == "+"]
    return add_box(cmp, plus[-1].box) if plus else None


@lru_cache(maxsize=1 << 18)
def e_tilde(cmp: ChargedMultipartition, i: int, e: int) -> ChargedMultipartition | None:
    """Remove the good removable i-box: the leftmost - of the reduced word."""
    minus = [s for s in reduce_word(i_word(cmp, i, e)) if s.sign == "-"]
    return remove_box(cmp, minus[0].box) if minus else None


def dual_f_tilde(cmp: ChargedMultipartition, j: int, e: int) -> ChargedMultipartition | None:
    l = cmp.level
    out = f_tilde(T(cmp, e), j, l)
    return None if out is None else T_inv(out, l)


def dual_e_tilde(cmp: ChargedMultipartition, j: int, e: int) -> ChargedMultipartition | None:
    l = cmp.level
    out = e_tilde(T(cmp, e), j, l)
    return None if out is None else T_inv(out, l)


class Step(NamedTuple):
    kind: str  # "e" or "l"
    color: int


CrystalPath = tuple[Step, ...]


def raise_op(cmp, step: Step, e: int):
    return e_tilde(cmp, step.color, e) if step.kind == "e" else dual_e_tilde(cmp, step.color, e)


def lower_op(cmp, step: Step, e: int):
    return f_tilde(cmp, step.color, e) if step.kind == "e" else dual_f_tilde(cmp, step.color, e)


def highest_weight(cmp: ChargedMultipartition, kind: str, e: int) -> tuple[ChargedMultipartition, CrystalPath]:
    """Raise with the smallest available color first, restarting after each step.

    Returns the highest weight vertex and the raising path; replaying the path
    backwards with lowering operators (see ``replay_down``) gives ``cmp`` back.
    """
    colors = range(e) if kind == "e" else range(cmp.level)
    path: list[Step] = []
    while True:
        for c in colors:
            step = Step(kind, c)
            up = raise_op(cmp, step, e)
            if up is not None:
                cmp = up
                path.append(step)
                break
        else:
            return cmp, tuple(path)


def replay_down(cmp: ChargedMultipartition, path: CrystalPath, e: int) -> ChargedMultipartition:
    for step in reversed(path):
        nxt = lower_op(cmp, step, e)
        if nxt is None:
            raise RuntimeError(f"lowering {step} undefined during path replay")
        cmp = nxt
    return cmp


def apply_lowering(cmp, colors, kind: str, e: int):
    """F_(c_1 ... c_r) = f_{c_1} ... f_{c_r}: the last color acts first."""
    for c in reversed(list(colors)):
        if cmp is None:
            return None
        cmp = lower_op(cmp, Step(kind, c), e)
    return cmp


# -- graphs ---------------------------------------------------------------------

def node_key(cmp: ChargedMultipartition) -> tuple[str, tuple[int, ...]]:
    return (format_multipartition(cmp.parts), cmp.charge)


@dataclass
class CrystalGraph:
    nodes: set = field(default_factory=set)
    edges: set = field(default_factory=set)  # (src, dst, kind, color)
    partial: bool = False

    def sorted_nodes(self) -> list[ChargedMultipartition]:
        return sorted(self.nodes, key=node_key)

    def sorted_edges(self) -> list[tuple]:
        return sorted(self.edges, key=lambda x: (node_key(x[0]), node_key(x[1]), x[2], x[3]))

    def nodes_of_rank(self, n: int) -> list[ChargedMultipartition]:
        return [v for v in self.sorted_nodes() if v.rank == n]

    def to_json(self) -> str:
        ids = {v: k for k, v in enumerate(self.sorted_nodes())}
        data = {
            "nodes": [{"id": ids[v], "mp": format_multipartition(v.parts),
                       "charge": list(v.charge), "rank": v.rank} for v in self.sorted_nodes()],
            "edges": [{"src": ids[a], "dst": ids[b], "kind": k, "color": c}
                      for a, b, k, c in self.sorted_edges()],
            "partial": self.partial,
        }
        return json.dumps(data, indent=2, sort_keys=True)

    def to_dot(self) -> str:
        style = {"e": "solid", "l": "dashed", "heis": "bold"}
        ids = {v: k for k, v in enumerate(self.sorted_nodes())}
        lines = ["digraph crystal {", "  node [shape=box, fontname=monospace];"]
        for v in self.sorted_nodes():
            lines.append(f'  n{ids[v]} [label="{format_multipartition(v.parts)} {format_charge(v.charge)}"];')
        for a, b, k, c in self.sorted_edges():
            lines.append(f'  n{ids[a]} -> n{ids[b]} [label="{c}", style={style.get(k, "solid")}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def export_graph(g: CrystalGraph, fmt: str) -> bytes:
    if fmt == "dot":
        return g.to_dot().encode()
    if fmt == "json":
        return g.to_json().encode()
    raise ValueError(f"unknown graph format {fmt!r}")


def max_nodes_default() -> int:
    return int(os.environ.get("FOCK_CRYSTAL_MAX_NODES", DEFAULT_MAX_NODES))


def view_rank(cmp: ChargedMultipartition, kind: str, e: int) -> int:
    return cmp.rank if kind == "e" else T(cmp, e).rank


def crystal_component(start: ChargedMultipartition, kind: str, e: int, max_rank: int,
                      max_nodes: int | None = None) -> CrystalGraph:
    """Breadth-first closure of ``start`` under lowering operators.

    ``max_rank`` bounds the rank of the view the crystal acts on: the l-view
    for the e-crystal, the e-view for the dual l-crystal.
    """
    if max_nodes is None:
        max_nodes = max_nodes_default()
    if view_rank(start, kind, e) > max_rank:
        raise ValueError("start vertex exceeds max_rank")
    colors = range(e) if kind == "e" else range(start.level)
    g = CrystalGraph(nodes={start})
    frontier = deque([start])
    while frontier:
        v = frontier.popleft()
        for c in colors:
            w = lower_op(v, Step(kind, c), e)
            if w is None or view_rank(w, kind, e) > max_rank:
                continue
            g.edges.add((v, w, kind, c))
            if w not in g.nodes:
                if len(g.nodes) >= max_nodes:
                    g.partial = True
                    return g
                g.nodes.add(w)
                frontier.append(w)
    return g
