"""Finite crystal graphs: generation, axiom and morphism checks, export.

A *family* bundles the crystal structure of one kind of element
(tableaux over ``[n]``, or Lusztig data for a fixed quiver).  Graphs are
built by breadth-first closure under the lowering operators.
"""
from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterator, Sequence

from .lusztig import (
    LusztigDatum,
    Quiver,
    apply_direct,
    apply_tensor,
    epsilon_direct,
    pairing,
    tensor_epsilon,
)
from .tableaux import NEG_INF, UNBARRED, Alphabet, Tableau, highest_weight_tableau, normalize_partition

DEFAULT_MAX_NODES = 10**6
MAX_NODES_ENV = "LUSZTIG_MAX_NODES"


class GraphTooLarge(RuntimeError):
    pass


def max_nodes_default() -> int:
    raw = os.environ.get(MAX_NODES_ENV)
    return int(raw) if raw else DEFAULT_MAX_NODES


class TableauFamily:
    """Semistandard tableaux over ``[n]`` with the reading-word crystal."""

    def __init__(self, n: int):
        self.n = n
        self.indices = tuple(range(1, n))

    def weight(self, x: Tableau) -> tuple[int, ...]:
        return x.weight()

    def stats(self, x: Tableau, i: int) -> tuple[float, float]:
        return x.stats(i)

    def apply(self, x: Tableau, i: int, direction: str) -> Tableau | None:
        return x.apply(i, direction)

    def grade(self, x: Tableau) -> int | None:
        return None

    def to_json(self, x: Tableau):
        return [list(r) for r in x.rows]


class DatumFamily:
    """Lusztig data for one quiver; ``route`` picks the operator implementation."""

    def __init__(self, quiver: Quiver, route: str = "direct"):
        if route not in ("direct", "tensor"):
            raise ValueError(f"unknown route {route!r}")
        self.quiver = quiver
        self.route = route
        self.n = quiver.n
        self.indices = tuple(quiver.indices)

    def weight(self, x: LusztigDatum) -> tuple[int, ...]:
        return x.weight()

    def stats(self, x: LusztigDatum, i: int) -> tuple[float, float]:
        if self.route == "tensor":
            return tensor_epsilon(x, i)
        e = epsilon_direct(x, i)
        return e, pairing(x.weight(), i) + e

    def apply(self, x: LusztigDatum, i: int, direction: str) -> LusztigDatum | None:
        op = apply_tensor if self.route == "tensor" else apply_direct
        return op(x, i, direction)

    def grade(self, x: LusztigDatum) -> int:
        return x.total()

    def to_json(self, x: LusztigDatum):
        return x.to_json()["c"]


@dataclass
class CrystalGraph:
    highest: Hashable
    nodes: list = field(default_factory=list)
    edges: list[tuple[int, int, int]] = field(default_factory=list)  # (src, i, dst) by node index
    index: dict = field(default_factory=dict)
    truncated: bool = False

    def __len__(self):
        return len(self.nodes)

    def __contains__(self, x):
        return x in self.index

    def node_set(self) -> frozenset:
        return frozenset(self.nodes)

    def edge_set(self) -> frozenset:
        return frozenset((self.nodes[s], i, self.nodes[t]) for s, i, t in self.edges)


def generate(start, family, depth: int | None = None, max_nodes: int | None = None,
             index_order: Sequence[int] | None = None) -> CrystalGraph:
    """Breadth-first closure of ``start`` under the lowering operators.

    ``depth`` bounds ``family.grade`` (the coordinate sum for Lusztig data)
    or, for families without a grade, the number of lowering steps.  Edges
    leaving the truncation are dropped and the graph is marked truncated.
    """
    cap = max_nodes_default() if max_nodes is None else max_nodes
    order = tuple(family.indices) if index_order is None else tuple(index_order)
    g = CrystalGraph(highest=start)
    g.nodes.append(start)
    g.index[start] = 0
    level = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        src = g.index[x]
        for i in order:
            y = family.apply(x, i, "lower")
            if y is None:
                continue
            if depth is not None:
                grade = family.grade(y)
                if (grade if grade is not None else level[x] + 1) > depth:
                    g.truncated = True
                    continue
            dst = g.index.get(y)
            if dst is None:
                if len(g.nodes) >= cap:
                    raise GraphTooLarge(f"more than {cap} nodes")
                dst = len(g.nodes)
                g.nodes.append(y)
                g.index[y] = dst
                level[y] = level[x] + 1
                queue.append(y)
            g.edges.append((src, i, dst))
    return g


def highest_weight_graph(shape: Sequence[int], n: int, **kwargs) -> CrystalGraph:
    """All of ``B(lambda)`` realized on tableaux over ``[n]``."""
    lam = normalize_partition(shape)
    if len(lam) > n:
        raise ValueError(f"shape {lam} has more than {n} rows")
    return generate(highest_weight_tableau(lam, Alphabet(UNBARRED, n)), TableauFamily(n), **kwargs)


def infinity_graph(quiver: Quiver, depth: int, route: str = "direct", **kwargs) -> CrystalGraph:
    """``B(infinity)`` on Lusztig data, truncated at coordinate sum ``depth``."""
    fam = DatumFamily(quiver, route)
    return generate(LusztigDatum.zero(quiver), fam, depth=depth, **kwargs)


# --------------------------------------------------------------------------
# checks
# --------------------------------------------------------------------------

def _alpha(i: int, n: int) -> tuple[int, ...]:
    a = [0] * n
    a[i - 1], a[i] = 1, -1
    return tuple(a)


def _add(u, v, sign=1):
    return tuple(a + sign * b for a, b in zip(u, v))


def check_axioms(g: CrystalGraph, family) -> list[str]:
    """Node-by-node crystal axioms; returns human-readable violations."""
    out: list[str] = []
    n = family.n
    for x in g.nodes:
        wt = family.weight(x)
        for i in family.indices:
            eps, phi = family.stats(x, i)
            if phi != pairing(wt, i) + eps:
                out.append(f"{x}: phi_{i} != <wt,h_{i}> + eps_{i}")
            up = family.apply(x, i, "raise")
            down = family.apply(x, i, "lower")
            if phi == NEG_INF and (up is not None or down is not None):
                out.append(f"{x}: operator {i} defined although phi = -inf")
            if up is not None:
                e2, p2 = family.stats(up, i)
                if (e2, p2) != (eps - 1, phi + 1) or family.weight(up) != _add(wt, _alpha(i, n)):
                    out.append(f"{x}: raise_{i} breaks eps/phi/wt")
                if family.apply(up, i, "lower") != x:
                    out.append(f"{x}: lower_{i}(raise_{i}) is not the identity")
            elif eps not in (0, NEG_INF):
                out.append(f"{x}: raise_{i} is zero but eps_{i} = {eps}")
            if down is not None:
                e2, p2 = family.stats(down, i)
                if (e2, p2) != (eps + 1, phi - 1) or family.weight(down) != _add(wt, _alpha(i, n), -1):
                    out.append(f"{x}: lower_{i} breaks eps/phi/wt")
                if family.apply(down, i, "raise") != x:
                    out.append(f"{x}: raise_{i}(lower_{i}) is not the identity")
    return out


def check_morphism(g: CrystalGraph, source, target, mapping: Callable,
                   shift: Sequence[int] | None = None, injective: bool = True) -> list[str]:
    """Violations of ``mapping`` being a crystal morphism on the nodes of ``g``.

    The source is taken tensored with ``T_shift``: weights move by ``shift``,
    ``eps`` is unchanged and ``phi`` moves by ``<shift, h_i>``.
    """
    n = source.n
    shift = tuple(shift) if shift is not None else (0,) * n
    out: list[str] = []
    images = {x: mapping(x) for x in g.nodes}
    if injective:
        seen: dict = {}
        for x, y in images.items():
            if y in seen:
                out.append(f"{x} and {seen[y]} have the same image")
            seen[y] = x
    for x, y in images.items():
        if target.weight(y) != _add(source.weight(x), shift):
            out.append(f"{x}: weight of image is {target.weight(y)}")
        for i in source.indices:
            eps, phi = source.stats(x, i)
            e2, p2 = target.stats(y, i)
            if e2 != eps or p2 != phi + pairing(shift, i):
                out.append(f"{x}: (eps_{i}, phi_{i}) = {(eps, phi)} but image has {(e2, p2)}")
            for direction in ("raise", "lower"):
                x2 = source.apply(x, i, direction)
                if x2 is None:
                    continue
                y2 = images.get(x2)
                if y2 is None:
                    y2 = mapping(x2)
                if target.apply(y, i, direction) != y2:
                    out.append(f"{x}: {direction}_{i} does not commute with the map")
    return out


# --------------------------------------------------------------------------
# oracles
# --------------------------------------------------------------------------

def semistandard_tableaux(shape: Sequence[int], n: int) -> Iterator[Tableau]:
    """All semistandard tableaux of ``shape`` over ``[n]``, filled cell by cell."""
    lam = normalize_partition(shape)
    cells = [(r, c) for r, m in enumerate(lam) for c in range(m)]
    fill: dict[tuple[int, int], int] = {}
    alph = Alphabet(UNBARRED, n)

    def rec(k):
        if k == len(cells):
            yield Tableau.normal([[fill[(r, c)] for c in range(m)] for r, m in enumerate(lam)], alph)
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, fill[(r, c - 1)])
        if r > 0:
            lo = max(lo, fill[(r - 1, c)] + 1)
        for v in range(lo, n + 1):
            fill[(r, c)] = v
            yield from rec(k + 1)
        fill.pop((r, c), None)

    yield from rec(0)


# --------------------------------------------------------------------------
# export
# --------------------------------------------------------------------------

def _label(family, x) -> str:
    return json.dumps(family.to_json(x), separators=(",", ":"))


def to_json(g: CrystalGraph, family) -> dict:
    return {
        "nodes": [{"element": family.to_json(x), "weight": list(family.weight(x))} for x in g.nodes],
        "edges": [[s, i, t] for s, i, t in g.edges],
        "truncated": g.truncated,
    }


def to_dot(g: CrystalGraph, family) -> str:
    lines = ["digraph crystal {"]
    for k, x in enumerate(g.nodes):
        label = f"{_label(family, x)}\\nwt={list(family.weight(x))}".replace('"', '\\"')
        lines.append(f'  n{k} [label="{label}"];')
    for s, i, t in g.edges:
        lines.append(f'  n{s} -> n{t} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines)
