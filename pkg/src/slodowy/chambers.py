"""Weyl/GIT chamber structure on character space and the flop graph.

Characters are written in fundamental-weight coordinates ``chi`` in Q^(m-1).
Lifting to level coordinates ``z`` (``z_i - z_{i+1} = chi_i``, ``z_m = 0``)
turns the symmetric group action into permutation of ``z``; a chamber is the
set where ``z`` has a fixed strict ordering, and its resolution label is the
flag type ``(a_sigma(1), ..., a_sigma(m))``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Sequence

from .errors import DegenerateAmbient, DimensionMismatch
from .partitions import Partition, dual, format_partition
from .slices import SlicePair, decompose_quiver

Composition = tuple[int, ...]


@dataclass(frozen=True)
class Chamber:
    perm: tuple[int, ...]  # 1-based; perm[k] is the index of the (k+1)-th largest z
    flag_type: Composition

    def to_json(self) -> dict:
        return {"perm": list(self.perm), "flag_type": list(self.flag_type)}


@dataclass(frozen=True)
class Wall:
    z: tuple[Fraction, ...]
    ties: tuple[tuple[int, int], ...]  # 1-based index pairs with equal z


@dataclass(frozen=True)
class FlopGraph:
    nodes: tuple
    edges: tuple

    def neighbors(self, node) -> list:
        return [b if a == node else a for a, b in self.edges if node in (a, b)]

    def degree(self, node) -> int:
        return sum(1 for e in self.edges if node in e)

    def is_connected(self) -> bool:
        if not self.nodes:
            return True
        adj = {n: [] for n in self.nodes}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {self.nodes[0]}
        todo = deque([self.nodes[0]])
        while todo:
            for nb in adj[todo.popleft()]:
                if nb not in seen:
                    seen.add(nb)
                    todo.append(nb)
        return len(seen) == len(self.nodes)

    def to_dot(self, name: str = "flops") -> str:
        lines = [f"graph {name} {{"]
        for n in self.nodes:
            lines.append(f'  "{node_label(n)}";')
        for a, b in self.edges:
            lines.append(f'  "{node_label(a)}" -- "{node_label(b)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "nodes": [node_label(n) for n in self.nodes],
            "edges": [[node_label(a), node_label(b)] for a, b in self.edges],
        }


def node_label(node) -> str:
    """``"2,3,1"`` for a flag type, ``"3,2,1|2,1"`` for a product node."""
    if node and isinstance(node[0], tuple):
        return "|".join(format_partition(c) for c in node)
    return format_partition(node)


def _dual_of(d: Partition) -> tuple[int, ...]:
    if d.is_trivial():
        raise DegenerateAmbient("DegenerateAmbient: d = [1,...,1] has no chamber structure")
    return tuple(dual(d))


def enumerate_chambers(d: Partition) -> list[Chamber]:
    """All ``m!`` Weyl chambers, in lexicographic order of the permutation."""
    a = _dual_of(d)
    m = len(a)
    return [
        Chamber(perm, tuple(a[i - 1] for i in perm))
        for perm in permutations(range(1, m + 1))
    ]


def level_coordinates(chi: Sequence) -> tuple[Fraction, ...]:
    z = [Fraction(0)]
    for c in reversed(chi):
        z.append(z[-1] + Fraction(c))
    return tuple(reversed(z))


def weyl_reflect(chi: Sequence, i: int) -> tuple[Fraction, ...]:
    """Simple reflection ``s_i`` (1-based) on fundamental-weight coordinates."""
    chi = [Fraction(c) for c in chi]
    if not 1 <= i <= len(chi):
        raise DimensionMismatch(f"no simple reflection s_{i} in rank {len(chi)}")
    c = chi[i - 1]
    out = list(chi)
    out[i - 1] = -c
    if i >= 2:
        out[i - 2] += c
    if i < len(chi):
        out[i] += c
    return tuple(out)


def locate(chi: Sequence, d: Partition) -> Chamber | Wall:
    """Chamber containing ``chi``, or :class:`Wall` when ``chi`` is not generic."""
    a = _dual_of(d)
    m = len(a)
    if len(chi) != m - 1:
        raise DimensionMismatch(f"DimensionMismatch: character has {len(chi)} coordinates, expected {m - 1}")
    z = level_coordinates(chi)
    ties = tuple((i + 1, j + 1) for i in range(m) for j in range(i + 1, m) if z[i] == z[j])
    if ties:
        return Wall(z, ties)
    perm = tuple(sorted(range(1, m + 1), key=lambda k: -z[k - 1]))
    return Chamber(perm, tuple(a[i - 1] for i in perm))


def distinct_arrangements(items: Sequence[int]) -> list[Composition]:
    """Distinct orderings of a multiset, in decreasing lexicographic order."""
    counts: dict[int, int] = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    values = sorted(counts, reverse=True)
    out: list[Composition] = []
    prefix: list[int] = []

    def rec(left: int) -> None:
        if not left:
            out.append(tuple(prefix))
            return
        for x in values:
            if counts[x]:
                counts[x] -= 1
                prefix.append(x)
                rec(left - 1)
                prefix.pop()
                counts[x] += 1

    rec(len(items))
    return out


def flag_types(d: Partition) -> list[Composition]:
    """Distinct chamber labels; one per resolution."""
    return distinct_arrangements(_dual_of(d))


def _adjacent_swaps(t: Composition) -> list[Composition]:
    out = []
    for i in range(len(t) - 1):
        if t[i] != t[i + 1]:
            s = list(t)
            s[i], s[i + 1] = s[i + 1], s[i]
            out.append(tuple(s))
    return out


def flop_graph(d: Partition) -> FlopGraph:
    """Distinct flag types, joined when one wall separates their chambers."""
    nodes = flag_types(d)
    edges = set()
    for t in nodes:
        for s in _adjacent_swaps(t):
            edges.add((max(t, s), min(t, s)))
    return FlopGraph(tuple(nodes), tuple(sorted(edges, reverse=True)))


@dataclass(frozen=True)
class SliceChambers:
    factors: tuple[Partition, ...]
    graph: FlopGraph

    @property
    def chambers(self) -> list[list[Chamber]]:
        """Per-factor Weyl chambers (``m_i!`` each, built on demand)."""
        return [enumerate_chambers(f) for f in self.factors]


def slice_chambers(sp: SlicePair) -> SliceChambers:
    """Product chamber structure over the factors of the slice."""
    factors = decompose_quiver(sp) if not sp.is_point() else []
    graphs = [flop_graph(f.d) for f in factors]
    nodes = tuple(product(*(g.nodes for g in graphs)))
    edges = []
    for node in nodes:
        for k, g in enumerate(graphs):
            for nb in g.neighbors(node[k]):
                other = node[:k] + (nb,) + node[k + 1 :]
                if node > other:
                    edges.append((node, other))
    return SliceChambers(
        tuple(f.d for f in factors),
        FlopGraph(nodes, tuple(sorted(edges, reverse=True))),
    )
