"""Tropical covers, real structures and the enhanced multiplicity.

Inner vertices are numbered 0..2r-1 in their left-to-right order; pair i is
(2i, 2i+1).  An edge is (source, target, weight) with source < target, where
the boundary points −∞ and +∞ are the sentinels LEFT and RIGHT.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import NamedTuple

from ..perms import Partition

LEFT = -1
RIGHT = 1 << 30

RED = "red"
BLUE = "blue"


class Edge(NamedTuple):
    source: int
    target: int
    weight: int


@dataclass(frozen=True)
class TropicalCover:
    n_vertices: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(Edge(*e) for e in self.edges))

    @property
    def r(self) -> int:
        return self.n_vertices // 2

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [(2 * i, 2 * i + 1) for i in range(self.r)]

    def is_left_end(self, i: int) -> bool:
        return self.edges[i].source == LEFT

    def is_right_end(self, i: int) -> bool:
        return self.edges[i].target == RIGHT

    def is_inner(self, i: int) -> bool:
        return not (self.is_left_end(i) or self.is_right_end(i))

    @property
    def inner_edges(self) -> list[int]:
        return [i for i in range(len(self.edges)) if self.is_inner(i)]

    @property
    def degree(self) -> int:
        return sum(e.weight for e in self.edges if e.source == LEFT)

    @property
    def genus(self) -> int:
        """First Betti number, assuming the graph is connected."""
        return len(self.inner_edges) - self.n_vertices + 1

    @property
    def left_profile(self) -> Partition:
        return Partition(tuple(e.weight for e in self.edges if e.source == LEFT))

    @property
    def right_profile(self) -> Partition:
        return Partition(tuple(e.weight for e in self.edges if e.target == RIGHT))

    def incident(self, v: int) -> list[int]:
        return [i for i, e in enumerate(self.edges) if v in (e.source, e.target)]

    @property
    def bridges(self) -> list[int]:
        """Edges joining the two vertices of one pair."""
        return [i for i, e in enumerate(self.edges)
                if e.source >= 0 and e.source % 2 == 0 and e.target == e.source + 1]

    def symmetric_pairs(self) -> list[tuple[int, int]]:
        """CF(φ): symmetric circles and forks, as pairs of edge indices."""
        groups = defaultdict(list)
        for i, e in enumerate(self.edges):
            groups[e].append(i)
        return [tuple(idx) for idx in groups.values() if len(idx) == 2]

    def is_connected(self) -> bool:
        parent = {}

        def find(x):
            parent.setdefault(x, x)
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        nodes = set(range(self.n_vertices))
        for i, e in enumerate(self.edges):
            a = e.source if e.source != LEFT else ("end", i)
            b = e.target if e.target != RIGHT else ("end", i)
            nodes.update((a, b))
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        return len({find(x) for x in nodes}) == 1

    def key(self) -> tuple:
        return (self.n_vertices, tuple(sorted(self.edges)))


def normalized_cover(n_vertices: int, edges) -> TropicalCover:
    return TropicalCover(n_vertices, tuple(sorted(Edge(*e) for e in edges)))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    clause: str | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_cover(c: TropicalCover, g: int, lam, mu) -> ValidationReport:
    """Check the cover axioms in order; report the first failing clause."""
    from ..perms import as_partition

    lam, mu = as_partition(lam), as_partition(mu)
    V = c.n_vertices
    for i, e in enumerate(c.edges):
        if e.weight < 1:
            return ValidationReport(False, "weight", f"edge {i} has weight {e.weight}")
        ok_src = e.source == LEFT or 0 <= e.source < V
        ok_tgt = e.target == RIGHT or 0 <= e.target < V
        if not (ok_src and ok_tgt) or (e.source == LEFT and e.target == RIGHT):
            return ValidationReport(False, "endpoints", f"edge {i} has bad endpoints {e}")
        if e.source != LEFT and e.target != RIGHT and e.source >= e.target:
            return ValidationReport(False, "orientation", f"edge {i} does not go left to right")
    if V % 2 or V == 0:
        return ValidationReport(False, "pairs", f"{V} inner vertices do not form pairs")
    for v in range(V):
        inc = c.incident(v)
        if len(inc) != 3:
            return ValidationReport(False, "3-valence", f"vertex {v} has valence {len(inc)}")
    for v in range(V):
        left = sum(e.weight for e in c.edges if e.target == v)
        right = sum(e.weight for e in c.edges if e.source == v)
        if left != right or left == 0:
            return ValidationReport(False, "balancing", f"vertex {v}: in {left}, out {right}")
    d = c.degree
    for cut in range(V):
        crossing = sum(e.weight for e in c.edges if e.source <= cut < e.target)
        if crossing != d:
            return ValidationReport(False, "degree", f"slice after vertex {cut} carries {crossing} != {d}")
    if not c.is_connected():
        return ValidationReport(False, "connectivity", "the graph is disconnected")
    if c.genus != g:
        return ValidationReport(False, "genus", f"first Betti number {c.genus} != {g}")
    if c.left_profile != lam:
        return ValidationReport(False, "left profile", f"{c.left_profile} != {lam}")
    if c.right_profile != mu:
        return ValidationReport(False, "right profile", f"{c.right_profile} != {mu}")
    return ValidationReport(True)


@dataclass(frozen=True)
class RealStructure:
    """Dotted symmetric pairs plus one colour per even component.

    ``colours`` maps each component (a frozenset of edge indices of the even,
    undotted subgraph) to red or blue, so a colour cannot vary inside one.
    """

    dotted: frozenset[tuple[int, int]]
    colours: tuple[tuple[frozenset[int], str], ...] = field(default=())

    @property
    def dotted_edges(self) -> frozenset[int]:
        return frozenset(i for pair in self.dotted for i in pair)

    def colour_map(self) -> dict[frozenset[int], str]:
        return dict(self.colours)

    def edge_colour(self, i: int) -> str | None:
        for comp, colour in self.colours:
            if i in comp:
                return colour
        return None

    @classmethod
    def from_edge_colours(cls, cover: TropicalCover, dotted, edge_colours: dict[int, str]) -> "RealStructure":
        """Build from per-edge colours; raises if a component is not monochrome."""
        dotted = frozenset(tuple(sorted(p)) for p in dotted)
        candidate = cls(dotted)
        comps = even_components(cover, candidate)
        assigned = []
        for comp in comps:
            seen = {edge_colours.get(i) for i in comp}
            if len(seen) != 1 or None in seen:
                raise ValueError(f"component {sorted(comp)} carries colours {seen}")
            assigned.append((comp, seen.pop()))
        assigned.sort(key=lambda item: sorted(item[0]))
        return cls(dotted, tuple(assigned))


def even_components(cover: TropicalCover, real: RealStructure) -> list[frozenset[int]]:
    """Connected components of the even-weight edges outside the dotted set."""
    dotted = real.dotted_edges
    even = [i for i, e in enumerate(cover.edges) if e.weight % 2 == 0 and i not in dotted]
    by_vertex = defaultdict(list)
    for i in even:
        e = cover.edges[i]
        for v in (e.source, e.target):
            if v not in (LEFT, RIGHT):
                by_vertex[v].append(i)
    comps, seen = [], set()
    for i in even:
        if i in seen:
            continue
        stack, comp = [i], set()
        while stack:
            j = stack.pop()
            if j in comp:
                continue
            comp.add(j)
            e = cover.edges[j]
            for v in (e.source, e.target):
                stack.extend(by_vertex.get(v, ()))
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def check_real_structure(cover: TropicalCover, real: RealStructure) -> str | None:
    """None if ρ is valid on φ, otherwise a description of the problem."""
    sym = {tuple(sorted(p)) for p in cover.symmetric_pairs()}
    for pair in real.dotted:
        if tuple(sorted(pair)) not in sym:
            return f"dotted {pair} is not a symmetric circle or fork"
    comps = set(even_components(cover, real))
    coloured = [comp for comp, _ in real.colours]
    if set(coloured) != comps or len(coloured) != len(comps):
        return "colours do not match the even components"
    if any(c not in (RED, BLUE) for _, c in real.colours):
        return "colours must be red or blue"
    return None


# derived sets ---------------------------------------------------------------

def dotted_circles(cover: TropicalCover, real: RealStructure) -> list[tuple[int, int]]:
    """C(φ) ∩ I_ρ: dotted pairs of parallel inner edges."""
    return sorted(p for p in real.dotted if all(cover.is_inner(i) for i in p))


def bridge_edges(cover: TropicalCover) -> list[int]:
    """E_b(φ)."""
    return cover.bridges


def even_inner_edges(cover: TropicalCover, real: RealStructure) -> list[int]:
    """E(I_ρ): even inner edges outside the dotted set."""
    dotted = real.dotted_edges
    return [i for i in cover.inner_edges
            if cover.edges[i].weight % 2 == 0 and i not in dotted]


def uneven_even_circles(cover: TropicalCover) -> list[int]:
    """C_n(φ): pairs whose two bridges are even of different weights."""
    out = []
    for p, (a, b) in enumerate(cover.pairs):
        ws = [cover.edges[i].weight for i in cover.bridges
              if cover.edges[i].source == a and cover.edges[i].target == b]
        if len(ws) == 2 and all(w % 2 == 0 for w in ws) and ws[0] != ws[1]:
            out.append(p)
    return out


def mult_enhanced(cover: TropicalCover, real: RealStructure) -> int:
    """2^(|E(I_ρ) ∖ E_b| + |C ∩ I_ρ| + |C_n|) times the weights of the dotted circles."""
    bridges = set(bridge_edges(cover))
    a = sum(1 for i in even_inner_edges(cover, real) if i not in bridges)
    circles = dotted_circles(cover, real)
    c = len(uneven_even_circles(cover))
    value = 2 ** (a + len(circles) + c)
    for p in circles:
        value *= cover.edges[p[0]].weight
    return value
