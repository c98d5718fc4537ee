"""Simple undirected graphs and the structural operations used by the recurrences.

Vertices are always ``0..n-1``.  Every operation returns a new graph; removing
vertices re-labels the survivors in increasing order of their old index, so
derived graphs are reproducible.

Family labeling conventions (``build_family``):

=====================  =====================================================
family                 labels
=====================  =====================================================
path P_n               0-1-...-(n-1)
cycle C_n              i ~ i+1 (mod n)
star K_{1,n}           center 0, leaves 1..n
K_{n,n}                parts {0..n-1} and {n..2n-1}
windmill G_3^n         center 0, triangle k on {0, 2k+1, 2k+2}
pendant windmill G_n   windmill plus pendant 2n+1 attached to 0
fan F_{m,n}            independent part 0..m-1, path m..m+n-1
gem                    hub 0, path 1..n+1
gem plus edge          gem plus pendant n+2 attached to the hub
triangle on cycle      apex 0, cycle 1..n, apex joined to 1 and 2
wheel W_n              hub 0, rim cycle 1..n-1
windmill o K_t         block of windmill vertex v is v*t .. v*t+t-1
=====================  =====================================================
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..vertex_count-1``.

    ``edges`` holds pairs ``(u, v)`` with ``u < v``.
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {self.vertex_count} vertices")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls(vertex_count, frozenset(edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """Bitmask of N[v] for each vertex."""
        return tuple(
            (1 << v) | sum(1 << u for u in self.adjacency[v])
            for v in range(self.vertex_count)
        )

    def _check(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise IndexError(f"vertex {v} out of range for {self.vertex_count} vertices")

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def __repr__(self) -> str:
        return f"Graph(vertex_count={self.vertex_count}, edges={sorted(self.edges)})"


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    """Return ``N[v]``."""
    return g.neighbors(v) | {v}


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Induced subgraph on ``keep``, re-labeled in increasing old-index order."""
    kept = sorted(set(keep))
    for v in kept:
        g._check(v)
    index = {v: i for i, v in enumerate(kept)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph.from_edges(len(kept), edges)


def delete_vertex(g: Graph, v: int) -> Graph:
    g._check(v)
    return induced_subgraph(g, (u for u in range(g.vertex_count) if u != v))


def delete_closed_neighborhood(g: Graph, v: int) -> Graph:
    removed = closed_neighborhood(g, v)
    return induced_subgraph(g, (u for u in range(g.vertex_count) if u not in removed))


def add_clique(g: Graph, vertices: Iterable[int]) -> Graph:
    return Graph.from_edges(g.vertex_count, g.edges | set(combinations(sorted(vertices), 2)))


def contract_vertex(g: Graph, v: int) -> Graph:
    """``G/v``: make ``N(v)`` a clique, then delete ``v``."""
    return delete_vertex(add_clique(g, g.neighbors(v)), v)


def odot(g: Graph, u: int) -> Graph:
    """Remove every edge joining two neighbors of ``u``; ``u`` itself stays."""
    nbrs = g.neighbors(u)
    return Graph.from_edges(
        g.vertex_count, (e for e in g.edges if not (e[0] in nbrs and e[1] in nbrs))
    )


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.vertex_count
    edges = set(g1.edges) | {(u + shift, v + shift) for u, v in g2.edges}
    return Graph.from_edges(g1.vertex_count + g2.vertex_count, edges)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts (``g1`` first)."""
    union = disjoint_union(g1, g2)
    n1 = g1.vertex_count
    cross = {(u, n1 + v) for u in range(n1) for v in range(g2.vertex_count)}
    return Graph.from_edges(union.vertex_count, union.edges | cross)


def compose_clique(g: Graph, t: int) -> Graph:
    """Replace each vertex by a ``t``-clique; blocks of adjacent vertices are fully joined."""
    if t < 1:
        raise ValueError("clique size t must be at least 1")
    edges = set()
    for v in range(g.vertex_count):
        edges.update(combinations(range(v * t, v * t + t), 2))
    for u, v in g.edges:
        edges.update((u * t + i, v * t + j) for i in range(t) for j in range(t))
    return Graph.from_edges(g.vertex_count * t, edges)


# -- constructors -----------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(n: int) -> Graph:
    return Graph.from_edges(n + 1, ((0, i) for i in range(1, n + 1)))


def complete_bipartite(m: int, n: int) -> Graph:
    return join(empty_graph(m), empty_graph(n))


def dutch_windmill(n: int) -> Graph:
    return join(empty_graph(1), matching(n))


def matching(n: int) -> Graph:
    """``n`` disjoint copies of K_2."""
    return Graph.from_edges(2 * n, ((2 * k, 2 * k + 1) for k in range(n)))


def with_pendant(g: Graph, at: int = 0) -> Graph:
    n = g.vertex_count
    return Graph.from_edges(n + 1, g.edges | {(at, n)})


def pendant_dutch_windmill(n: int) -> Graph:
    return with_pendant(dutch_windmill(n))


def fan_graph(m: int, n: int) -> Graph:
    return join(empty_graph(m), path_graph(n))


def gem_graph(n: int) -> Graph:
    return join(empty_graph(1), path_graph(n + 1))


def gem_plus_edge(n: int) -> Graph:
    return with_pendant(gem_graph(n))


def triangle_on_cycle(n: int) -> Graph:
    cyc = join(empty_graph(1), cycle_graph(n))
    return Graph.from_edges(n + 1, {e for e in cyc.edges if e[0] != 0 or e[1] in (1, 2)})


def wheel_graph(n: int) -> Graph:
    if n < 4:
        raise ValueError("wheel W_n needs n >= 4")
    return join(empty_graph(1), cycle_graph(n - 1))


# -- families ---------------------------------------------------------------

class FamilyKind(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE_BIPARTITE_BALANCED = "knn"
    DUTCH_WINDMILL = "windmill"
    PENDANT_DUTCH_WINDMILL = "pendant-windmill"
    FAN = "fan"
    GEM = "gem"
    GEM_PLUS_EDGE = "gem-edge"
    TRIANGLE_ON_CYCLE = "triangle-cycle"
    WHEEL = "wheel"
    CLIQUE_COMPOSITION = "windmill-clique"


# (required parameters with their minimum values)
PARAM_RULES: dict[FamilyKind, dict[str, int]] = {
    FamilyKind.PATH: {"n": 1},
    FamilyKind.CYCLE: {"n": 3},
    FamilyKind.STAR: {"n": 1},
    FamilyKind.COMPLETE_BIPARTITE_BALANCED: {"n": 1},
    FamilyKind.DUTCH_WINDMILL: {"n": 1},
    FamilyKind.PENDANT_DUTCH_WINDMILL: {"n": 1},
    FamilyKind.FAN: {"m": 1, "n": 1},
    FamilyKind.GEM: {"n": 1},
    FamilyKind.GEM_PLUS_EDGE: {"n": 1},
    FamilyKind.TRIANGLE_ON_CYCLE: {"n": 3},
    FamilyKind.WHEEL: {"n": 4},
    FamilyKind.CLIQUE_COMPOSITION: {"n": 1, "t": 1},
}

_ALIASES = {
    "kn,n": FamilyKind.COMPLETE_BIPARTITE_BALANCED,
    "k_{n,n}": FamilyKind.COMPLETE_BIPARTITE_BALANCED,
    "bipartite": FamilyKind.COMPLETE_BIPARTITE_BALANCED,
    "friendship": FamilyKind.DUTCH_WINDMILL,
    "dutch-windmill": FamilyKind.DUTCH_WINDMILL,
    "gem-plus-edge": FamilyKind.GEM_PLUS_EDGE,
    "triangle-on-cycle": FamilyKind.TRIANGLE_ON_CYCLE,
}


@dataclass(frozen=True)
class FamilySpec:
    """A named parametric graph family instance, e.g. ``fan:m=2,n=10``."""

    kind: FamilyKind
    params: Mapping[str, int]

    def __post_init__(self):
        rules = PARAM_RULES[self.kind]
        params = dict(self.params)
        if set(params) != set(rules):
            raise ValueError(
                f"{self.kind.value} expects parameters {sorted(rules)}, got {sorted(params)}"
            )
        for name, lowest in rules.items():
            value = params[name]
            if not isinstance(value, int) or value < lowest:
                raise ValueError(f"{self.kind.value}: {name} must be an integer >= {lowest}")
        object.__setattr__(self, "params", dict(sorted(params.items())))

    def __hash__(self):
        return hash((self.kind, tuple(self.params.items())))

    def __getitem__(self, name: str) -> int:
        return self.params[name]

    @property
    def label(self) -> str:
        return f"{self.kind.value}:" + ",".join(f"{k}={v}" for k, v in self.params.items())

    def __str__(self) -> str:
        return self.label

    def with_params(self, **changes: int) -> FamilySpec:
        return FamilySpec(self.kind, {**self.params, **changes})


def parse_kind(name: str) -> FamilyKind:
    key = name.strip().lower()
    if key in _ALIASES:
        return _ALIASES[key]
    try:
        return FamilyKind(key)
    except ValueError:
        known = sorted({k.value for k in FamilyKind} | set(_ALIASES))
        raise ValueError(f"unknown family {name!r}; known: {', '.join(known)}") from None


_PARAM_RE = re.compile(r"^\s*([a-z]+)\s*=\s*(-?\d+)\s*$")


def parse_family(text: str) -> FamilySpec:
    """Parse ``"kind:name=value,..."`` (for example ``"fan:m=2,n=10"``)."""
    kind_text, sep, param_text = text.partition(":")
    if not sep:
        raise ValueError(f"family string {text!r} lacks ':'")
    params = {}
    for item in filter(None, (p.strip() for p in param_text.split(","))):
        match = _PARAM_RE.match(item)
        if not match:
            raise ValueError(f"bad parameter {item!r} in {text!r}")
        params[match.group(1)] = int(match.group(2))
    return FamilySpec(parse_kind(kind_text), params)


def build_family(spec: FamilySpec) -> Graph:
    p = spec.params
    kind = spec.kind
    if kind is FamilyKind.PATH:
        return path_graph(p["n"])
    if kind is FamilyKind.CYCLE:
        return cycle_graph(p["n"])
    if kind is FamilyKind.STAR:
        return star_graph(p["n"])
    if kind is FamilyKind.COMPLETE_BIPARTITE_BALANCED:
        return complete_bipartite(p["n"], p["n"])
    if kind is FamilyKind.DUTCH_WINDMILL:
        return dutch_windmill(p["n"])
    if kind is FamilyKind.PENDANT_DUTCH_WINDMILL:
        return pendant_dutch_windmill(p["n"])
    if kind is FamilyKind.FAN:
        return fan_graph(p["m"], p["n"])
    if kind is FamilyKind.GEM:
        return gem_graph(p["n"])
    if kind is FamilyKind.GEM_PLUS_EDGE:
        return gem_plus_edge(p["n"])
    if kind is FamilyKind.TRIANGLE_ON_CYCLE:
        return triangle_on_cycle(p["n"])
    if kind is FamilyKind.WHEEL:
        return wheel_graph(p["n"])
    if kind is FamilyKind.CLIQUE_COMPOSITION:
        return compose_clique(dutch_windmill(p["n"]), p["t"])
    raise AssertionError(kind)


def family_vertex_count(spec: FamilySpec) -> int:
    """Order of ``build_family(spec)`` without building it."""
    p = spec.params
    return {
        FamilyKind.PATH: lambda: p["n"],
        FamilyKind.CYCLE: lambda: p["n"],
        FamilyKind.STAR: lambda: p["n"] + 1,
        FamilyKind.COMPLETE_BIPARTITE_BALANCED: lambda: 2 * p["n"],
        FamilyKind.DUTCH_WINDMILL: lambda: 2 * p["n"] + 1,
        FamilyKind.PENDANT_DUTCH_WINDMILL: lambda: 2 * p["n"] + 2,
        FamilyKind.FAN: lambda: p["m"] + p["n"],
        FamilyKind.GEM: lambda: p["n"] + 2,
        FamilyKind.GEM_PLUS_EDGE: lambda: p["n"] + 3,
        FamilyKind.TRIANGLE_ON_CYCLE: lambda: p["n"] + 1,
        FamilyKind.WHEEL: lambda: p["n"],
        FamilyKind.CLIQUE_COMPOSITION: lambda: (2 * p["n"] + 1) * p["t"],
    }[spec.kind]()


# -- edge-list text format ----------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based).

    Blank lines and ``#`` comments are ignored.  Self-loops and repeated
    edges (in either orientation) are rejected.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge list")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError("first line must be 'n m'")
    n, m = int(header[0]), int(header[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header announces {m} edges, found {len(lines) - 1}")
    seen = set()
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise ValueError(f"line {lineno}: self-loop {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"line {lineno}: vertex out of range 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
    return Graph.from_edges(n, seen)


def format_edge_list(g: Graph) -> str:
    rows = [f"{g.vertex_count} {g.edge_count}"]
    rows += [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(rows) + "\n"
