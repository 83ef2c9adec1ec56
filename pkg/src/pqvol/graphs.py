"""Simple graphs, construction families, and the bipartite doubling.

Vertices are labeled 1..n.  An edge is an unordered pair of distinct
vertices, stored as a tuple (u, v) with u < v.  Graphs are immutable;
every construction returns a new Graph.

The doubling D(G) of a graph G on [n] is the bipartite graph on
[n] + [n-bar] in which i on the left is joined to i-bar and to j-bar
for every edge ij of G.  Left neighborhoods in D(G) drive all the
counting in this package, so the doubling stores them as bitmasks:
bit j-1 of masks[i-1] is set exactly when i is joined to j-bar.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable


class GraphFormatError(ValueError):
    """A graph text file is malformed.  The message names the bad line."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


def _as_edge(u, v) -> tuple[int, int]:
    if u == v:
        raise ValueError(f"loop at vertex {u} is not an edge")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertex set {1, ..., n}."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        for e in self.edges:
            u, v = e
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge {e} is not an ordered pair inside 1..{self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalizing edge orientation (set semantics on duplicates)."""
        return cls(n, frozenset(_as_edge(u, v) for u, v in edges))

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and _as_edge(u, v) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")
        return frozenset(b if a == v else a for a, b in self.edges if v in (a, b))

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def descriptor(self) -> str:
        """Canonical one-line form, e.g. 'n=3;e=1-2,2-3'."""
        body = ",".join(f"{u}-{v}" for u, v in self.sorted_edges())
        return f"n={self.n};e={body}"


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of a host graph."""

    edges: frozenset[tuple[int, int]]

    @classmethod
    def of(cls, host: Graph, edges: Iterable[tuple[int, int]]) -> "Matching":
        chosen = frozenset(_as_edge(u, v) for u, v in edges)
        seen: set[int] = set()
        for u, v in sorted(chosen):
            if (u, v) not in host.edges:
                raise ValueError(f"edge ({u}, {v}) is not in the host graph")
            if u in seen or v in seen:
                raise ValueError(f"edge ({u}, {v}) shares a vertex with another chosen edge")
            seen.update((u, v))
        return cls(chosen)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class BipartiteDouble:
    """Left neighborhoods of the doubling D(G), as bitmasks over right labels."""

    n: int
    masks: tuple[int, ...]

    def neighborhood(self, i: int) -> frozenset[int]:
        """Right labels adjacent to left vertex i (j stands for j-bar)."""
        m = self.masks[i - 1]
        return frozenset(j + 1 for j in range(self.n) if m >> j & 1)

    def neighborhood_size(self, i: int) -> int:
        return self.masks[i - 1].bit_count()


def doubling(g: Graph) -> BipartiteDouble:
    """The bipartite double of g.  Left vertex i meets i-bar and j-bar for edges ij."""
    masks = [1 << (i - 1) for i in range(1, g.n + 1)]
    for u, v in g.edges:
        masks[u - 1] |= 1 << (v - 1)
        masks[v - 1] |= 1 << (u - 1)
    return BipartiteDouble(g.n, tuple(masks))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, frozenset(itertools.combinations(range(1, n + 1), 2)))


def triangle_extend(g: Graph, e: tuple[int, int]) -> Graph:
    """Attach a new vertex n+1 joined to both ends of an existing edge e."""
    u, v = _as_edge(*e)
    if (u, v) not in g.edges:
        raise ValueError(f"({u}, {v}) is not an edge, cannot build a triangle on it")
    w = g.n + 1
    return Graph(w, g.edges | {(u, w), (v, w)})


def triangle_extend_set(g: Graph, f: Iterable[tuple[int, int]]) -> Graph:
    """Attach one new vertex per edge of f, in ascending edge order.

    The k-th edge of sorted(f) receives new vertex n+k, so the result
    does not depend on the iteration order of f.
    """
    out = g
    for e in sorted(_as_edge(u, v) for u, v in f):
        if e not in g.edges:
            raise ValueError(f"{e} is not an edge of the base graph")
        out = triangle_extend(out, e)
    return out


def canonical_matching(n: int, m: int) -> Matching:
    """The matching {1,2}, {3,4}, ..., {2m-1, 2m} inside the complete graph."""
    if m < 0 or 2 * m > n:
        raise ValueError(f"a matching of size {m} does not fit in {n} vertices")
    return Matching.of(complete_graph(n), [(2 * k - 1, 2 * k) for k in range(1, m + 1)])


def delete_path(n: int, m: int) -> Graph:
    """K_n minus a path with m edges along the tail vertices.

    The removed edges are {i, i+1} for n-m <= i <= n-1, so the path
    covers the last m+1 vertices.  m = 0 returns the complete graph.
    """
    if n < 4:
        raise ValueError(f"path deletion needs n >= 4, got {n}")
    if not 0 <= m < n:
        raise ValueError(f"path length m must satisfy 0 <= m < n, got {m}")
    removed = {(i, i + 1) for i in range(n - m, n)}
    return Graph(n, complete_graph(n).edges - removed)


def cycle_vertices(n: int, m: int) -> tuple[int, ...]:
    """The vertices carrying the deleted m-cycle: the last m labels, in order."""
    return tuple(range(n - m + 1, n + 1))


def delete_cycle(n: int, m: int) -> Graph:
    """K_n minus an m-cycle on the last m vertices.

    The removed edges join consecutive entries of cycle_vertices(n, m),
    wrapping around.  m = 0 returns the complete graph; m in {1, 2}
    does not describe a cycle and is rejected.
    """
    if n < 5:
        raise ValueError(f"cycle deletion needs n >= 5, got {n}")
    if m == 0:
        return complete_graph(n)
    if not 3 <= m <= n:
        raise ValueError(f"cycle length m must be 0 or satisfy 3 <= m <= n, got {m}")
    cyc = cycle_vertices(n, m)
    removed = {_as_edge(cyc[k], cyc[(k + 1) % m]) for k in range(m)}
    return Graph(n, complete_graph(n).edges - removed)


def relabel(g: Graph, perm: Iterable[int]) -> Graph:
    """Apply a permutation of 1..n: vertex i becomes perm[i-1]."""
    p = tuple(perm)
    if sorted(p) != list(range(1, g.n + 1)):
        raise ValueError(f"not a permutation of 1..{g.n}: {p}")
    return Graph(g.n, frozenset(_as_edge(p[u - 1], p[v - 1]) for u, v in g.edges))


@dataclass(frozen=True)
class Component:
    """A connected component, relabeled to 1..k, with its original vertices.

    vertices[i-1] is the label in the parent graph of the component's vertex i.
    """

    graph: Graph
    vertices: tuple[int, ...]


def connected_components(g: Graph) -> list[Component]:
    """Components ordered by smallest original vertex, each relabeled to 1..k."""
    unseen = set(range(1, g.n + 1))
    out = []
    while unseen:
        root = min(unseen)
        block = {root}
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for w in g.neighbors(v):
                if w not in block:
                    block.add(w)
                    frontier.append(w)
        unseen -= block
        verts = tuple(sorted(block))
        pos = {v: i + 1 for i, v in enumerate(verts)}
        edges = frozenset((pos[u], pos[v]) for u, v in g.edges if u in block and v in block)
        out.append(Component(Graph(len(verts), edges), verts))
    return out


def parse_graph(text: str) -> Graph:
    """Parse the plain text format: first line n, then one 'u v' edge per line.

    Blank lines and lines starting with '#' are ignored.  Duplicate
    edges, loops, out-of-range labels, and malformed lines raise
    GraphFormatError naming the offending line.
    """
    n = None
    edges: dict[tuple[int, int], int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise GraphFormatError(f"expected a vertex count, got {line!r}", line_no)
            if n < 1:
                raise GraphFormatError(f"vertex count must be positive, got {n}", line_no)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", line_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"edge endpoints must be integers, got {line!r}", line_no)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u} is not allowed", line_no)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"edge ({u}, {v}) uses a label outside 1..{n}", line_no)
        e = _as_edge(u, v)
        if e in edges:
            raise GraphFormatError(
                f"duplicate edge ({u}, {v}), first given on line {edges[e]}", line_no
            )
        edges[e] = line_no
    if n is None:
        raise GraphFormatError("empty input: no vertex count line")
    return Graph(n, frozenset(edges))


def load_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())
