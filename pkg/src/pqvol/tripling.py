"""The triangle recurrence: gluing a triangle onto an edge triples the count.

Attaching a new apex vertex to both ends of an edge e = {u, v} sends
draconian sequences of the base graph into the extended graph along
three injections, here called lifts.  Writing (c, k) for c with k
appended at the apex slot:

    lift_one(c)              = (c, 1)
    lift_bump(c, u)          = (c + e_u, 0)
    lift_resolve(c, u, v, B) = (c + e_v, 0)   if that misses B,
                               (c - e_u, 2)   otherwise,

where B is the full image of lift_bump.  When the three images are
pairwise disjoint and cover the extended graph's draconian set, the
count triples.  That partition is a theorem under a degree hypothesis
on e, and holds experimentally well beyond it; verify_partition
measures it on one (graph, edge) and search_triple_recurrence sweeps
all small connected graphs looking for the boundary.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .combinat import SequenceSet
from .draconian import enumerate_draconian
from .graphs import Graph, connected_components, doubling, triangle_extend


def lift_one(c: Sequence[int]) -> tuple[int, ...]:
    """Append 1 at the apex slot."""
    return tuple(c) + (1,)


def lift_bump(c: Sequence[int], u: int) -> tuple[int, ...]:
    """Add a unit at u and append 0 at the apex slot."""
    if not 1 <= u <= len(c):
        raise ValueError(f"vertex {u} out of range 1..{len(c)}")
    out = list(c)
    out[u - 1] += 1
    return tuple(out) + (0,)


def lift_resolve(c: Sequence[int], u: int, v: int, bump_image) -> tuple[int, ...]:
    """The third lift: bump v unless that collides with the bump image,
    in which case take a unit from u and give the apex 2.

    A collision c + e_v = c' + e_u forces c_u = c'_u + 1 >= 1, so the
    fallback cannot drive an entry negative on legitimate inputs; a
    negative entry here means the caller passed the wrong image set.
    """
    n = len(c)
    for w in (u, v):
        if not 1 <= w <= n:
            raise ValueError(f"vertex {w} out of range 1..{n}")
    first = list(c)
    first[v - 1] += 1
    candidate = tuple(first) + (0,)
    if candidate not in bump_image:
        return candidate
    if c[u - 1] < 1:
        raise ValueError(
            f"fallback lift would make entry {u} negative; bump image does not belong to this edge"
        )
    second = list(c)
    second[u - 1] -= 1
    return tuple(second) + (2,)


@dataclass
class PartitionReport:
    """Measured partition data for one (graph, edge) extension."""

    graph: str
    edge: tuple[int, int]
    matching_mode: bool
    base_count: int
    extended_count: int
    image_sizes: dict
    injective: dict
    contained: dict
    pairwise_disjoint: bool
    union_equals: bool
    reversed_partition_holds: bool

    @property
    def triples(self) -> bool:
        return self.extended_count == 3 * self.base_count

    @property
    def partition_holds(self) -> bool:
        return self.pairwise_disjoint and self.union_equals

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "edge": list(self.edge),
            "matching_mode": self.matching_mode,
            "counts": {"base": str(self.base_count), "extended": str(self.extended_count)},
            "triples": self.triples,
            "image_sizes": dict(self.image_sizes),
            "injective": dict(self.injective),
            "contained": dict(self.contained),
            "pairwise_disjoint": self.pairwise_disjoint,
            "union_equals": self.union_equals,
            "partition_holds": self.partition_holds,
            "reversed_partition_holds": self.reversed_partition_holds,
        }


def _oriented_images(base: list[tuple[int, ...]], u: int, v: int):
    one = {lift_one(c) for c in base}
    bump = {lift_bump(c, u) for c in base}
    resolve = {lift_resolve(c, u, v, bump) for c in base}
    return one, bump, resolve


def verify_partition(g: Graph, e: tuple[int, int], matching_mode: bool = False) -> PartitionReport:
    """Measure the three lift images against the extended graph's sequences.

    matching_mode is a caller annotation recording that e extends a
    triangle matching on a complete graph (the setting in which the
    partition is guaranteed); the measurement itself is identical.
    """
    u, v = min(e), max(e)
    if (u, v) not in g.edges:
        raise ValueError(f"({u}, {v}) is not an edge of the graph")
    base = enumerate_draconian(doubling(g))
    extended = set(enumerate_draconian(doubling(triangle_extend(g, (u, v)))))

    one, bump, resolve = _oriented_images(base, u, v)
    m = len(base)
    union = one | bump | resolve
    disjoint = len(union) == len(one) + len(bump) + len(resolve)
    equals = union == extended

    r_one, r_bump, r_resolve = _oriented_images(base, v, u)
    r_union = r_one | r_bump | r_resolve
    reversed_holds = (
        len(r_union) == len(r_one) + len(r_bump) + len(r_resolve) and r_union == extended
    )

    return PartitionReport(
        graph=g.descriptor(),
        edge=(u, v),
        matching_mode=matching_mode,
        base_count=m,
        extended_count=len(extended),
        image_sizes={"one": len(one), "bump": len(bump), "resolve": len(resolve)},
        injective={"one": len(one) == m, "bump": len(bump) == m, "resolve": len(resolve) == m},
        contained={
            "one": one <= extended,
            "bump": bump <= extended,
            "resolve": resolve <= extended,
        },
        pairwise_disjoint=disjoint,
        union_equals=equals,
        reversed_partition_holds=reversed_holds,
    )


def recurrence_hypotheses(g: Graph, e: tuple[int, int]) -> bool:
    """The degree condition under which tripling is a theorem.

    Some orientation (a, b) of e must have deg(a) = 2 and either
    deg(b) = 2 or the two neighbors of a adjacent to each other.
    """
    u, v = min(e), max(e)
    if (u, v) not in g.edges:
        raise ValueError(f"({u}, {v}) is not an edge of the graph")

    def oriented(a: int, b: int) -> bool:
        nbrs = g.neighbors(a)
        if len(nbrs) != 2:
            return False
        if g.degree(b) == 2:
            return True
        w1, w2 = sorted(nbrs)
        return g.has_edge(w1, w2)

    return oriented(u, v) or oriented(v, u)


def _canonical_encoding(g: Graph) -> tuple:
    """Smallest edge-set encoding over degree-preserving relabelings."""
    order = sorted(range(1, g.n + 1), key=lambda v: (-g.degree(v), v))
    blocks: list[list[int]] = []
    for v in order:
        if blocks and g.degree(blocks[-1][0]) == g.degree(v):
            blocks[-1].append(v)
        else:
            blocks.append([v])
    best = None
    for parts in itertools.product(*(itertools.permutations(b) for b in blocks)):
        flat = [v for part in parts for v in part]
        pos = {v: i + 1 for i, v in enumerate(flat)}
        enc = tuple(sorted(
            (pos[u], pos[v]) if pos[u] < pos[v] else (pos[v], pos[u])
            for u, v in g.edges
        ))
        if best is None or enc < best:
            best = enc
    return (g.n, best)


def connected_graph_stream(n_max: int) -> Iterator[Graph]:
    """All connected graphs with 2..n_max vertices, one per isomorphism class.

    Graphs are generated by brute force over edge subsets and
    deduplicated by canonical form, so this is only meant for small
    n_max (the search precondition caps it at 8; beyond 6 it crawls).
    """
    if n_max > 8:
        raise ValueError(f"graph stream capped at 8 vertices, got {n_max}")
    for n in range(2, n_max + 1):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        found: dict[tuple, Graph] = {}
        for mask in range(1 << len(pairs)):
            edges = frozenset(p for k, p in enumerate(pairs) if mask >> k & 1)
            g = Graph(n, edges)
            if len(connected_components(g)) != 1:
                continue
            key = _canonical_encoding(g)
            if key not in found:
                found[key] = g
        for key in sorted(found):
            yield found[key]


def _search_task(args) -> dict:
    n, edges, e = args
    g = Graph(n, frozenset(edges))
    base = len(enumerate_draconian(doubling(g)))
    extended = len(enumerate_draconian(doubling(triangle_extend(g, e))))
    hyp = recurrence_hypotheses(g, e)
    triples = extended == 3 * base
    category = ("hypotheses-hold" if hyp else "hypotheses-fail") + \
               (":triples" if triples else ":fails")
    return {
        "graph_encoding": g.descriptor(),
        "edge": list(e),
        "hypotheses_hold": hyp,
        "triples": triples,
        "counts": {"base": str(base), "extended": str(extended)},
        "category": category,
    }


def search_triple_recurrence(n_max: int, source: Iterable[Graph] | None = None,
                             jobs: int = 1) -> list[dict]:
    """Sweep (graph, edge) pairs and classify each against the tripling identity.

    Records come back in task order (graphs as streamed, edges sorted),
    so runs are reproducible regardless of worker count.  A record in
    the hypotheses-hold:fails class would contradict the theorem; the
    caller should treat any such record as an alarm.
    """
    graphs = source if source is not None else connected_graph_stream(n_max)
    tasks = [
        (g.n, tuple(g.sorted_edges()), e)
        for g in graphs
        for e in g.sorted_edges()
    ]
    if jobs <= 1:
        return [_search_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_search_task, tasks))
