"""Exception sets: the draconian sequences lost when edges are deleted.

Deleting a path or a cycle from a complete graph removes a precisely
describable family of sequences from the draconian set.  This module
builds those families explicitly and verifies, by exhaustive
enumeration, that they account for every lost sequence.

Conventions follow graphs.delete_path and graphs.delete_cycle: the
deleted path runs along the last m+1 vertices, the deleted m-cycle
sits on cycle_vertices(n, m).  Heavy sets put weight n-2 on a cycle
or path vertex; split sets divide n-1 (or n-2, with a floating unit)
across the two ends of a skipped chord.

All constructions deduplicate.  The traditional cardinality
expressions for these families are kept separate as claims, because
several of them disagree with the deduplicated constructions (the
split family at cycle length 4 halves, and the path overlap count is
off by one at small sizes).  Reports show claimed and actual side by
side rather than reconciling them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .combinat import SequenceSet
from .draconian import EnumerationCapExceeded, enumerate_draconian
from .graphs import complete_graph, cycle_vertices, delete_cycle, delete_path, doubling


def _unit(n: int, i: int, amount: int) -> tuple[int, ...]:
    vec = [0] * n
    vec[i - 1] = amount
    return tuple(vec)


def _bump(vec: tuple[int, ...], i: int, amount: int) -> tuple[int, ...]:
    out = list(vec)
    out[i - 1] += amount
    return tuple(out)


def _check_path_params(n: int, m: int):
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    if not 2 <= m < n:
        raise ValueError(f"path exception sets need 2 <= m < n, got m = {m}")


def _check_cycle_params(n: int, m: int):
    if n < 5:
        raise ValueError(f"need n >= 5, got {n}")
    if not 3 <= m <= n:
        raise ValueError(f"cycle exception sets need 3 <= m <= n, got m = {m}")


def path_heavy_exceptions(n: int, m: int) -> SequenceSet:
    """Sequences e_i + (n-2)e_j with j an interior tail vertex of the deleted path."""
    _check_path_params(n, m)
    return SequenceSet.of(n, (
        _bump(_unit(n, j, n - 2), i, 1)
        for j in range(n - m + 1, n)
        for i in range(1, n + 1)
    ))


def path_split_exceptions(n: int, m: int) -> SequenceSet:
    """Sequences splitting n-1 across a chord (i, i+2) skipping one path vertex."""
    _check_path_params(n, m)
    return SequenceSet.of(n, (
        _bump(_unit(n, i, r), i + 2, n - 1 - r)
        for i in range(n - m, n - 1)
        for r in range(n)
    ))


def cycle_heavy_exceptions(n: int, m: int) -> SequenceSet:
    """Sequences e_j + (n-2)e_v with v on the deleted cycle."""
    _check_cycle_params(n, m)
    cyc = cycle_vertices(n, m)
    return SequenceSet.of(n, (
        _bump(_unit(n, v, n - 2), j, 1)
        for v in cyc
        for j in range(1, n + 1)
    ))


def cycle_split_exceptions(n: int, m: int) -> SequenceSet:
    """Sequences splitting n-1 across a chord skipping one cycle vertex.

    Both split parts stay in [2, n-3].  At m = 4 the chord from v_i and
    the chord from v_{i+2} coincide, so the construction collides with
    itself and deduplication halves the raw count.
    """
    _check_cycle_params(n, m)
    cyc = cycle_vertices(n, m)
    return SequenceSet.of(n, (
        _bump(_unit(n, cyc[i], r), cyc[(i + 2) % m], n - 1 - r)
        for i in range(m)
        for r in range(2, n - 2)
    ))


def cycle_triple_exceptions(n: int, m: int) -> SequenceSet:
    """Three-point sequences needed only at cycle length 4: r and n-2-r across
    a chord, plus a single unit anywhere off the chord."""
    _check_cycle_params(n, m)
    if m != 4:
        raise ValueError(f"the triple family exists only at cycle length 4, got m = {m}")
    cyc = cycle_vertices(n, m)
    members = []
    for i in range(m):
        a, b = cyc[i], cyc[(i + 2) % m]
        for r in range(1, n - 2):
            base = _bump(_unit(n, a, r), b, n - 2 - r)
            for s in range(1, n + 1):
                if s != a and s != b:
                    members.append(_bump(base, s, 1))
    return SequenceSet.of(n, members)


def claimed_path_sizes(n: int, m: int) -> dict:
    """The traditional cardinality expressions for the path families, as claims."""
    heavy = n * (m - 1)
    split = n * (m - 1) - (m - 3)
    overlap = 2 * (m - 1) + (m - 2)
    return {"heavy": heavy, "split": split, "overlap": overlap,
            "union": heavy + split - overlap}


def claimed_cycle_sizes(n: int, m: int) -> dict:
    """The traditional cardinality expressions for the cycle families, as claims."""
    out = {"heavy": m * n, "split": m * (n - 4)}
    if m == 4:
        out["triple"] = 2 * (n - 3) * (n - 2)
    out["union"] = sum(out.values())
    return out


@dataclass
class IdentityReport:
    """Comparison of an exception-set construction against enumeration."""

    params: dict
    identity_holds: bool
    cardinalities: dict
    symmetric_difference: list = field(default_factory=list)
    pairwise_disjoint: bool | None = None

    def to_dict(self) -> dict:
        out = {
            "params": dict(self.params),
            "identity_holds": self.identity_holds,
            "cardinalities": self.cardinalities,
            "symmetric_difference": [list(s) for s in self.symmetric_difference],
        }
        if self.pairwise_disjoint is not None:
            out["pairwise_disjoint"] = self.pairwise_disjoint
        return out


def _lost_sequences(n: int, deleted) -> tuple[SequenceSet, int, int]:
    full = enumerate_draconian(doubling(complete_graph(n)))
    kept = set(enumerate_draconian(doubling(deleted)))
    lost = SequenceSet.of(n, (c for c in full if c not in kept))
    return lost, len(full), len(kept)


def _check_cap(n: int, cap_n: int):
    if n > cap_n:
        raise EnumerationCapExceeded(
            f"n = {n} exceeds the enumeration cap {cap_n}; raise cap_n to force this"
        )


def verify_path_identity(n: int, m: int, cap_n: int = 9) -> IdentityReport:
    """Does heavy-union-split equal the sequences lost by deleting the path?"""
    _check_path_params(n, m)
    _check_cap(n, cap_n)
    lost, full_count, kept_count = _lost_sequences(n, delete_path(n, m))
    heavy = path_heavy_exceptions(n, m)
    split = path_split_exceptions(n, m)
    union = heavy.union(split)
    diff = lost.symmetric_difference(union)
    actual = {
        "heavy": len(heavy),
        "split": len(split),
        "overlap": len(heavy.intersection(split)),
        "union": len(union),
        "lost": len(lost),
        "complete_count": full_count,
        "deleted_count": kept_count,
    }
    return IdentityReport(
        params={"family": "path-deleted", "n": n, "m": m},
        identity_holds=len(diff) == 0,
        cardinalities={"claimed": claimed_path_sizes(n, m), "actual": actual},
        symmetric_difference=list(diff),
    )


def verify_cycle_identity(n: int, m: int, cap_n: int = 9) -> IdentityReport:
    """Does the union of cycle families equal the sequences lost by deleting the cycle?

    At m = 4 the triple family joins the union.  Pairwise disjointness
    of the deduplicated families is checked alongside the identity.
    """
    _check_cycle_params(n, m)
    _check_cap(n, cap_n)
    lost, full_count, kept_count = _lost_sequences(n, delete_cycle(n, m))
    heavy = cycle_heavy_exceptions(n, m)
    split = cycle_split_exceptions(n, m)
    families = [heavy, split]
    actual = {"heavy": len(heavy), "split": len(split)}
    if m == 4:
        triple = cycle_triple_exceptions(n, m)
        families.append(triple)
        actual["triple"] = len(triple)
    union = families[0]
    for fam in families[1:]:
        union = union.union(fam)
    disjoint = len(union) == sum(len(f) for f in families)
    diff = lost.symmetric_difference(union)
    actual.update({
        "union": len(union),
        "lost": len(lost),
        "complete_count": full_count,
        "deleted_count": kept_count,
    })
    return IdentityReport(
        params={"family": "cycle-deleted", "n": n, "m": m},
        identity_holds=len(diff) == 0,
        cardinalities={"claimed": claimed_cycle_sizes(n, m), "actual": actual},
        symmetric_difference=list(diff),
        pairwise_disjoint=disjoint,
    )
