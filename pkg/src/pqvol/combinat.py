"""Weak compositions and finite sets of integer sequences.

A weak composition of t into n parts is an n-tuple of nonnegative
integers summing to t.  Everything here is exact integer arithmetic;
tuples are ordered lexicographically throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All weak compositions of total into parts parts, in lexicographic order."""
    if parts < 1:
        raise ValueError(f"need at least one part, got {parts}")
    if total < 0:
        raise ValueError(f"total must be nonnegative, got {total}")
    c = [0] * parts

    def rec(k: int, remaining: int):
        if k == parts - 1:
            c[k] = remaining
            yield tuple(c)
            return
        for v in range(remaining + 1):
            c[k] = v
            yield from rec(k + 1, remaining - v)

    yield from rec(0, total)


@dataclass(frozen=True)
class SequenceSet:
    """A deduplicated, lexicographically sorted set of length-n integer tuples."""

    n: int
    members: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, n: int, seqs: Iterable[tuple[int, ...]]) -> "SequenceSet":
        pool = set()
        for s in seqs:
            t = tuple(s)
            if len(t) != n:
                raise ValueError(f"sequence {t} does not have length {n}")
            if any(x < 0 for x in t):
                raise ValueError(f"sequence {t} has a negative entry")
            pool.add(t)
        return cls(n, tuple(sorted(pool)))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.members)

    def __contains__(self, seq) -> bool:
        return tuple(seq) in set(self.members)

    def _check_peer(self, other: "SequenceSet"):
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")

    def union(self, other: "SequenceSet") -> "SequenceSet":
        self._check_peer(other)
        return SequenceSet.of(self.n, set(self.members) | set(other.members))

    def intersection(self, other: "SequenceSet") -> "SequenceSet":
        self._check_peer(other)
        return SequenceSet.of(self.n, set(self.members) & set(other.members))

    def difference(self, other: "SequenceSet") -> "SequenceSet":
        self._check_peer(other)
        return SequenceSet.of(self.n, set(self.members) - set(other.members))

    def symmetric_difference(self, other: "SequenceSet") -> "SequenceSet":
        self._check_peer(other)
        return SequenceSet.of(self.n, set(self.members) ^ set(other.members))
