import math

import pytest

from pqvol.combinat import SequenceSet, weak_compositions


def test_weak_composition_counts():
    for total, parts in [(0, 1), (3, 1), (4, 3), (5, 5), (2, 6)]:
        got = list(weak_compositions(total, parts))
        assert len(got) == math.comb(total + parts - 1, parts - 1)
        assert all(sum(c) == total and len(c) == parts for c in got)
        assert len(set(got)) == len(got)


def test_weak_compositions_lex_order():
    got = list(weak_compositions(2, 3))
    assert got == sorted(got)
    assert got[0] == (0, 0, 2) and got[-1] == (2, 0, 0)


def test_weak_compositions_rejects_bad_args():
    with pytest.raises(ValueError):
        list(weak_compositions(2, 0))
    with pytest.raises(ValueError):
        list(weak_compositions(-1, 2))


def test_sequence_set_dedup_and_order():
    s = SequenceSet.of(3, [(1, 0, 1), (0, 0, 2), (1, 0, 1)])
    assert len(s) == 2
    assert list(s) == [(0, 0, 2), (1, 0, 1)]
    assert (1, 0, 1) in s and (2, 0, 0) not in s


def test_sequence_set_validation():
    with pytest.raises(ValueError):
        SequenceSet.of(3, [(1, 0)])
    with pytest.raises(ValueError):
        SequenceSet.of(2, [(1, -1)])


def test_sequence_set_algebra():
    a = SequenceSet.of(2, [(1, 0), (0, 1)])
    b = SequenceSet.of(2, [(0, 1), (1, 1)])
    assert list(a.union(b)) == [(0, 1), (1, 0), (1, 1)]
    assert list(a.intersection(b)) == [(0, 1)]
    assert list(a.difference(b)) == [(1, 0)]
    assert list(a.symmetric_difference(b)) == [(1, 0), (1, 1)]
    with pytest.raises(ValueError):
        a.union(SequenceSet.of(3, []))
