"""Independent reference implementations for the test suite.

Everything here is written directly from the definitions with plain
Python sets and exhaustive iteration, and deliberately shares no code
with the package: no bitmasks, no pruning, no flow kernel.  Slow on
purpose; only run at sizes where slow is fine.
"""

import itertools


def compositions(total, parts):
    """Weak compositions as tuples, any order."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


def double_neighborhoods(n, edges):
    """Left neighborhoods of the bipartite double, as sets of right labels."""
    nbrs = {i: {i} for i in range(1, n + 1)}
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    return nbrs


def brute_draconian(n, edges):
    """The draconian set from the literal definition: every weak composition
    of n-1, every nonempty subset of [n]."""
    nbrs = double_neighborhoods(n, edges)
    out = set()
    for c in compositions(n - 1, n):
        ok = True
        for size in range(1, n + 1):
            for subset in itertools.combinations(range(1, n + 1), size):
                weight = sum(c[i - 1] for i in subset)
                union = set().union(*(nbrs[i] for i in subset))
                if weight >= len(union):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(c)
    return out


def brute_transportation(allowed, row_sums, col_sums):
    """Is there a nonnegative integer matrix with these margins supported on
    allowed cells?  Exhaustive search over row fillings."""
    rows = len(row_sums)
    cols = len(col_sums)
    if sum(row_sums) != sum(col_sums):
        return False

    def fill(r, remaining_cols):
        if r == rows:
            return all(x == 0 for x in remaining_cols)
        choices = [
            range(min(row_sums[r], remaining_cols[j]) + 1) if (r, j) in allowed else (0,)
            for j in range(cols)
        ]
        for split in itertools.product(*choices):
            if sum(split) != row_sums[r]:
                continue
            nxt = tuple(x - y for x, y in zip(remaining_cols, split))
            if fill(r + 1, nxt):
                return True
        return False

    return fill(0, tuple(col_sums))


def random_graph(rng, n, p=0.5):
    """Edge list of a random graph on 1..n with edge probability p."""
    return [
        (u, v)
        for u, v in itertools.combinations(range(1, n + 1), 2)
        if rng.random() < p
    ]
