"""Search for counterexamples to the tripling recurrence hypotheses.

The tripling of the sequence count when a triangle is glued onto an
edge is proved under degree hypotheses on the edge ends.  A natural
question is whether the hypotheses are necessary and whether they ever
fail to deliver.  The search runs every (connected graph, edge) pair
up to a vertex bound through the partition verifier and buckets the
outcomes by hypotheses-hold x triples.

A record in the hypotheses-hold:fails bucket would falsify the
recurrence; none exists up to 6 vertices.  The other off-diagonal
bucket, hypotheses-fail:triples, is populated: the hypotheses are
sufficient but not necessary.
"""

from collections import Counter

from pqvol.tripling import search_triple_recurrence


def main():
    records = search_triple_recurrence(6)
    buckets = Counter(r["category"] for r in records)

    print(f"(graph, edge) pairs examined: {len(records)}")
    for category in sorted(buckets):
        print(f"  {category:<28} {buckets[category]:>5}")
    print()

    assert buckets.get("hypotheses-hold:fails", 0) == 0
    print("no pair satisfies the hypotheses yet fails to triple")

    witnesses = [r for r in records if r["category"] == "hypotheses-fail:triples"]
    if witnesses:
        w = witnesses[0]
        print(f"hypotheses are not necessary, e.g. {w['graph_encoding']} "
              f"edge {tuple(w['edge'])}: "
              f"{w['counts']['base']} -> {w['counts']['extended']}")


if __name__ == "__main__":
    main()
