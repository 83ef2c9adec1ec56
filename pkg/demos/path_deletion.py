"""Delete a path from a complete graph and track the lost sequences.

Removing the edges of a path with m vertices from K_n destroys some
draconian sequences.  The lost ones are exactly the union of two
explicit families, the heavy singletons and the split pairs, so the
count of the deleted graph is the complete-graph count minus the size
of that union.

The shipped closed form for this count can be read two ways depending
on how one binds a trailing "+ 4": subtracting (2n-4)(m-1) and then
adding 4, or subtracting the grouped quantity (2n-4)(m-1) + 4.  The
two readings always differ by 8.  The script prints both against the
enumerated truth for every m at n = 5 and 6; the grouped reading is
the one that matches.
"""

from pqvol import count_draconian, delete_path, nvol_path_deleted, verify_path_identity


def main():
    print(" n  m   enumerated   as-printed   grouped   identity")
    for n in (5, 6):
        for m in range(2, n):
            enum = count_draconian(delete_path(n, m)).count
            readings = nvol_path_deleted(n, m)
            rep = verify_path_identity(n, m)
            actual = rep.cardinalities["actual"]
            assert enum == actual["complete_count"] - actual["union"]
            print(f"{n:>2} {m:>2} {enum:>12} {readings.as_printed:>12} "
                  f"{readings.grouped:>9}   lost = union of both families: "
                  f"{rep.identity_holds}")
        print()

    rep = verify_path_identity(5, 3)
    claimed = rep.cardinalities["claimed"]
    actual = rep.cardinalities["actual"]
    print("cardinality bookkeeping at n=5, m=3 "
          "(claimed totals count some members twice):")
    for key in ("heavy", "split", "overlap", "union"):
        print(f"  {key:<8} claimed {claimed[key]:>3}   deduplicated {actual[key]:>3}")


if __name__ == "__main__":
    main()
