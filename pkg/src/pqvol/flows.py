"""Unit routing into capacitated columns, by augmenting paths.

This is the one flow kernel shared by the package.  Rows supply
integer amounts; each unit must land on a column permitted by the
row's bitmask, and column j accepts at most capacities[j] units.
Augmentation is Ford-Fulkerson one unit at a time, which is exact
and fast at the sizes that occur here (a few dozen columns).

Two consumers:
  * the Hall-style routability test behind the draconian flow check
    (all capacities 1), and
  * transportation feasibility between prescribed row and column sums
    (membership of a lattice point in a dilated polytope).
"""

from __future__ import annotations

from typing import Sequence


class UnitRouter:
    """Incremental router.  add_unit either commits an augmenting path or leaves state unchanged."""

    def __init__(self, row_masks: Sequence[int], capacities: Sequence[int]):
        self.masks = tuple(row_masks)
        self.caps = tuple(capacities)
        # units[j] lists the row of every unit currently parked on column j
        self.units: list[list[int]] = [[] for _ in self.caps]

    def clone(self) -> "UnitRouter":
        twin = UnitRouter.__new__(UnitRouter)
        twin.masks = self.masks
        twin.caps = self.caps
        twin.units = [col.copy() for col in self.units]
        return twin

    def add_unit(self, row: int) -> bool:
        ok, _ = self._augment(row, 0)
        return ok

    def _augment(self, row: int, seen: int) -> tuple[bool, int]:
        free = self.masks[row] & ~seen
        while free:
            bit = free & -free
            free ^= bit
            j = bit.bit_length() - 1
            seen |= bit
            col = self.units[j]
            if len(col) < self.caps[j]:
                col.append(row)
                return True, seen
            # column full: try to reroute one resident unit of each distinct row
            for other in dict.fromkeys(col):
                ok, seen = self._augment(other, seen)
                if ok:
                    col.remove(other)
                    col.append(row)
                    return True, seen
            free &= ~seen
        return False, seen


def route_units(row_masks: Sequence[int], supplies: Sequence[int],
                capacities: Sequence[int]) -> bool:
    """Can every supply unit be routed within the column capacities?"""
    router = UnitRouter(row_masks, capacities)
    for row, amount in enumerate(supplies):
        if amount < 0:
            raise ValueError(f"negative supply {amount} at row {row}")
        for _ in range(amount):
            if not router.add_unit(row):
                return False
    return True


def transportation_feasible(row_masks: Sequence[int], row_sums: Sequence[int],
                            col_sums: Sequence[int]) -> bool:
    """Is there a nonnegative integer matrix with the given margins,
    supported on the cells allowed by row_masks?

    Equivalent to routing all row supply into columns capped at
    col_sums: when the totals agree, saturating the supply forces
    every column to land exactly on its prescribed sum.
    """
    if any(x < 0 for x in row_sums) or any(x < 0 for x in col_sums):
        return False
    if sum(row_sums) != sum(col_sums):
        return False
    return route_units(row_masks, row_sums, col_sums)
