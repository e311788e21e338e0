"""Pure-Python kernels for down-set enumeration over bitmask posets.

A poset is given as a list `preds`: preds[i] is the bitmask of the
immediate predecessors of point i, and points must be listed in a linear
extension (every predecessor before its successor).  A down-set is a
subset containing all predecessors of each member.  Masks are plain
Python integers, so any number of points works.

Every kernel walks the same include/exclude tree: points are decided in
order, a point may be included only when allowed and all its
predecessors are already in.  One visited state is one node; when the
node budget runs out the kernel stops and reports completed=False with
whatever it found so far.
"""

from __future__ import annotations


def ideals_of_size(
    preds: list[int], allowed: int, size: int, max_nodes: int
) -> tuple[list[int], int, bool]:
    """All down-sets of `allowed` with exactly `size` points.

    Returns (masks, nodes_visited, completed).
    """
    npoints = len(preds)
    out: list[int] = []
    nodes = 0
    stack = [(0, 0, 0)]  # (next point, chosen mask, chosen count)
    while stack:
        i, chosen, count = stack.pop()
        nodes += 1
        if nodes > max_nodes:
            return out, nodes, False
        if count == size:
            out.append(chosen)
            continue
        if size - count > npoints - i:
            continue
        bit = 1 << i
        stack.append((i + 1, chosen, count))
        if allowed & bit and preds[i] & ~chosen == 0:
            stack.append((i + 1, chosen | bit, count + 1))
    return out, nodes, True


def count_ideals_of_size(
    preds: list[int], allowed: int, size: int, max_nodes: int
) -> tuple[int, int, bool]:
    """Like ideals_of_size but only counts the down-sets."""
    npoints = len(preds)
    found = 0
    nodes = 0
    stack = [(0, 0, 0)]
    while stack:
        i, chosen, count = stack.pop()
        nodes += 1
        if nodes > max_nodes:
            return found, nodes, False
        if count == size:
            found += 1
            continue
        if size - count > npoints - i:
            continue
        bit = 1 << i
        stack.append((i + 1, chosen, count))
        if allowed & bit and preds[i] & ~chosen == 0:
            stack.append((i + 1, chosen | bit, count + 1))
    return found, nodes, True


def all_ideals(
    preds: list[int], allowed: int, max_nodes: int
) -> tuple[list[int], int, bool]:
    """Every down-set of `allowed`, any size (the empty set included)."""
    npoints = len(preds)
    out: list[int] = []
    nodes = 0
    stack = [(0, 0)]
    while stack:
        i, chosen = stack.pop()
        nodes += 1
        if nodes > max_nodes:
            return out, nodes, False
        if i == npoints:
            out.append(chosen)
            continue
        bit = 1 << i
        stack.append((i + 1, chosen))
        if allowed & bit and preds[i] & ~chosen == 0:
            stack.append((i + 1, chosen | bit))
    return out, nodes, True
