"""Recursive forced-point search for coverings of Z^2 by six subgroups.

The search grows a 6-slot tuple of subgroups one forced point at a time:
whenever the current union misses a point of the forcing list, that point
is adjoined to one of the slots (only up to the first empty slot, which
breaks slot-permutation symmetry) and the search recurses.  Recorded
tuples cover Z^2; pruning and a partial-order filter then reduce them to
the minimal coverings.
"""

from __future__ import annotations

import itertools
import sys

from .lattices import (
    ZERO,
    Subgroup,
    adjoin,
    canonicalize,
    contains,
    index,
    is_cover,
    is_subgroup_of,
)

SLOTS = 6

_E1 = (1, 0)
_E2 = (0, 1)

#: The forcing list: any union of six subgroups containing all of these
#: points covers Z^2.  Order matters for the raw solution count.
FORCING_POINTS: tuple[tuple[int, int], ...] = (
    (1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1), (1, 3), (3, 1),
    (1, -3), (3, -1), (1, 4), (2, 3), (3, 2), (4, 1), (1, -4), (2, -3),
    (3, -2), (4, -1), (5, 1), (1, 5), (5, -1), (1, -5), (1, 6), (2, 5),
    (3, 4), (4, 3), (5, 2), (6, 1), (1, 7), (3, 5), (5, 3), (7, 1),
    (1, 8), (2, 7), (4, 5), (5, 4), (7, 2), (8, 1), (1, 9), (3, 7),
    (7, 3), (9, 1), (1, 10), (2, 9), (3, 8), (4, 7), (5, 6), (6, 5),
    (7, 4), (8, 3), (9, 2), (10, 1), (1, 11), (5, 7), (7, 5), (11, 1),
    (1, 12), (2, 11), (3, 8), (4, 7), (5, 8), (6, 7), (7, 6), (8, 5),
    (9, 4), (10, 3), (11, 2), (12, 1), (1, 13), (3, 11), (5, 9), (9, 5),
    (11, 3), (13, 1), (1, 14), (2, 13), (4, 11), (7, 8), (8, 7), (11, 4),
    (13, 2), (14, 1), (1, 15), (3, 13), (5, 11), (7, 9), (9, 7), (11, 5),
    (13, 3), (15, 1), (1, 16), (8, 9), (9, 8), (16, 1), (2, 15), (1, 30),
    (1, 17), (30, 1), (17, 1),
)

CoveringTuple = tuple[Subgroup, ...]

EMPTY_TUPLE: CoveringTuple = (ZERO,) * SLOTS


class ForcingListExhausted(RuntimeError):
    """The search ran past the end of the forcing list.

    For six slots this cannot happen unless the forcing list or the
    recursion has been tampered with.
    """


def forcing_points() -> tuple[tuple[int, int], ...]:
    return FORCING_POINTS


def find_lattices(slots: CoveringTuple, point_index: int) -> list[CoveringTuple]:
    """Expand ``slots`` at the first uncovered forcing point and recurse.

    Returns every covering tuple found below this node.  The traversal
    order is fixed: slots are tried in ascending order, only up to the
    first rank-0 slot.
    """
    points = FORCING_POINTS
    solutions: list[CoveringTuple] = []
    try:
        v = points[point_index]

        last_slot = 0
        while slots[last_slot].rank != 0 and last_slot < SLOTS - 1:
            last_slot += 1

        # Skip points already covered by the current union.
        skipping = True
        while skipping:
            skipping = False
            for s in slots:
                if contains(s, v):
                    skipping = True
                    point_index += 1
                    v = points[point_index]
                    break
    except IndexError:
        raise ForcingListExhausted(
            f"forcing list exhausted at position {point_index}"
        ) from None

    work = list(slots)
    for i in range(last_slot + 1):
        enlarged = adjoin(work[i], v)
        if not (contains(enlarged, _E1) and contains(enlarged, _E2)):
            work[i] = enlarged
            if is_cover(work):
                solutions.append(tuple(work))
            else:
                solutions.extend(find_lattices(tuple(work), point_index + 1))
            work[i] = slots[i]
    return solutions


def prune(t: CoveringTuple) -> CoveringTuple:
    """Drop redundant slots of a covering tuple, greedily in slot order.

    Each slot in turn is replaced by the zero subgroup if the rest still
    covers; surviving slots are then compacted to the front.  The result
    still covers Z^2.
    """
    slots = list(t)
    for i in range(len(slots)):
        old = slots[i]
        slots[i] = ZERO
        if not is_cover(slots):
            slots[i] = old

    nonzero = sum(1 for s in slots if s.rank != 0)
    for i in range(nonzero):
        if slots[i].rank == 0:
            for j in range(nonzero, len(slots)):
                if slots[j].rank != 0:
                    slots[i], slots[j] = slots[j], ZERO
                    break
    return tuple(slots)


def precedes(a: CoveringTuple, b: CoveringTuple) -> bool:
    """The permutation partial order: a <= b iff some permutation sigma
    has every generator of a[i] inside b[sigma(i)].

    As in the pruning pass, the permutation only moves the slots up to
    and including the first rank-0 slot of ``a``; later slots (all
    rank 0 after compaction) are matched identically.
    """
    k = len(a) - 1
    for i, s in enumerate(a):
        if s.rank == 0:
            k = i
            break
    compat = [
        [is_subgroup_of(a[i], b[j]) for j in range(k + 1)] for i in range(k + 1)
    ]
    tail_ok = all(
        is_subgroup_of(a[i], b[i]) for i in range(k + 1, len(a))
    )
    if not tail_ok:
        return False

    used = [False] * (k + 1)

    def assign(i: int) -> bool:
        if i > k:
            return True
        row = compat[i]
        for j in range(k + 1):
            if row[j] and not used[j]:
                used[j] = True
                if assign(i + 1):
                    return True
                used[j] = False
        return False

    return assign(0)


def _canonical_sort_key(t: CoveringTuple):
    return tuple(sorted((index(s) if s.rank == 2 else 0, s.gens) for s in t))


def _normalize_slots(t: CoveringTuple) -> CoveringTuple:
    """Order-normalized representative: nonzero slots sorted by
    (index, basis), zero slots compacted to the tail."""
    nonzero = sorted(
        (s for s in t if s.rank != 0), key=lambda s: (index(s), s.gens)
    )
    return tuple(nonzero) + (ZERO,) * (len(t) - len(nonzero))


def _subtree(task: tuple[CoveringTuple, int]) -> list[CoveringTuple]:
    return find_lattices(*task)


def _expand_frontier(min_tasks: int):
    """Breadth-first expansion of the search root into independent tasks.

    Returns (solutions found so far, open tasks).  Used to fan the search
    out over worker processes.
    """
    solutions: list[CoveringTuple] = []
    tasks: list[tuple[CoveringTuple, int]] = [(EMPTY_TUPLE, 0)]
    while tasks and len(tasks) < min_tasks:
        slots, point_index = tasks.pop(0)
        v = FORCING_POINTS[point_index]
        last_slot = 0
        while slots[last_slot].rank != 0 and last_slot < SLOTS - 1:
            last_slot += 1
        skipping = True
        while skipping:
            skipping = False
            for s in slots:
                if contains(s, v):
                    skipping = True
                    point_index += 1
                    v = FORCING_POINTS[point_index]
                    break
        work = list(slots)
        for i in range(last_slot + 1):
            enlarged = adjoin(work[i], v)
            if not (contains(enlarged, _E1) and contains(enlarged, _E2)):
                work[i] = enlarged
                if is_cover(work):
                    solutions.append(tuple(work))
                else:
                    tasks.append((tuple(work), point_index + 1))
                work[i] = slots[i]
    return solutions, tasks


def raw_solutions(workers: int = 1) -> list[CoveringTuple]:
    """All covering tuples produced by the search from the empty tuple.

    With ``workers > 1`` independent subtrees run in separate processes;
    the combined list is identical to the sequential one up to order.
    """
    sys.setrecursionlimit(10_000)
    if workers <= 1:
        return find_lattices(EMPTY_TUPLE, 0)
    from concurrent.futures import ProcessPoolExecutor

    head, tasks = _expand_frontier(8 * workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for chunk in pool.map(_subtree, tasks):
            head.extend(chunk)
    return head


def enumerate_minimal_coverings(workers: int = 1) -> list[CoveringTuple]:
    """The minimal coverings of Z^2 by up to six subgroups.

    Prunes every raw solution, deduplicates up to slot permutation, then
    keeps only tuples not strictly preceded by another tuple.  Both
    passes are order-normalized, so the outcome does not depend on the
    traversal or on the worker count.
    """
    unique: dict[tuple, CoveringTuple] = {}
    for t in raw_solutions(workers=workers):
        p = _normalize_slots(prune(t))
        unique.setdefault(_canonical_sort_key(p), p)
    candidates = [unique[k] for k in sorted(unique)]
    kept = []
    for key, cand in zip(sorted(unique), candidates):
        dominated = any(
            other_key != key and precedes(other, cand)
            for other_key, other in zip(sorted(unique), candidates)
        )
        if not dominated:
            kept.append(cand)
    return kept
