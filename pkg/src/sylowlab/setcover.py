"""Exact minimum set cover over bitmask candidates.

Branch and bound: branch on the uncovered element with the fewest
remaining candidates, seed the incumbent with a greedy cover, and prune
with a disjoint-element lower bound.  Everything is deterministic, so
results never depend on iteration order of the caller.
"""

from __future__ import annotations

from itertools import combinations


def _greedy(full: int, masks: list[int]) -> list[int]:
    chosen = []
    rem = full
    while rem:
        best, best_gain = -1, 0
        for i, m in enumerate(masks):
            gain = (m & rem).bit_count()
            if gain > best_gain:
                best, best_gain = i, gain
        if best < 0:
            raise ValueError("universe is not coverable by the candidates")
        chosen.append(best)
        rem &= ~masks[best]
    return chosen


def _lower_bound(rem: int, masks: list[int]) -> int:
    # pick an uncovered element, discard everything any of its candidate
    # sets could also cover, repeat: each round needs its own set
    bound = 0
    r = rem
    while r:
        e_bit = r & -r
        reach = 0
        for m in masks:
            if m & e_bit:
                reach |= m
        bound += 1
        r &= ~reach
        r &= ~e_bit
    return bound


def min_cover(universe_size: int, masks: list[int]) -> tuple[int, tuple[int, ...]]:
    """Smallest family of candidate sets covering all universe bits.

    Returns (size, indices into ``masks``).  Raises ValueError when some
    element lies in no candidate.
    """
    full = (1 << universe_size) - 1
    if full == 0:
        return 0, ()
    union = 0
    for m in masks:
        union |= m
    if union & full != full:
        raise ValueError("universe is not coverable by the candidates")

    # dominance: a candidate inside another can be dropped
    keep = []
    for i, m in enumerate(masks):
        mi = m & full
        dominated = any(
            (mi | (other & full)) == (other & full) and (j < i or mi != (other & full))
            for j, other in enumerate(masks) if j != i)
        if not dominated and mi:
            keep.append((i, mi))

    kept_masks = [m for _, m in keep]
    greedy = _greedy(full, kept_masks)
    best_size = len(greedy)
    best_sol = [keep[i][0] for i in greedy]

    by_element = {}
    for bit in range(universe_size):
        b = 1 << bit
        by_element[b] = [i for i, m in enumerate(kept_masks) if m & b]

    def search(rem: int, chosen: list[int]) -> None:
        nonlocal best_size, best_sol
        if not rem:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_sol = [keep[i][0] for i in chosen]
            return
        if len(chosen) + _lower_bound(rem, kept_masks) >= best_size:
            return
        pick = min((b for b in by_element if rem & b),
                   key=lambda b: (len(by_element[b]), b))
        cands = sorted(by_element[pick],
                       key=lambda i: (-(kept_masks[i] & rem).bit_count(), i))
        for i in cands:
            search(rem & ~kept_masks[i], chosen + [i])

    search(full, [])
    return best_size, tuple(sorted(best_sol))


def min_cover_exhaustive(universe_size: int, masks: list[int]) -> int:
    """Reference solver: try every subset by increasing size.

    Only usable for small candidate counts; the branch-and-bound solver
    is tested against this.
    """
    full = (1 << universe_size) - 1
    if full == 0:
        return 0
    for size in range(1, len(masks) + 1):
        for combo in combinations(range(len(masks)), size):
            u = 0
            for i in combo:
                u |= masks[i]
            if u & full == full:
                return size
    raise ValueError("universe is not coverable by the candidates")
