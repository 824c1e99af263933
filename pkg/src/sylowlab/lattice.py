"""Full subgroup lattices for table-capped groups.

The construction walks conjugacy classes of subgroups: each class
representative is extended by every cyclic subgroup not already inside
it, and each new subgroup registers its entire conjugacy class at once.
Every subgroup H < K has a proper supplement of the form <H, c> with c
cyclic, so induction over maximal chains makes the sweep exhaustive.
"""

from __future__ import annotations

import heapq

from .errors import NotMaximal
from .group import PermGroup
from .perm import Permutation
from .tables import CayleyTable, get_table


class SubgroupLattice:
    """All subgroups of a group, indexed in a deterministic order.

    Subgroups are sorted by (order, sorted element indices).  Index 0 is
    always the trivial subgroup and the last index is the whole group.
    """

    __slots__ = ("parent", "ctx", "element_sets", "generator_sets",
                 "class_ids", "_maximal", "_groups")

    def __init__(self, parent: PermGroup, ctx: CayleyTable,
                 element_sets, generator_sets, class_ids):
        self.parent = parent
        self.ctx = ctx
        self.element_sets = element_sets
        self.generator_sets = generator_sets
        self.class_ids = class_ids
        self._maximal = None
        self._groups = {}

    def __len__(self) -> int:
        return len(self.element_sets)

    @property
    def top(self) -> int:
        return len(self.element_sets) - 1

    def order_of(self, i: int) -> int:
        return len(self.element_sets[i])

    def subgroup(self, i: int) -> PermGroup:
        if i == self.top:
            return self.parent
        if i not in self._groups:
            self._groups[i] = self.ctx.subgroup_from(
                self.element_sets[i], self.generator_sets[i])
        return self._groups[i]

    def generators_of(self, i: int) -> tuple[Permutation, ...]:
        return tuple(self.ctx.elements[g] for g in self.generator_sets[i])

    def index_of(self, sub: frozenset[int]) -> int:
        try:
            return self.element_sets.index(sub)
        except ValueError:
            raise KeyError("not a subgroup of the parent") from None

    def contains(self, i: int, j: int) -> bool:
        """True when subgroup j is contained in subgroup i."""
        return self.element_sets[j] <= self.element_sets[i]

    def classes(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for i, c in enumerate(self.class_ids):
            out.setdefault(c, []).append(i)
        return {c: tuple(v) for c, v in out.items()}

    def normal_indices(self) -> tuple[int, ...]:
        sizes: dict[int, int] = {}
        for c in self.class_ids:
            sizes[c] = sizes.get(c, 0) + 1
        return tuple(i for i, c in enumerate(self.class_ids) if sizes[c] == 1)

    def maximal_indices(self) -> tuple[int, ...]:
        """Indices of maximal proper subgroups."""
        if self._maximal is None:
            sets = self.element_sets
            n = len(sets[-1])
            out = []
            for i, s in enumerate(sets):
                li = len(s)
                if li == n:
                    continue
                if any(li < len(t) < n and li and len(t) % li == 0 and s < t
                       for t in sets):
                    continue
                out.append(i)
            self._maximal = tuple(out)
        return self._maximal

    def maximal_overgroups(self, i: int) -> tuple[int, ...]:
        s = self.element_sets[i]
        return tuple(j for j in self.maximal_indices() if s <= self.element_sets[j])

    def check_maximal(self, i: int) -> None:
        if i not in self.maximal_indices():
            raise NotMaximal(f"subgroup {i} is not maximal")


def subgroup_lattice(G: PermGroup, cap: int | None = None) -> SubgroupLattice:
    """Compute the full subgroup lattice of G.

    Requires the Cayley table, so the group order must fit the lattice
    cap.  The result is cached on the group.
    """
    if G._lattice is not None:
        return G._lattice
    ctx = get_table(G, cap)
    cyclics = ctx.cyclic_subgroups()

    all_subs: dict[frozenset[int], tuple[int, ...]] = {}
    cls_of: dict[frozenset[int], int] = {}
    n_classes = 0
    pending: list[tuple[int, tuple[int, ...], tuple[int, ...]]] = []

    def register(fs: frozenset[int], gens: tuple[int, ...]) -> None:
        nonlocal n_classes
        if fs in all_subs:
            return
        cid = n_classes
        n_classes += 1
        members = ctx.subgroup_class(fs)
        for m, conjor in members:
            if conjor:
                mg = tuple(sorted(ctx.conj(g, conjor) for g in gens))
            else:
                mg = gens
            all_subs[m] = mg
            cls_of[m] = cid
        rep = min((m for m, _ in members), key=sorted)
        heapq.heappush(pending, (len(rep), tuple(sorted(rep)), all_subs[rep]))

    trivial = frozenset((0,))
    register(trivial, ())
    full = ctx.n
    while pending:
        size, key, gens = heapq.heappop(pending)
        if size == full:
            continue
        fs = frozenset(key)
        for cgen, cfs in cyclics:
            if cfs <= fs:
                continue
            ext = gens + (cgen,)
            register(ctx.closure(ext), ext)

    order = sorted(all_subs, key=lambda s: (len(s), sorted(s)))
    # renumber classes by first appearance in the sorted order
    remap: dict[int, int] = {}
    class_ids = []
    for s in order:
        c = cls_of[s]
        if c not in remap:
            remap[c] = len(remap)
        class_ids.append(remap[c])
    lat = SubgroupLattice(G, ctx,
                          tuple(order),
                          tuple(all_subs[s] for s in order),
                          tuple(class_ids))
    with G._lock:
        if G._lattice is None:
            G._lattice = lat
    return G._lattice
