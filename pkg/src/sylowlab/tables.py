"""Cayley-table context for dense subgroup computations.

For groups within the lattice cap we index all elements (sorted by image
table, so the identity is index 0) and precompute the full
multiplication table.  Subgroups become frozensets of indices and the
heavy lattice / covering / counting loops run on plain integers.
"""

from __future__ import annotations

from . import config
from .errors import CapExceeded
from .group import PermGroup
from .perm import Permutation


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


class CayleyTable:
    __slots__ = ("group", "elements", "index", "table", "inv", "elt_order", "gen_idx")

    def __init__(self, group: PermGroup, cap: int | None = None):
        limit = config.lattice_cap(cap)
        n = group.order()
        if n > limit:
            raise CapExceeded("cayley table", n, limit)
        els = group.elements(n)
        imgs = [e.images for e in els]
        index = {im: i for i, im in enumerate(imgs)}
        table = []
        for a in imgs:
            row = [0] * n
            for j, b in enumerate(imgs):
                row[j] = index[tuple(b[x - 1] for x in a)]
            table.append(row)
        inv = [0] * n
        for i, e in enumerate(els):
            inv[i] = index[e.inverse().images]
        self.group = group
        self.elements = els
        self.index = {e: i for i, e in enumerate(els)}
        self.table = table
        self.inv = inv
        self.elt_order = [e.order() for e in els]
        self.gen_idx = tuple(self.index[g] for g in group.generators)
        assert els[0].is_identity()

    @property
    def n(self) -> int:
        return len(self.elements)

    # -- element level -----------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def conj(self, x: int, g: int) -> int:
        """Index of g^-1 * x * g."""
        return self.table[self.table[self.inv[g]][x]][g]

    def commute(self, a: int, b: int) -> bool:
        return self.table[a][b] == self.table[b][a]

    def closure(self, seeds) -> frozenset[int]:
        """Subgroup generated by the seed indices."""
        seeds = sorted({s for s in seeds if s != 0})
        if not seeds:
            return frozenset((0,))
        els = {0, *seeds}
        frontier = list(els)
        table = self.table
        while frontier:
            new = []
            for a in frontier:
                row = table[a]
                for s in seeds:
                    c = row[s]
                    if c not in els:
                        els.add(c)
                        new.append(c)
            frontier = new
        return frozenset(els)

    # -- subgroup level ----------------------------------------------------

    def conj_set(self, sub: frozenset[int], g: int) -> frozenset[int]:
        table = self.table
        gi_row = table[self.inv[g]]
        return frozenset(table[gi_row[x]][g] for x in sub)

    def subgroup_class(self, sub: frozenset[int]) -> list[tuple[frozenset[int], int]]:
        """Conjugacy class of a subgroup, as (conjugate, conjugating element) pairs."""
        seen = {sub: 0}
        queue = [sub]
        qi = 0
        while qi < len(queue):
            s = queue[qi]
            qi += 1
            c = seen[s]
            for g in self.gen_idx:
                t = self.conj_set(s, g)
                if t not in seen:
                    seen[t] = self.table[c][g]
                    queue.append(t)
        return list(seen.items())

    def normalizes(self, gens, g: int, sub: frozenset[int]) -> bool:
        return all(self.conj(x, g) in sub for x in gens)

    def cyclic_subgroups(self) -> list[tuple[int, frozenset[int]]]:
        """All nontrivial cyclic subgroups as (least generator, element set)."""
        seen: dict[frozenset[int], int] = {}
        table = self.table
        for x in range(1, self.n):
            acc = [0]
            cur = x
            while cur != 0:
                acc.append(cur)
                cur = table[cur][x]
            fs = frozenset(acc)
            if fs not in seen:
                seen[fs] = x
        return sorted(((g, fs) for fs, g in seen.items()),
                      key=lambda t: (len(t[1]), sorted(t[1])))

    def p_elements_in(self, sub, p: int) -> list[int]:
        """Indices in ``sub`` of p-power order, identity included."""
        orders = self.elt_order
        return sorted(x for x in sub if is_p_power(orders[x], p))

    def sylow_in(self, sub: frozenset[int], p: int) -> tuple[frozenset[int], tuple[int, ...]]:
        """A Sylow p-subgroup of the subgroup ``sub``, with its generators.

        Starts from a p-element of maximal order and repeatedly adjoins a
        p-element of the normalizer until the full p-part is reached.
        """
        target = p_part(len(sub), p)
        if target == 1:
            return frozenset((0,)), ()
        orders = self.elt_order
        best, best_ord = 0, 1
        for x in sorted(sub):
            o = orders[x]
            if o > best_ord and is_p_power(o, p):
                best, best_ord = x, o
        gens = [best]
        P = self.closure(gens)
        while len(P) < target:
            grown = False
            for y in sorted(sub):
                if y in P or not is_p_power(orders[y], p):
                    continue
                if self.normalizes(gens, y, P):
                    gens.append(y)
                    P = self.closure(gens)
                    grown = True
                    break
            if not grown:  # pragma: no cover - cannot happen for true subgroups
                raise AssertionError("Sylow extension stalled")
        return P, tuple(gens)

    def normalizer_in(self, sub, gens, target: frozenset[int]) -> list[int]:
        """Elements of ``sub`` normalizing the subgroup ``target = <gens>``."""
        return [g for g in sorted(sub) if self.normalizes(gens, g, target)]

    def sylow_count_in(self, sub: frozenset[int], p: int) -> int:
        """Number of Sylow p-subgroups of the subgroup ``sub``."""
        if len(sub) % p:
            return 1
        P, gens = self.sylow_in(sub, p)
        norm = self.normalizer_in(sub, gens, P)
        count = len(sub) // len(norm)
        assert count % p == 1, "Sylow count must be 1 mod p"
        return count

    def subgroup_from(self, fs: frozenset[int], gens=()) -> PermGroup:
        """Materialize an index set as a PermGroup (generators reduced)."""
        from .group import span_from_elements

        if gens:
            return PermGroup(self.group.degree, [self.elements[i] for i in gens])
        return span_from_elements(self.group.degree, [self.elements[i] for i in sorted(fs)])


def get_table(G: PermGroup, cap: int | None = None) -> CayleyTable:
    if G._table is None:
        tbl = CayleyTable(G, cap)
        with G._lock:
            if G._table is None:
                G._table = tbl
    return G._table
