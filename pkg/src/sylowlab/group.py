"""Finite permutation groups with a deterministic stabilizer chain.

Orders and membership come from a Schreier-Sims stabilizer chain built
deterministically (generators are sorted on construction, orbits are
explored breadth-first, and each new base point is the smallest point
moved by the residue that created it), so repeated runs agree exactly.

Enumeration-heavy helpers (element lists, conjugacy classes, brute-force
centralizers and normalizers) respect the element cap from
:mod:`sylowlab.config`.
"""

from __future__ import annotations

import threading
from typing import Callable, Iterable

from . import config
from .errors import (
    CapExceeded,
    DegreeMismatch,
    NotAMember,
    NotASubgroup,
    NotNormal,
)
from .perm import Permutation


class _Chain:
    """Base and strong generating set, built by deterministic Schreier-Sims.

    Level i stores the strong generators whose deepest fixed base prefix
    is base[:i]; the group stabilizing base[:i] is generated by the
    levels i and deeper.  Orbits are closed bottom-up with the classic
    restart discipline, so after every ``add_gen`` the chain is a valid
    BSGS and ``order``/``contains`` are exact.
    """

    __slots__ = ("degree", "base", "gens_at", "orbits", "forced_base")

    def __init__(self, degree: int, forced_base: tuple[int, ...] = ()):
        self.degree = degree
        self.base: list[int] = list(forced_base)
        self.gens_at: list[list[Permutation]] = [[] for _ in forced_base]
        # orbits[i][beta] = (u, u_inv) with u(base[i]) == beta
        self.orbits: list[dict[int, tuple[Permutation, Permutation]]] = []
        ident = Permutation.identity(degree)
        for b in forced_base:
            self.orbits.append({b: (ident, ident)})
        self.forced_base = forced_base

    def order(self) -> int:
        n = 1
        for orb in self.orbits:
            n *= len(orb)
        return n

    def strong_gens(self, level: int) -> list[Permutation]:
        out: list[Permutation] = []
        for j in range(level, len(self.base)):
            out.extend(self.gens_at[j])
        return out

    def _sift_from(self, g: Permutation, start: int) -> tuple[Permutation, int]:
        for i in range(start, len(self.base)):
            beta = g._images[self.base[i] - 1]
            pair = self.orbits[i].get(beta)
            if pair is None:
                return g, i
            g = g * pair[1]
        return g, len(self.base)

    def contains(self, g: Permutation) -> bool:
        residue, level = self._sift_from(g, 0)
        return level == len(self.base) and residue.is_identity()

    def add_gen(self, g: Permutation) -> bool:
        """Sift ``g`` and absorb it if new.  Returns True when the chain grew."""
        residue, level = self._sift_from(g, 0)
        if level == len(self.base) and residue.is_identity():
            return False
        self._insert(residue, level)
        self._close(level)
        return True

    def _insert(self, g: Permutation, level: int) -> None:
        if level == len(self.base):
            self.base.append(min(g.moved_points()))
            self.gens_at.append([])
            ident = Permutation.identity(self.degree)
            self.orbits.append({self.base[-1]: (ident, ident)})
        self.gens_at[level].append(g)

    def _recompute_orbit(self, i: int) -> None:
        b = self.base[i]
        gens = self.strong_gens(i)
        ident = Permutation.identity(self.degree)
        trans = {b: (ident, ident)}
        queue = [b]
        qi = 0
        while qi < len(queue):
            beta = queue[qi]
            qi += 1
            u = trans[beta][0]
            for s in gens:
                gamma = s._images[beta - 1]
                if gamma not in trans:
                    v = u * s
                    trans[gamma] = (v, v.inverse())
                    queue.append(gamma)
        self.orbits[i] = trans

    def _close(self, start: int) -> None:
        # levels deeper than ``start`` are already up to date
        i = start
        while i >= 0:
            self._recompute_orbit(i)
            inserted_at = self._check_schreier(i)
            if inserted_at is None:
                i -= 1
            else:
                i = inserted_at

    def _check_schreier(self, i: int) -> int | None:
        trans = self.orbits[i]
        gens = self.strong_gens(i)
        for beta in sorted(trans):
            u = trans[beta][0]
            for s in gens:
                gamma = s._images[beta - 1]
                schreier = u * s * trans[gamma][1]
                residue, j = self._sift_from(schreier, i + 1)
                if not (j == len(self.base) and residue.is_identity()):
                    self._insert(residue, j)
                    return j
        return None

    def elements(self) -> list[Permutation]:
        out = [Permutation.identity(self.degree)]
        for i in range(len(self.base) - 1, -1, -1):
            trans = self.orbits[i]
            out = [h * trans[beta][0] for beta in sorted(trans) for h in out]
        return out

    def all_gens(self) -> list[Permutation]:
        return self.strong_gens(0)


class PermGroup:
    """A permutation group on {1..degree} given by generators.

    Instances are immutable; expensive results (chain, element list,
    conjugacy classes) are cached with at-most-once computation, so a
    group object can be shared freely across threads.
    """

    __slots__ = (
        "_degree", "_generators", "_chain", "_elements", "_element_set",
        "_classes", "_lattice", "_table", "_lock",
    )

    def __init__(self, degree: int, generators: Iterable[Permutation] = (), *,
                 _chain: _Chain | None = None):
        if degree < 0:
            raise ValueError("degree must be >= 0")
        gens = []
        seen = set()
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(f"generator degree {g.degree} != group degree {degree}")
            if g.is_identity() or g in seen:
                continue
            seen.add(g)
            gens.append(g)
        self._degree = degree
        self._generators = tuple(sorted(gens))
        self._chain = _chain
        self._elements = None
        self._element_set = None
        self._classes = None
        self._lattice = None
        self._table = None
        self._lock = threading.RLock()

    # -- basics ------------------------------------------------------------

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self._generators

    def identity(self) -> Permutation:
        return Permutation.identity(self._degree)

    def chain(self) -> _Chain:
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    chain = _Chain(self._degree)
                    for g in self._generators:
                        chain.add_gen(g)
                    self._chain = chain
        return self._chain

    def order(self) -> int:
        return self.chain().order()

    def base(self) -> tuple[int, ...]:
        return tuple(self.chain().base)

    def is_trivial(self) -> bool:
        return not self._generators

    def __contains__(self, g: Permutation) -> bool:
        if g.degree != self._degree:
            raise DegreeMismatch(f"element degree {g.degree} != group degree {self._degree}")
        return self.chain().contains(g)

    def __repr__(self) -> str:
        gens = ", ".join(g.cycle_string() for g in self._generators[:4])
        more = ", ..." if len(self._generators) > 4 else ""
        return f"PermGroup(degree={self._degree}, <{gens}{more}>)"

    # -- enumeration -------------------------------------------------------

    def elements(self, cap: int | None = None) -> tuple[Permutation, ...]:
        """All elements, sorted lexicographically by image table."""
        if self._elements is None:
            limit = config.element_cap(cap)
            n = self.order()
            if n > limit:
                raise CapExceeded("element enumeration", n, limit)
            with self._lock:
                if self._elements is None:
                    els = self.chain().elements()
                    els.sort()
                    self._elements = tuple(els)
        return self._elements

    def element_set(self, cap: int | None = None) -> frozenset[Permutation]:
        if self._element_set is None:
            es = frozenset(self.elements(cap))
            self._element_set = es
        return self._element_set

    def orbit(self, point: int) -> frozenset[int]:
        if not 1 <= point <= self._degree:
            raise ValueError(f"point {point} outside 1..{self._degree}")
        seen = {point}
        queue = [point]
        qi = 0
        while qi < len(queue):
            beta = queue[qi]
            qi += 1
            for g in self._generators:
                gamma = g._images[beta - 1]
                if gamma not in seen:
                    seen.add(gamma)
                    queue.append(gamma)
        return frozenset(seen)

    def orbits(self) -> tuple[frozenset[int], ...]:
        left = set(range(1, self._degree + 1))
        out = []
        while left:
            orb = self.orbit(min(left))
            out.append(orb)
            left -= orb
        return tuple(sorted(out, key=min))

    def is_transitive(self) -> bool:
        return self._degree > 0 and len(self.orbit(1)) == self._degree

    # -- conjugacy ---------------------------------------------------------

    def conjugacy_classes(self, cap: int | None = None) -> tuple[tuple[Permutation, frozenset[Permutation]], ...]:
        """All conjugacy classes as (lexicographically least representative, class)."""
        if self._classes is None:
            els = self.elements(cap)
            with self._lock:
                if self._classes is None:
                    seen: set[Permutation] = set()
                    out = []
                    for x in els:
                        if x in seen:
                            continue
                        cls = conjugacy_class(self, x, cap)
                        seen |= cls
                        out.append((x, cls))
                    self._classes = tuple(out)
        return self._classes


def generated_subgroup(degree: int, generators: Iterable[Permutation]) -> PermGroup:
    return PermGroup(degree, generators)


def span_from_elements(degree: int, elements: Iterable[Permutation]) -> PermGroup:
    """Group generated by the given elements, with a reduced generating set.

    Elements already generated by earlier ones are dropped, so feeding in
    a full element list yields a small generating set plus a ready chain.
    """
    chain = _Chain(degree)
    gens = []
    for g in elements:
        if chain.add_gen(g):
            gens.append(g)
    return PermGroup(degree, gens, _chain=chain)


def is_subgroup(H: PermGroup, G: PermGroup) -> bool:
    if H.degree != G.degree:
        raise DegreeMismatch(f"degrees {H.degree} and {G.degree} differ")
    return all(h in G for h in H.generators)


def conjugacy_class(G: PermGroup, x: Permutation, cap: int | None = None) -> frozenset[Permutation]:
    """Conjugacy class of x in G, by breadth-first closure under generator conjugation."""
    if x not in G:
        raise NotAMember(f"{x!r} is not in the group")
    limit = config.element_cap(cap)
    gens = G.generators
    invs = [g.inverse() for g in gens]
    seen = {x}
    queue = [x]
    qi = 0
    while qi < len(queue):
        y = queue[qi]
        qi += 1
        for g, gi in zip(gens, invs):
            z = gi * y * g
            if z not in seen:
                if len(seen) >= limit:
                    raise CapExceeded("conjugacy class", len(seen) + 1, limit)
                seen.add(z)
                queue.append(z)
    return frozenset(seen)


def centralizer(G: PermGroup, x: Permutation, cap: int | None = None) -> PermGroup:
    """Centralizer of x in G by brute scan over the element list."""
    if x not in G:
        raise NotAMember(f"{x!r} is not in the group")
    found = [g for g in G.elements(cap) if g * x == x * g]
    return span_from_elements(G.degree, found)


def normalizer(G: PermGroup, H: PermGroup, cap: int | None = None) -> PermGroup:
    """Normalizer of H in G by brute scan over the element list."""
    if not is_subgroup(H, G):
        raise NotASubgroup("H is not a subgroup of G")
    hgens = H.generators
    if not hgens:
        return G
    # small subgroups: test conjugates against the element set, else sift
    if H.order() <= 1024:
        hset = H.element_set()
        member = hset.__contains__
    else:
        member = lambda g: g in H
    found = []
    for g in G.elements(cap):
        gi = g.inverse()
        if all(member(gi * h * g) for h in hgens):
            found.append(g)
    return span_from_elements(G.degree, found)


def is_normal(G: PermGroup, H: PermGroup) -> bool:
    if not is_subgroup(H, G):
        raise NotASubgroup("H is not a subgroup of G")
    for g in G.generators:
        gi = g.inverse()
        for h in H.generators:
            if (gi * h * g) not in H:
                return False
    return True


def normal_closure(G: PermGroup, seeds: Iterable[Permutation]) -> PermGroup:
    """Smallest normal subgroup of G containing the seed elements."""
    chain = _Chain(G.degree)
    gens: list[Permutation] = []
    queue: list[Permutation] = []
    for s in seeds:
        if s not in G:
            raise NotAMember(f"{s!r} is not in the group")
        if chain.add_gen(s):
            gens.append(s)
            queue.append(s)
    ggens = G.generators
    ginvs = [g.inverse() for g in ggens]
    qi = 0
    while qi < len(queue):
        s = queue[qi]
        qi += 1
        for g, gi in zip(ggens, ginvs):
            z = gi * s * g
            if chain.add_gen(z):
                gens.append(z)
                queue.append(z)
    return PermGroup(G.degree, gens, _chain=chain)


def p_residual(G: PermGroup, p: int, cap: int | None = None) -> PermGroup:
    """Smallest normal subgroup with quotient of order coprime to p.

    Equals the subgroup generated by all p-elements, computed here as the
    normal closure of one Sylow p-subgroup.
    """
    if G.order() % p:
        return PermGroup(G.degree)
    from . import sylow  # local import: sylow builds on this module

    P = sylow.sylow_subgroup(G, p, cap)
    return normal_closure(G, P.generators)


def point_stabilizer(G: PermGroup, point: int) -> PermGroup:
    """Stabilizer of a point, read off a chain based at that point."""
    if not 1 <= point <= G.degree:
        raise ValueError(f"point {point} outside 1..{G.degree}")
    chain = _Chain(G.degree, forced_base=(point,))
    for g in G.generators:
        chain.add_gen(g)
    return PermGroup(G.degree, chain.strong_gens(1))


def quotient_group(G: PermGroup, N: PermGroup, cap: int | None = None
                   ) -> tuple[PermGroup, Callable[[Permutation], Permutation]]:
    """Quotient G/N as a permutation group on the right cosets of N.

    Returns the quotient together with the projection homomorphism.
    """
    if not is_subgroup(N, G):
        raise NotASubgroup("N is not a subgroup of G")
    if not is_normal(G, N):
        raise NotNormal("N is not normal in G")
    n_els = N.elements(cap)

    def canon(x: Permutation) -> tuple[int, ...]:
        # lexicographically least image table in the coset N*x
        return min((h * x)._images for h in n_els)

    ident = G.identity()
    reps = [ident]
    index = {canon(ident): 0}
    qi = 0
    while qi < len(reps):
        r = reps[qi]
        qi += 1
        for g in G.generators:
            key = canon(r * g)
            if key not in index:
                index[key] = len(reps)
                reps.append(r * g)
    deg_q = len(reps)

    def project(g: Permutation) -> Permutation:
        if g not in G:
            raise NotAMember(f"{g!r} is not in the group")
        images = [0] * deg_q
        for i, r in enumerate(reps):
            images[i] = index[canon(r * g)] + 1
        return Permutation(images)

    Q = PermGroup(deg_q, [project(g) for g in G.generators])
    if Q.order() * N.order() != G.order():
        raise AssertionError("coset action does not realize the quotient")
    return Q, project


def is_p_solvable(G: PermGroup, p: int, cap: int | None = None) -> bool:
    """Whether the upper p-series reaches the whole group.

    Alternately factors out the largest normal subgroup of order coprime
    to p and the largest normal p-subgroup; the group is p-solvable when
    this terminates at the trivial group.
    """
    from .lattice import subgroup_lattice  # local import, avoids a cycle

    Q = G
    while Q.order() > 1:
        lat = subgroup_lattice(Q, cap)
        best = None
        for i in lat.normal_indices():
            n = lat.order_of(i)
            if 1 < n and n % p != 0 and (best is None or n > lat.order_of(best)):
                best = i
        if best is None:
            target = _p_part(Q.order(), p)
            for i in lat.normal_indices():
                n = lat.order_of(i)
                if 1 < n == _p_part(n, p) and (best is None or n > lat.order_of(best)):
                    best = i
        if best is None:
            return False
        Q, _ = quotient_group(Q, lat.subgroup(best), cap)
    return True


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out
