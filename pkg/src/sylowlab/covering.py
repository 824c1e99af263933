"""Minimal coverings of p-elements by proper subgroups.

The covering number of a group generated by its p-elements is the least
number of proper subgroups whose union contains every element of p-power
order.  Any cover by proper subgroups refines to one by maximal
subgroups, so the solver only considers maximal subgroups; a test oracle
re-solves small instances over all proper subgroups to confirm.
"""

from __future__ import annotations

import math

from .errors import ClassNotCoverable, PreconditionFailed
from .group import PermGroup, conjugacy_class, p_residual
from .lattice import subgroup_lattice
from .perm import Permutation
from .reports import CheckReport, timed
from .setcover import min_cover
from .tables import is_p_power


def p_elements(G: PermGroup, p: int, cap: int | None = None) -> frozenset[Permutation]:
    """All elements of p-power order, including the identity."""
    return frozenset(x for x in G.elements(cap) if is_p_power(x.order(), p))


def _cover_instance(lat, universe_idx: list[int], candidate_indices):
    """Bitmask cover instance over the given universe of element indices."""
    pos = {e: i for i, e in enumerate(universe_idx)}
    masks = []
    for ci in candidate_indices:
        m = 0
        for e in lat.element_sets[ci]:
            if e in pos:
                m |= 1 << pos[e]
        masks.append(m)
    return masks


def _sigma_instance(G: PermGroup, p: int, cap: int | None):
    if p_residual(G, p, cap).order() != G.order():
        raise PreconditionFailed("group must be generated by its p-elements")
    lat = subgroup_lattice(G, cap)
    ctx = lat.ctx
    universe = sorted(i for i in range(ctx.n)
                      if i and is_p_power(ctx.elt_order[i], p))
    # the identity is a p-element too, but it lies in every candidate
    # subgroup, so it is left out of the cover universe
    maximal = lat.maximal_indices()
    assert all(0 in lat.element_sets[ci] for ci in maximal)
    return lat, universe, maximal


def sigma_p(G: PermGroup, p: int, cap: int | None = None) -> int | float:
    """Minimum number of proper subgroups covering all p-elements.

    Returns ``math.inf`` when no cover exists, which happens exactly for
    the nontrivial cyclic groups generated by a single p-element (their
    generator lies in no proper subgroup) and for the trivial group.
    """
    return sigma_p_cover(G, p, cap)[0]


def sigma_p_cover(G: PermGroup, p: int, cap: int | None = None):
    """Like sigma_p, also returning the witness cover as a tuple of
    generator tuples (empty for the infinity case)."""
    lat, universe, maximal = _sigma_instance(G, p, cap)
    if not maximal:
        return math.inf, ()
    covered = set()
    for ci in maximal:
        covered |= lat.element_sets[ci]
    if any(e not in covered for e in universe):
        # some p-element generates the whole group: G is cyclic
        return math.inf, ()
    masks = _cover_instance(lat, universe, maximal)
    size, chosen = min_cover(len(universe), masks)
    return size, tuple(lat.generators_of(maximal[i]) for i in chosen)


def class_cover_number(G: PermGroup, x: Permutation, cap: int | None = None) -> int:
    """Minimum number of proper subgroups covering the conjugacy class of x."""
    return class_cover(G, x, cap)[0]


def class_cover(G: PermGroup, x: Permutation, cap: int | None = None):
    """Minimum cover of x^G by maximal subgroups, with the witness."""
    o = x.order()
    if o > 1:
        q = min(d for d in range(2, o + 1) if o % d == 0)
        if not is_p_power(o, q):
            raise PreconditionFailed("element must have prime power order")
    lat = subgroup_lattice(G, cap)
    ctx = lat.ctx
    cls = conjugacy_class(G, x, cap)
    universe = sorted(ctx.index[y] for y in cls)
    u_set = set(universe)
    maximal = lat.maximal_indices()
    useful = [ci for ci in maximal if lat.element_sets[ci] & u_set]
    masks = _cover_instance(lat, universe, useful)
    try:
        size, chosen = min_cover(len(universe), masks)
    except ValueError:
        raise ClassNotCoverable(
            "a conjugate lies in no proper subgroup") from None
    return size, tuple(lat.generators_of(useful[i]) for i in chosen)


def sigma_lower_bound_check(G: PermGroup, p: int,
                            cap: int | None = None) -> CheckReport:
    """For G generated by its p-elements: the covering number is >= p+1."""
    report = CheckReport("covering-lower-bound", False)
    with timed(report):
        value = sigma_p(G, p, cap)
        report.ok = value >= p + 1
        report.details = {
            "p": p,
            "sigma": value,
            "lower_bound": p + 1,
            "attained": value == p + 1,
        }
    return report
