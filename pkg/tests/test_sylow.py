"""Sylow subgroup and Sylow count tests.

nu_p goes through a normalizer index; the oracle recounts subgroups of
full p-power order straight from the subgroup lattice, so the two
derivations are independent.
"""

from fractions import Fraction

import pytest

from conftest import alternating, cyclic, dihedral, klein_four, perm, symmetric
from sylowlab.errors import (
    CapExceeded,
    NotASubgroup,
    NotMaximal,
    NotNormal,
    NotPSolvable,
    PreconditionFailed,
    SylowNotContained,
)
from sylowlab.group import PermGroup, generated_subgroup, is_subgroup
from sylowlab.lattice import subgroup_lattice
from sylowlab.sylow import (
    nu_monotonicity_check,
    nu_fpr_identity_check,
    nu_p,
    nu_quotient_identity_check,
    p_solvable_divisibility_check,
    sylow_ratio_bound_check,
    sylow_ratio_gap_scan,
    sylow_subgroup,
    sylow_subgroup_containing,
    sylow_subgroups,
)
from sylowlab.tables import p_part


def alt5_point_subgroup():
    """Copy of the alternating group on {1..4} sitting inside degree 5."""
    return PermGroup(5, [perm("(1 2 3)", 5), perm("(1 2)(3 4)", 5)])


class TestSylowSubgroup:
    @pytest.mark.parametrize("make,p,order", [
        (lambda: symmetric(4), 2, 8),
        (lambda: symmetric(4), 3, 3),
        (lambda: alternating(5), 5, 5),
        (lambda: alternating(5), 2, 4),
        (lambda: alternating(6), 3, 9),
        (lambda: symmetric(6), 2, 16),
        (lambda: dihedral(6), 2, 4),
        (lambda: cyclic(12), 2, 4),
    ])
    def test_order_is_p_part(self, make, p, order):
        G = make()
        P = sylow_subgroup(G, p)
        assert P.order() == order == p_part(G.order(), p)
        assert is_subgroup(P, G)

    def test_prime_not_dividing_gives_trivial(self):
        assert sylow_subgroup(symmetric(3), 5).order() == 1

    def test_sylow_2_of_symmetric_4_is_dihedral(self):
        P = sylow_subgroup(symmetric(4), 2)
        orders = sorted(x.order() for x in P.elements())
        # dihedral of order 8: five involutions, two elements of order 4
        assert orders == [1, 2, 2, 2, 2, 2, 4, 4]

    def test_deterministic(self):
        a = sylow_subgroup(alternating(5), 2)
        b = sylow_subgroup(alternating(5), 2)
        assert frozenset(a.elements()) == frozenset(b.elements())

    def test_containing_a_given_subgroup(self):
        G = symmetric(4)
        Q = PermGroup(4, [perm("(1 2)(3 4)", 4)])
        P = sylow_subgroup_containing(G, Q, 2)
        assert P.order() == 8
        assert is_subgroup(Q, P)

    def test_enumeration_matches_count(self):
        G = alternating(5)
        syl = sylow_subgroups(G, 2)
        assert len(syl) == nu_p(G, 2) == 5
        assert all(len(s) == 4 for s in syl)

    def test_enumeration_cap(self):
        with pytest.raises(CapExceeded):
            sylow_subgroups(alternating(6), 2, cap=30)


class TestNu:
    @pytest.mark.parametrize("make,p,count", [
        (lambda: alternating(4), 3, 4),
        (lambda: alternating(5), 3, 10),
        (lambda: alternating(5), 5, 6),
        (lambda: alternating(5), 2, 5),
        (lambda: alternating(6), 3, 10),
        (lambda: symmetric(4), 2, 3),
        (lambda: symmetric(4), 3, 4),
        (lambda: symmetric(5), 5, 6),
        (lambda: dihedral(7), 2, 7),
        (lambda: alternating(8), 5, 336),
    ])
    def test_frozen_counts(self, make, p, count):
        assert nu_p(make(), p) == count

    def test_p_group_has_one(self):
        assert nu_p(dihedral(4), 2) == 1
        assert nu_p(cyclic(9), 3) == 1

    def test_trivial_when_p_absent(self):
        assert nu_p(symmetric(3), 7) == 1

    @pytest.mark.parametrize("make", [
        lambda: symmetric(4),
        lambda: alternating(5),
        lambda: alternating(6),
        lambda: dihedral(6),
        lambda: symmetric(5),
    ])
    def test_lattice_recount_oracle(self, make):
        """nu_p must equal the number of maximal-p-power-order subgroups."""
        G = make()
        lat = subgroup_lattice(G)
        for p in (2, 3, 5):
            if G.order() % p:
                continue
            target = p_part(G.order(), p)
            by_lattice = sum(1 for i in range(len(lat))
                             if lat.order_of(i) == target)
            assert nu_p(G, p) == by_lattice

    def test_congruent_one_mod_p(self):
        for make in (lambda: symmetric(4), lambda: alternating(5),
                     lambda: alternating(6), lambda: dihedral(9)):
            G = make()
            for p in (2, 3, 5):
                if G.order() % p == 0:
                    assert nu_p(G, p) % p == 1


class TestMonotonicity:
    def test_strict_case(self):
        G = symmetric(3)
        H = PermGroup(3, [perm("(1 2)", 3)])
        r = nu_monotonicity_check(G, H, 2)
        assert r.ok
        assert r.details["nu_H"] == 1 and r.details["nu_G"] == 3
        assert not r.details["equal"]

    def test_equality_case_alternating_6_over_5(self):
        H = PermGroup(6, [perm("(1 2 3 4 5)", 6), perm("(1 2 3)", 6)])
        r = nu_monotonicity_check(alternating(6), H, 3)
        assert r.ok
        assert r.details["nu_H"] == r.details["nu_G"] == 10
        assert r.details["unique_containment"]
        assert r.details["product_covers_G"]

    def test_equality_case_dihedral_in_alternating_5(self):
        # normalizer of a 5-cycle: same number of Sylow 2-subgroups
        G = alternating(5)
        H = PermGroup(5, [perm("(1 2 3 4 5)", 5), perm("(2 5)(3 4)", 5)])
        assert H.order() == 10
        r = nu_monotonicity_check(G, H, 2)
        assert r.ok
        assert r.details["equal"]

    def test_whole_group(self):
        r = nu_monotonicity_check(symmetric(4), symmetric(4), 2)
        assert r.ok and r.details["equal"]

    def test_rejects_non_subgroup(self):
        with pytest.raises(NotASubgroup):
            nu_monotonicity_check(alternating(5), symmetric(5), 5)


class TestQuotientIdentity:
    def test_symmetric_4_mod_klein(self):
        G = symmetric(4)
        N = PermGroup(4, [perm("(1 2)(3 4)", 4), perm("(1 3)(2 4)", 4)])
        r3 = nu_quotient_identity_check(G, N, 3)
        assert r3.ok
        assert (r3.details["nu_G"], r3.details["nu_quotient"],
                r3.details["nu_PN"]) == (4, 1, 4)
        r2 = nu_quotient_identity_check(G, N, 2)
        assert r2.ok
        assert (r2.details["nu_G"], r2.details["nu_quotient"],
                r2.details["nu_PN"]) == (3, 3, 1)

    def test_trivial_normal_subgroup(self):
        G = alternating(5)
        N = PermGroup(5, [])
        r = nu_quotient_identity_check(G, N, 5)
        assert r.ok and r.details["nu_G"] == 6

    def test_alternating_in_symmetric(self):
        r = nu_quotient_identity_check(symmetric(4), alternating(4, ), 3)
        assert r.ok

    def test_rejects_non_normal(self):
        with pytest.raises(NotNormal):
            nu_quotient_identity_check(symmetric(3),
                                       PermGroup(3, [perm("(1 2)", 3)]), 2)


class TestFprIdentity:
    def test_alternating_5_over_4(self):
        r = nu_fpr_identity_check(alternating(5), alt5_point_subgroup(), 3)
        assert r.ok
        assert r.details["sylow_ratio"] == Fraction(2, 5)
        assert r.details["fixed_point_ratio"] == Fraction(2, 5)

    def test_symmetric_4_over_dihedral(self):
        H = PermGroup(4, [perm("(1 2 3 4)", 4), perm("(1 3)", 4)])
        r = nu_fpr_identity_check(symmetric(4), H, 2)
        assert r.ok
        assert r.details["sylow_ratio"] == Fraction(1, 3)

    def test_symmetric_3_over_order_2(self):
        H = PermGroup(3, [perm("(1 2)", 3)])
        r = nu_fpr_identity_check(symmetric(3), H, 2)
        assert r.ok
        assert r.details["sylow_ratio"] == Fraction(1, 3)

    def test_rejects_non_maximal(self):
        H = PermGroup(4, [perm("(1 2)(3 4)", 4)])
        with pytest.raises(NotMaximal):
            nu_fpr_identity_check(symmetric(4), H, 2)

    def test_rejects_sylow_not_contained(self):
        with pytest.raises(SylowNotContained):
            nu_fpr_identity_check(alternating(5), alt5_point_subgroup(), 5)


class TestRatioBound:
    def test_sharp_at_alternating_5_over_4(self):
        r = sylow_ratio_bound_check(alternating(5), alt5_point_subgroup(), 3)
        assert r.ok
        assert r.details["ratio"] == Fraction(2, 5) == r.details["bound"]
        assert r.details["bound_attained"]

    def test_sharp_at_symmetric_3_for_p_2(self):
        H = PermGroup(3, [perm("(1 2)", 3)])
        r = sylow_ratio_bound_check(symmetric(3), H, 2)
        assert r.ok and r.details["bound_attained"]

    def test_refined_bound_when_exclusions_clear(self):
        # the alternating group on 6 points has no obstructing factor at p=5
        G = alternating(6)
        H = PermGroup(6, [perm("(1 2 3 4 5)", 6), perm("(2 5)(3 4)", 6)])
        r = sylow_ratio_bound_check(G, H, 5, exclusions_clear=True)
        assert r.ok
        assert r.details["strict_bound_holds"]

    def test_rejects_group_not_generated_by_p_elements(self):
        H = PermGroup(3, [perm("(1 2 3)", 3)])
        with pytest.raises(PreconditionFailed):
            sylow_ratio_bound_check(symmetric(3), H, 3)

    def test_rejects_whole_group(self):
        with pytest.raises(PreconditionFailed):
            sylow_ratio_bound_check(alternating(5), alternating(5, ), 3)

    def test_rejects_sylow_not_contained(self):
        with pytest.raises(SylowNotContained):
            sylow_ratio_bound_check(alternating(5), alt5_point_subgroup(), 5)


class TestPSolvableDivisibility:
    def test_symmetric_4_both_primes(self):
        r2 = p_solvable_divisibility_check(symmetric(4), 2)
        assert r2.ok and r2.details["nu_values"] == [1, 3]
        r3 = p_solvable_divisibility_check(symmetric(4), 3)
        assert r3.ok and r3.details["nu_values"] == [1, 4]

    def test_p_group(self):
        r = p_solvable_divisibility_check(dihedral(4), 2)
        assert r.ok and r.details["nu_values"] == [1]

    def test_rejects_non_p_solvable(self):
        with pytest.raises(NotPSolvable):
            p_solvable_divisibility_check(alternating(5), 5)


class TestRatioGapScan:
    def test_odd_prime_scan_is_clean(self):
        groups = [("sym4", symmetric(4)), ("alt5", alternating(5)),
                  ("dih9", dihedral(9))]
        r = sylow_ratio_gap_scan(groups, 3, Fraction(1, 2))
        assert r.ok and r.details["violations"] == []

    def test_p_2_family_member_is_flagged(self):
        # the alternating group on 5 points has a dihedral subgroup of
        # order 6 with 3 of the 5 Sylow 2-subgroups
        r = sylow_ratio_gap_scan([("alt5", alternating(5))], 2,
                                 Fraction(1, 2))
        assert not r.ok
        top = r.details["violations"][0]
        assert (top["nu_H"], top["nu_G"]) == (3, 5)
        assert Fraction(top["ratio_num"], top["ratio_den"]) == Fraction(3, 5)

    def test_bound_one_never_flags(self):
        r = sylow_ratio_gap_scan([("sym4", symmetric(4))], 2, Fraction(1))
        assert r.ok

    def test_capped_group_is_skipped_with_notice(self):
        r = sylow_ratio_gap_scan(
            [("alt7", alternating(7)), ("klein", klein_four())],
            2, Fraction(1, 2))
        assert r.ok
        assert any("alt7" in n for n in r.notices)
        assert r.details["groups_scanned"] == 1

    def test_violations_sorted_by_descending_ratio(self):
        r = sylow_ratio_gap_scan(
            [("alt5", alternating(5)), ("alt6", alternating(6))],
            2, Fraction(1, 5))
        ratios = [Fraction(v["ratio_num"], v["ratio_den"])
                  for v in r.details["violations"]]
        assert ratios == sorted(ratios, reverse=True)
        assert len(ratios) >= 2
