"""Permutation groups, orbit invariants, and the field-interaction rules."""
import random
from fractions import Fraction

import pytest

from heckeslopes.galois import (
    FACT_BISECTION_TRANSFERS,
    FACT_SLOPE_EQUALS_RATIONAL_BASE,
    FACT_SLOPE_ZERO_OVER_F,
    FACT_SLOPE_ZERO_OVER_F_TILDE,
    ClosureCapExceeded,
    FieldInteraction,
    Permutation,
    PermutationGroup,
    interact_rules,
)

KLEIN = PermutationGroup.parse("(0 1)(2 3);(0 2)(1 3)", 4)
D8 = PermutationGroup.parse("(0 1 2 3);(0 2)", 4)
S4 = PermutationGroup.parse("(0 1);(0 1 2 3)", 4)
A4 = PermutationGroup.parse("(0 1 2);(0 1)(2 3)", 4)
C4 = PermutationGroup.parse("(0 1 2 3)", 4)


class TestPermutation:
    def test_parse_cycles(self):
        p = Permutation.parse("(0 1)(2 3)", 4)
        assert p.images == (1, 0, 3, 2)

    def test_parse_image_list(self):
        assert Permutation.parse("1,0,3,2", 4) == Permutation.parse("(0 1)(2 3)", 4)

    def test_parse_identity(self):
        assert Permutation.parse("()", 3) == Permutation.identity(3)
        assert Permutation.parse("", 3) == Permutation.identity(3)

    def test_fixed_points_omitted(self):
        p = Permutation.parse("(1 2)", 4)
        assert p.images == (0, 2, 1, 3)

    @pytest.mark.parametrize("bad", ["(0 1", "(0 0)", "(0 9)", "0,0,1", "0,1"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            Permutation.parse(bad, 3)

    def test_str_round_trip(self):
        for text in ["(0 1)(2 3)", "(0 1 2 3)", "()"]:
            p = Permutation.parse(text, 4)
            assert Permutation.parse(str(p), 4) == p

    def test_composition_applies_right_first(self):
        p = Permutation.parse("(0 1)", 3)
        q = Permutation.parse("(1 2)", 3)
        assert (p * q).images == tuple(p.images[q.images[x]] for x in range(3))

    def test_inverse(self):
        g = Permutation.parse("(0 1 2 3)", 4)
        assert g * g.inverse() == Permutation.identity(4)
        assert g.inverse() == Permutation.parse("(0 3 2 1)", 4)

    def test_cycle_type(self):
        assert Permutation.parse("(0 1 2)(3 4)", 6).cycle_type() == (1, 2, 3)
        assert Permutation.identity(3).cycle_type() == (1, 1, 1)

    def test_orbit_lengths(self):
        g = Permutation.parse("(0 1 2)(3 4)", 6)
        assert g.max_orbit_length() == 3
        assert g.min_orbit_length() == 1
        assert Permutation.parse("(0 1 2 3)", 4).min_orbit_length() == 4

    @pytest.mark.parametrize(
        "text,n,expect",
        [
            ("(0 1)(2 3)", 4, True),
            ("(0 1 2)(3 4 5)", 6, True),
            ("()", 2, True),  # two fixed points are two equal orbits
            ("(0 1)", 3, False),
            ("()", 4, False),
            ("(0 1 2 3)", 4, False),
        ],
    )
    def test_bisects(self, text, n, expect):
        assert Permutation.parse(text, n).bisects() is expect


class TestGroupClosure:
    @pytest.mark.parametrize(
        "group,order",
        [(KLEIN, 4), (C4, 4), (D8, 8), (A4, 12), (S4, 24)],
    )
    def test_orders(self, group, order):
        assert group.order == order

    def test_trivial_group(self):
        g = PermutationGroup(3)
        assert g.order == 1
        assert g.elements == (Permutation.identity(3),)

    def test_elements_sorted_and_closed(self):
        els = D8.elements
        assert list(els) == sorted(els, key=lambda g: g.images)
        as_set = set(els)
        for a in els:
            assert a.inverse() in as_set
            for b in els:
                assert a * b in as_set

    def test_closure_cap(self):
        s6 = PermutationGroup.parse("(0 1);(0 1 2 3 4 5)", 6, cap=100)
        with pytest.raises(ClosureCapExceeded):
            s6.order

    def test_mixed_degrees_rejected(self):
        with pytest.raises(ValueError):
            PermutationGroup(3, [Permutation.parse("(0 1)", 4)])


class TestOrbitInvariants:
    @pytest.mark.parametrize(
        "group,lam,sigma",
        [
            (KLEIN, 2, Fraction(1, 2)),
            (D8, 4, 0),
            (S4, 4, 0),
            (A4, 3, Fraction(1, 4)),
            (PermutationGroup(3), 1, Fraction(2, 3)),
            (PermutationGroup(4), 1, Fraction(3, 4)),
            (PermutationGroup.parse("(0 2 4)(1 3 5)", 6), 3, Fraction(1, 2)),
        ],
    )
    def test_slope_fixtures(self, group, lam, sigma):
        assert group.max_orbit_length() == lam
        assert group.slope() == sigma
        assert isinstance(group.slope(), Fraction)

    def test_min_orbit_invariants(self):
        # the largest minimal orbit: D8's 4-cycles have a single orbit
        assert D8.max_min_orbit_length() == 4
        assert D8.min_orbit_slope() == 0
        # in S4 a transposition pins its fixed points, but the 4-cycles
        # still push the minimal orbit to 4
        assert S4.max_min_orbit_length() == 4
        # Klein: every non-identity element has all orbits of size 2
        assert KLEIN.max_min_orbit_length() == 2
        assert KLEIN.min_orbit_slope() == Fraction(1, 2)
        # A4: 3-cycles leave a fixed point, double transpositions don't
        assert A4.max_min_orbit_length() == 2
        assert A4.min_orbit_slope() == Fraction(1, 2)

    def test_zero_slope_iff_full_cycle(self):
        for group in (KLEIN, D8, S4, A4, C4):
            has_n_cycle = any(
                g.max_orbit_length() == group.degree for g in group.elements
            )
            assert (group.slope() == 0) is has_n_cycle

    def test_bisection(self):
        assert KLEIN.has_bisecting() is True
        assert KLEIN.bisecting_fraction() == Fraction(3, 4)
        assert D8.has_bisecting() is True
        assert D8.bisecting_fraction() == Fraction(3, 8)
        assert PermutationGroup(4).has_bisecting() is False
        assert PermutationGroup.parse("(0 2 4)(1 3 5)", 6).has_bisecting() is True

    def test_element_fraction(self):
        frac = D8.element_fraction(lambda g: g.max_orbit_length() == 4)
        assert frac == Fraction(1, 4)  # the two 4-cycles
        assert S4.element_fraction(lambda g: True) == 1


class TestBlockAction:
    def test_quotient_of_d8(self):
        quotient = D8.block_action([[0, 2], [1, 3]])
        assert quotient.degree == 2
        assert quotient.order == 2

    def test_singleton_blocks_iso(self):
        q = KLEIN.block_action([[0], [1], [2], [3]])
        assert q.order == KLEIN.order
        assert q.slope() == KLEIN.slope()

    def test_unstable_partition_rejected(self):
        with pytest.raises(ValueError):
            S4.block_action([[0, 1], [2, 3]])

    def test_unequal_blocks_rejected(self):
        with pytest.raises(ValueError):
            KLEIN.block_action([[0], [1, 2, 3]])

    def test_bad_cover_rejected(self):
        with pytest.raises(ValueError):
            KLEIN.block_action([[0, 1], [1, 2]])

    def test_semistability_on_random_block_groups(self):
        # groups built to preserve the partition {0,1}{2,3}{4,5}: block
        # permutation plus arbitrary flips inside blocks
        rng = random.Random(4025)
        blocks = [[0, 1], [2, 3], [4, 5]]
        for _ in range(30):
            gens = []
            for _g in range(rng.randint(1, 3)):
                order = rng.sample(range(3), 3)
                images = [0] * 6
                for tgt, src in enumerate(order):
                    flip = rng.random() < 0.5
                    a, b = blocks[src]
                    ta, tb = blocks[tgt]
                    images[a] = tb if flip else ta
                    images[b] = ta if flip else tb
                gens.append(Permutation(images))
            group = PermutationGroup(6, gens)
            quotient = group.block_action(blocks)
            assert 2 * quotient.max_orbit_length() >= group.max_orbit_length()
            assert quotient.slope() <= group.slope()

    def test_subgroup_monotonicity(self):
        # Klein <= D8 <= S4 as actions on the same four points
        chain = [KLEIN, D8, S4]
        for small, big in zip(chain, chain[1:]):
            assert small.max_orbit_length() <= big.max_orbit_length()
            assert small.slope() >= big.slope()


class TestInteractRules:
    def test_prime_degree_not_dividing_base(self):
        meta = FieldInteraction(deg_K=13, deg_F=2)
        assert interact_rules(meta) == {FACT_SLOPE_ZERO_OVER_F}

    def test_prime_degree_dividing_base_is_silent(self):
        assert interact_rules(FieldInteraction(deg_K=13, deg_F=13)) == frozenset()
        assert interact_rules(FieldInteraction(deg_K=13, deg_F=26)) == frozenset()

    def test_composite_degree_is_silent(self):
        assert interact_rules(FieldInteraction(deg_K=4, deg_F=3)) == frozenset()

    def test_symmetric_group_odd_tilde_degree(self):
        meta = FieldInteraction(galois_group_kind="symmetric", deg_F_tilde=3)
        assert interact_rules(meta) == {FACT_SLOPE_ZERO_OVER_F_TILDE}

    def test_symmetric_group_even_tilde_degree_is_silent(self):
        meta = FieldInteraction(galois_group_kind="symmetric", deg_F_tilde=4)
        assert interact_rules(meta) == frozenset()

    def test_other_group_kinds_do_not_fire_rule_two(self):
        meta = FieldInteraction(galois_group_kind="alternating", deg_F_tilde=3)
        assert interact_rules(meta) == frozenset()

    def test_coprime_discriminants_transfer(self):
        meta = FieldInteraction(disc_K=33, disc_F=8)
        assert interact_rules(meta) == {
            FACT_SLOPE_EQUALS_RATIONAL_BASE,
            FACT_BISECTION_TRANSFERS,
        }

    def test_shared_discriminant_factor_is_silent(self):
        # |disc| values 44 and 8 share the factor 4, so the coprimality
        # rule must not fire even though both fields are "different"
        assert interact_rules(FieldInteraction(disc_K=44, disc_F=8)) == frozenset()

    def test_negative_discriminants_use_absolute_value(self):
        meta = FieldInteraction(disc_K=-3, disc_F=8)
        assert interact_rules(meta) == {
            FACT_SLOPE_EQUALS_RATIONAL_BASE,
            FACT_BISECTION_TRANSFERS,
        }

    def test_rules_accumulate(self):
        meta = FieldInteraction(
            deg_K=5, deg_F=2, galois_group_kind="symmetric", deg_F_tilde=3,
            disc_K=5, disc_F=8,
        )
        assert interact_rules(meta) == {
            FACT_SLOPE_ZERO_OVER_F,
            FACT_SLOPE_ZERO_OVER_F_TILDE,
            FACT_SLOPE_EQUALS_RATIONAL_BASE,
            FACT_BISECTION_TRANSFERS,
        }

    def test_empty_metadata_is_silent(self):
        assert interact_rules(FieldInteraction()) == frozenset()

    def test_bad_group_kind_rejected(self):
        with pytest.raises(ValueError):
            FieldInteraction(galois_group_kind="sporadic")

    def test_nonpositive_degree_rejected(self):
        with pytest.raises(ValueError):
            FieldInteraction(deg_K=0)
