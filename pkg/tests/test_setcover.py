"""Tests for the exact set cover solver against exhaustive search."""

import random

import pytest

from sylowlab.setcover import min_cover, min_cover_exhaustive


def random_instance(rng, universe_size, n_masks):
    """Random coverable instance: every element appears in some mask."""
    masks = []
    for _ in range(n_masks):
        m = 0
        for b in range(universe_size):
            if rng.random() < 0.4:
                m |= 1 << b
        masks.append(m)
    # patch coverage gaps so the instance is feasible
    covered = 0
    for m in masks:
        covered |= m
    full = (1 << universe_size) - 1
    missing = full & ~covered
    if missing:
        masks.append(missing)
    return masks


class TestSmallInstances:
    def test_empty_universe(self):
        assert min_cover(0, []) == (0, ())
        assert min_cover(0, [0]) == (0, ())

    def test_single_set(self):
        size, picked = min_cover(3, [0b111])
        assert size == 1
        assert picked == (0,)

    def test_two_disjoint_sets(self):
        size, picked = min_cover(4, [0b0011, 0b1100])
        assert size == 2
        assert picked == (0, 1)

    def test_uncoverable_raises(self):
        with pytest.raises(ValueError):
            min_cover(3, [0b011])
        with pytest.raises(ValueError):
            min_cover(2, [])

    def test_duplicate_masks_keep_lowest_index(self):
        size, picked = min_cover(2, [0b11, 0b11, 0b11])
        assert (size, picked) == (1, (0,))

    def test_dominated_mask_never_needed(self):
        # index 0 is a strict subset of index 1
        size, picked = min_cover(3, [0b001, 0b011, 0b100])
        assert size == 2
        assert picked == (1, 2)

    def test_greedy_is_not_trusted(self):
        # greedy grabs the 4-element set and then needs two more;
        # the optimum is the two 3-element sets
        masks = [0b001111, 0b010011, 0b101100, 0b010000, 0b100000]
        size, picked = min_cover(6, masks)
        assert size == 2
        assert picked == (1, 2)

    def test_cover_is_actually_a_cover(self):
        rng = random.Random(7)
        for _ in range(20):
            masks = random_instance(rng, 10, 8)
            size, picked = min_cover(10, masks)
            union = 0
            for i in picked:
                union |= masks[i]
            assert union == (1 << 10) - 1
            assert size == len(picked) == len(set(picked))


class TestAgainstExhaustive:
    @pytest.mark.parametrize("seed", range(12))
    def test_random_instances_match(self, seed):
        rng = random.Random(seed)
        universe = rng.randint(4, 12)
        n_masks = rng.randint(3, 14)
        masks = random_instance(rng, universe, n_masks)
        fast_size, fast_picked = min_cover(universe, masks)
        assert fast_size == min_cover_exhaustive(universe, masks)
        union = 0
        for i in fast_picked:
            union |= masks[i]
        assert union == (1 << universe) - 1

    def test_deterministic(self):
        rng = random.Random(99)
        masks = random_instance(rng, 9, 10)
        assert min_cover(9, masks) == min_cover(9, list(masks))
