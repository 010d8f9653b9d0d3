"""Exact convex-dominance feasibility."""

import itertools
import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from adequa.exactlp import convex_dominates


def brute_force_dominates(target, candidates, denom=12):
    """Grid search over rational convex weights with small denominators."""
    k = len(candidates)
    d = len(target)
    for weights in itertools.product(range(denom + 1), repeat=k):
        if sum(weights) != denom:
            continue
        combo = [
            sum(Fraction(w, denom) * Fraction(c[j]) for w, c in zip(weights, candidates))
            for j in range(d)
        ]
        if all(combo[j] >= target[j] for j in range(d)):
            return True
    return False


class TestBasics:
    def test_empty_candidates(self):
        assert not convex_dominates((0, 0), [])

    def test_single_candidate(self):
        assert convex_dominates((1, 2), [(1, 2)])
        assert convex_dominates((1, 2), [(3, 5)])
        assert not convex_dominates((1, 2), [(2, 0)])

    def test_mixture_needed(self):
        # neither candidate dominates alone; the midpoint does
        assert convex_dominates((1, 1), [(2, 0), (0, 2)])
        # but a target above the segment is infeasible
        assert not convex_dominates((2, 2), [(3, 0), (0, 3)])

    def test_dimension_mismatch(self):
        import pytest

        with pytest.raises(ValueError):
            convex_dominates((1,), [(1, 2)])

    def test_fractional_inputs(self):
        assert convex_dominates(
            (Fraction(1, 2), Fraction(1, 2)), [(1, 0), (0, 1)]
        )


class TestAgainstBruteForce:
    def test_random_instances(self):
        rng = random.Random(23)
        for _ in range(300):
            d = rng.randint(1, 3)
            k = rng.randint(1, 3)
            target = tuple(rng.randint(-3, 3) for _ in range(d))
            cands = [
                tuple(rng.randint(-3, 3) for _ in range(d)) for _ in range(k)
            ]
            got = convex_dominates(target, cands)
            want = brute_force_dominates(target, cands)
            # the grid may miss feasible points but never invents them
            if want:
                assert got
            if not got:
                assert not want

    @given(
        st.integers(-4, 4),
        st.integers(-4, 4),
        st.lists(
            st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=1, max_size=4
        ),
    )
    @settings(max_examples=200)
    def test_certificates_are_sound(self, tx, ty, cands):
        # feasibility is monotone: relaxing the target preserves it
        target = (tx, ty)
        if convex_dominates(target, cands):
            assert convex_dominates((tx - 1, ty), cands)
            assert convex_dominates((tx, ty - 1), cands)
        else:
            assert not convex_dominates((tx + 1, ty), cands)

    def test_dominated_candidate_is_redundant(self):
        rng = random.Random(29)
        for _ in range(100):
            target = tuple(rng.randint(-3, 3) for _ in range(2))
            cands = [tuple(rng.randint(-3, 3) for _ in range(2)) for _ in range(3)]
            lo = tuple(min(c[j] for c in cands) for j in range(2))
            assert convex_dominates(target, cands) == convex_dominates(
                target, cands + [lo]
            )
