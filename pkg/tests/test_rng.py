"""The documented deterministic generator: reference vectors and stream laws."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from puzzlebench.rng import SplitMix64, derive

#: Reference outputs of the splitmix64 algorithm for seed 1234567 and 0,
#: matching the published C reference implementation.
VECTORS_1234567 = [
    6457827717110365317,
    3203168211198807973,
    9817491932198370423,
    4593380528125082431,
    16408922859458223821,
]
VECTORS_0 = [
    16294208416658607535,
    7960286522194355700,
    487617019471545679,
]


class TestReferenceVectors:
    def test_seed_1234567(self):
        rng = SplitMix64(1234567)
        assert [rng.next_u64() for _ in range(5)] == VECTORS_1234567

    def test_seed_zero(self):
        rng = SplitMix64(0)
        assert [rng.next_u64() for _ in range(3)] == VECTORS_0

    def test_seed_wraps_to_64_bits(self):
        assert SplitMix64(2**64).next_u64() == VECTORS_0[0]


class TestRandrange:
    @given(st.integers(0, 2**64 - 1), st.integers(1, 10**9))
    @settings(max_examples=200, deadline=None)
    def test_in_range(self, seed, n):
        assert 0 <= SplitMix64(seed).randrange(n) < n

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            SplitMix64(1).randrange(0)

    def test_deterministic(self):
        a = SplitMix64(99)
        b = SplitMix64(99)
        assert [a.randrange(6) for _ in range(50)] == [b.randrange(6) for _ in range(50)]

    def test_roughly_uniform(self):
        rng = SplitMix64(7)
        counts = [0] * 3
        for _ in range(30_000):
            counts[rng.randrange(3)] += 1
        assert all(9_500 < c < 10_500 for c in counts)


class TestDerive:
    def test_distinct_streams(self):
        seeds = {derive(42, i) for i in range(1000)}
        assert len(seeds) == 1000

    def test_differs_from_base(self):
        assert derive(42, 0) != 42

    @given(st.integers(0, 2**64 - 1), st.integers(0, 2**32))
    @settings(max_examples=100, deadline=None)
    def test_stable(self, seed, index):
        assert derive(seed, index) == derive(seed, index)
