import numpy as np
import pytest

from mirnet.errors import AlignmentError, InsufficientDataError
from mirnet.ingest import SymbolSequence
from mirnet.lz import (
    entropy_rate,
    join,
    joint_entropy_rate,
    match_lengths,
    mutual_lz,
)

from oracles import brute_match_lengths


class TestMatchLengths:
    def test_constant_run(self):
        assert match_lengths([0, 0, 0, 0]).tolist() == [1, 4, 3, 2]

    def test_alternating(self):
        # frozen from the brute-force oracle: the symbol at position 2 has
        # no earlier occurrence, so its match length is 1
        assert match_lengths([0, 1, 0, 1]).tolist() == [1, 1, 3, 2]

    def test_all_distinct(self):
        assert match_lengths([4, 2, 7, 1, 9]).tolist() == [1] * 5

    def test_end_cap(self):
        # matches may overlap their own start but never pass the end
        lam = match_lengths([0, 0, 0, 0, 0, 0])
        assert lam.tolist() == [1, 6, 5, 4, 3, 2]
        for i, v in enumerate(lam):
            assert v <= len(lam) - i + 1

    def test_too_short(self):
        with pytest.raises(InsufficientDataError):
            match_lengths([0])

    def test_oracle_equivalence(self):
        rng = np.random.default_rng(2024)
        for _ in range(200):
            alpha = int(rng.integers(2, 8))
            n = int(rng.integers(2, 257))
            seq = rng.integers(0, alpha, size=n)
            assert match_lengths(seq).tolist() == brute_match_lengths(seq)


class TestEntropyRate:
    def test_iid_uniform_alpha4(self):
        rng = np.random.default_rng(7)
        est = entropy_rate(rng.integers(0, 4, size=100_000))
        assert 1.9 <= est.value <= 2.1
        assert est.n == 100_000
        assert est.alphabet_size == 4

    def test_constant_sequence_near_zero(self):
        est = entropy_rate(np.zeros(4096, dtype=int), alphabet_size=2)
        assert est.value <= 0.02

    def test_periodic_sequence_near_zero(self):
        est = entropy_rate(np.tile([0, 1], 2048))
        assert est.value <= 0.03

    def test_refuses_short_sequences(self):
        with pytest.raises(InsufficientDataError, match="minimum"):
            entropy_rate(np.zeros(100, dtype=int))

    def test_allow_short_warns(self):
        with pytest.warns(UserWarning, match="finite-sample"):
            entropy_rate(np.zeros(100, dtype=int), allow_short=True)

    def test_recoding_invariance(self):
        rng = np.random.default_rng(11)
        x = rng.integers(0, 5, size=2000)
        perm = rng.permutation(5)
        assert (
            entropy_rate(x, allow_short=True).value
            == entropy_rate(perm[x], allow_short=True).value
        )

    def test_monotone_convergence_iid(self):
        # estimates at n=1e5 should beat estimates at n=1e3 (median of 10)
        rng = np.random.default_rng(99)
        err_small, err_big = [], []
        for _ in range(10):
            err_small.append(
                abs(entropy_rate(rng.integers(0, 4, 1000), allow_short=True).value - 2.0)
            )
            err_big.append(abs(entropy_rate(rng.integers(0, 4, 100_000)).value - 2.0))
        assert np.median(err_big) < np.median(err_small)

    def test_accepts_symbol_sequence(self):
        rng = np.random.default_rng(3)
        sym = SymbolSequence("A", 4, rng.integers(0, 4, size=600))
        est = entropy_rate(sym)
        assert est.alphabet_size == 4

    def test_overshoot_flag(self):
        rng = np.random.default_rng(5)
        est = entropy_rate(rng.integers(0, 4, size=100_000))
        assert not est.overshoot_flagged


class TestJoin:
    def test_direct_formula(self):
        z = join(SymbolSequence("x", 2, [0, 1]), SymbolSequence("y", 2, [1, 0]))
        assert z.symbols.tolist() == [2, 1]
        assert z.alphabet_size == 4

    def test_self_join_is_injective_recoding(self):
        x = SymbolSequence("x", 3, [0, 1, 2, 1, 0])
        z = join(x, x)
        assert z.symbols.tolist() == [v * 4 for v in [0, 1, 2, 1, 0]]

    def test_product_alphabet(self):
        rng = np.random.default_rng(0)
        x = SymbolSequence("x", 4, rng.integers(0, 4, 50))
        y = SymbolSequence("y", 10, rng.integers(0, 10, 50))
        assert join(x, y).alphabet_size == 40

    def test_components_roundtrip(self):
        rng = np.random.default_rng(1)
        x = SymbolSequence("x", 4, rng.integers(0, 4, 100))
        y = SymbolSequence("y", 7, rng.integers(0, 7, 100))
        rx, ry = join(x, y).components()
        assert np.array_equal(rx, x.symbols)
        assert np.array_equal(ry, y.symbols)

    def test_length_mismatch(self):
        with pytest.raises(AlignmentError):
            join(SymbolSequence("x", 2, [0, 1]), SymbolSequence("y", 2, [0, 1, 0]))


class TestJointAndMutual:
    def test_self_joint_equals_marginal(self):
        rng = np.random.default_rng(21)
        x = SymbolSequence("x", 4, rng.integers(0, 4, 2000))
        hx = entropy_rate(x, allow_short=True).value
        hxx = joint_entropy_rate(x, x, allow_short=True).value
        assert hxx == hx

    def test_constant_component_adds_nothing(self):
        rng = np.random.default_rng(22)
        y = SymbolSequence("y", 4, rng.integers(0, 4, 5000))
        const = SymbolSequence("c", 2, np.zeros(5000, dtype=int))
        hy = entropy_rate(y, allow_short=True).value
        hcy = joint_entropy_rate(const, y, allow_short=True).value
        assert hcy == pytest.approx(hy, abs=1e-12)

    def test_joint_at_least_each_marginal(self):
        rng = np.random.default_rng(23)
        for _ in range(20):
            x = SymbolSequence("x", 3, rng.integers(0, 3, 800))
            y = SymbolSequence("y", 4, rng.integers(0, 4, 800))
            hxy = joint_entropy_rate(x, y, allow_short=True).value
            assert hxy >= entropy_rate(x, allow_short=True).value - 1e-12
            assert hxy >= entropy_rate(y, allow_short=True).value - 1e-12

    def test_mutual_self_equals_entropy(self):
        rng = np.random.default_rng(24)
        x = SymbolSequence("x", 4, rng.integers(0, 4, 3000))
        assert mutual_lz(x, x, allow_short=True) == pytest.approx(
            entropy_rate(x, allow_short=True).value, abs=1e-12
        )

    def test_mutual_symmetry_exact(self):
        rng = np.random.default_rng(25)
        for _ in range(10):
            x = SymbolSequence("x", 3, rng.integers(0, 3, 700))
            y = SymbolSequence("y", 5, rng.integers(0, 5, 700))
            assert mutual_lz(x, y, allow_short=True) == mutual_lz(y, x, allow_short=True)

    def test_permutation_remap_preserves_information(self):
        rng = np.random.default_rng(26)
        x = SymbolSequence("x", 4, rng.integers(0, 4, 20_000))
        perm = np.array([2, 0, 3, 1])
        y = SymbolSequence("y", 4, perm[x.symbols])
        assert mutual_lz(x, y) == pytest.approx(entropy_rate(x).value, abs=1e-12)

    def test_independent_mutual_shrinks_with_n(self):
        # the raw estimator carries a positive finite-sample offset for
        # independent sources; it must shrink as n grows
        rng = np.random.default_rng(27)
        small = [
            mutual_lz(rng.integers(0, 4, 2000), rng.integers(0, 4, 2000), allow_short=True)
            for _ in range(5)
        ]
        big = [
            mutual_lz(rng.integers(0, 4, 100_000), rng.integers(0, 4, 100_000))
            for _ in range(3)
        ]
        assert np.median(np.abs(big)) < np.median(np.abs(small))
        assert np.median(np.abs(big)) < 0.3
