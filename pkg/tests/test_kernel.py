import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polarspec import CapacityError, CodeConfig, assemble_source, encode, generator_matrix


class TestGeneratorMatrix:
    def test_base_cases(self):
        assert generator_matrix(0).tolist() == [[1]]
        assert generator_matrix(1).tolist() == [[1, 0], [1, 1]]

    def test_lower_triangular_unit_diagonal(self):
        for n in range(7):
            mat = generator_matrix(n)
            assert np.array_equal(np.triu(mat, 1), np.zeros_like(mat))
            assert np.all(np.diag(mat) == 1)

    def test_row_weights_are_powers_of_two(self):
        # weight of row i is 2^popcount(i-1)
        mat = generator_matrix(5)
        for i in range(32):
            assert mat[i].sum() == 1 << bin(i).count("1")

    def test_size_limit(self):
        with pytest.raises(CapacityError):
            generator_matrix(7)
        generator_matrix(7, max_size=128)


class TestEncode:
    def test_matches_matrix_product(self):
        rng = np.random.default_rng(3)
        for n in range(0, 7):
            mat = generator_matrix(n, max_size=64)
            u = rng.integers(0, 2, size=(16, 1 << n)).astype(np.uint8)
            assert np.array_equal(encode(u), (u @ mat) % 2)

    def test_involution_exhaustive_small(self):
        for n in range(0, 5):
            N = 1 << n
            words = np.arange(1 << N, dtype=np.uint32)
            u = ((words[:, None] >> np.arange(N)) & 1).astype(np.uint8)
            assert np.array_equal(encode(encode(u)), u)

    def test_involution_randomized_large(self):
        rng = np.random.default_rng(11)
        for n in (8, 10, 12):
            u = rng.integers(0, 2, size=(4, 1 << n)).astype(np.uint8)
            assert np.array_equal(encode(encode(u)), u)

    @given(st.integers(0, 6), st.integers(0, 2**31 - 1), st.integers(0, 2**31 - 1))
    @settings(max_examples=60, deadline=None)
    def test_linearity(self, n, seed_a, seed_b):
        N = 1 << n
        a = np.random.default_rng(seed_a).integers(0, 2, N).astype(np.uint8)
        b = np.random.default_rng(seed_b).integers(0, 2, N).astype(np.uint8)
        assert np.array_equal(encode(a ^ b), encode(a) ^ encode(b))

    def test_single_vector_shape(self):
        out = encode(np.array([1, 0, 1, 1], dtype=np.uint8))
        assert out.shape == (4,)

    def test_rejects_bad_length(self):
        with pytest.raises(ValueError):
            encode(np.zeros(3, dtype=np.uint8))

    def test_does_not_mutate_input(self):
        u = np.array([1, 1, 0, 0], dtype=np.uint8)
        keep = u.copy()
        encode(u)
        assert np.array_equal(u, keep)


class TestCodeConfig:
    def test_basic_properties(self):
        cfg = CodeConfig(3, 4, (4, 6, 7, 8))
        assert cfg.N == 8
        assert cfg.rate == 0.5
        mask = cfg.frozen_mask()
        assert mask.tolist() == [True, True, True, False, True, False, False, False]

    def test_validation(self):
        with pytest.raises(ValueError):
            CodeConfig(2, 2, (1,))  # size mismatch
        with pytest.raises(ValueError):
            CodeConfig(2, 2, (3, 2))  # not increasing
        with pytest.raises(ValueError):
            CodeConfig(2, 2, (0, 1))  # out of range
        with pytest.raises(ValueError):
            CodeConfig(2, 2, (4, 5))  # out of range

    def test_empty_info_set(self):
        cfg = CodeConfig(2, 0, ())
        assert cfg.frozen_mask().all()


class TestAssembleSource:
    def test_scatter(self):
        cfg = CodeConfig(2, 2, (2, 4))
        u = assemble_source(np.array([1, 1], dtype=np.uint8), cfg)
        assert u.tolist() == [0, 1, 0, 1]

    def test_batch(self):
        cfg = CodeConfig(2, 2, (2, 4))
        bits = np.array([[1, 0], [0, 1]], dtype=np.uint8)
        u = assemble_source(bits, cfg)
        assert u.tolist() == [[0, 1, 0, 0], [0, 0, 0, 1]]

    def test_size_check(self):
        cfg = CodeConfig(2, 2, (2, 4))
        with pytest.raises(ValueError):
            assemble_source(np.zeros(3, dtype=np.uint8), cfg)
