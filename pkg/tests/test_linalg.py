"""Unit tests for the linear algebra kernel"""

import unittest

import numpy as np
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from src.errors import ValidationError
from src.linalg import (
    BipartiteOperator,
    antisymmetric_projector,
    herm_eig,
    hermitian_abs,
    is_hermitian,
    is_psd,
    kron_operators,
    min_eigenvalue,
    partial_trace,
    partial_transpose,
    permute_subsystems,
    swap_operator,
    symmetric_projector,
    trace_distance,
    trace_norm,
)
from src.states import max_entangled, random_state


def random_hermitian(n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (g + g.conj().T) / 2


class TestBipartiteOperator(unittest.TestCase):
    """Test construction and arithmetic"""

    def test_shape_mismatch_rejected(self):
        """Test that the matrix shape must match the dimensions"""
        with self.assertRaises(ValidationError):
            BipartiteOperator(np.eye(5), 2, 2)

    def test_non_positive_dims_rejected(self):
        """Test that dimensions must be positive"""
        with self.assertRaises(ValidationError):
            BipartiteOperator(np.eye(1), 0, 1)

    def test_matrix_is_copied_and_read_only(self):
        """Test that the stored matrix is a read-only copy"""
        source = np.eye(4)
        op = BipartiteOperator(source, 2, 2)
        source[0, 0] = 5.0
        self.assertEqual(op.matrix[0, 0], 1.0)
        with self.assertRaises(ValueError):
            op.matrix[0, 0] = 2.0

    def test_arithmetic_keeps_dims(self):
        """Test that sums and scalings keep the local dimensions"""
        a = BipartiteOperator(np.eye(6), 2, 3)
        b = (a + a) * 0.5 - a
        self.assertEqual(b.dims, (2, 3))
        assert_allclose(b.matrix, np.zeros((6, 6)))

    def test_mismatched_dims_rejected(self):
        """Test that operators with different dimensions cannot be added"""
        with self.assertRaises(ValidationError):
            BipartiteOperator(np.eye(6), 2, 3) + BipartiteOperator(np.eye(6), 3, 2)


class TestHermiticity(unittest.TestCase):
    """Test Hermiticity checks"""

    def test_hermitian_accepted(self):
        """Test that a Hermitian matrix passes the check"""
        self.assertTrue(is_hermitian(random_hermitian(4, 1)))

    def test_non_hermitian_rejected_with_diagnostic(self):
        """Test that a non-Hermitian input reports its deviation"""
        x = np.array([[0, 1], [0, 0]], dtype=complex)
        self.assertFalse(is_hermitian(x))
        with self.assertRaises(ValidationError) as ctx:
            herm_eig(x)
        self.assertIn("not Hermitian", str(ctx.exception))


class TestPartialOperations(unittest.TestCase):
    """Test partial transpose, partial trace and reindexing"""

    def test_partial_transpose_of_bell_state_is_half_swap(self):
        """Test that the partial transpose of Phi^2 is F/2"""
        phi = max_entangled(2)
        assert_allclose(partial_transpose(phi).matrix, swap_operator(2) / 2, atol=1e-15)

    def test_partial_transpose_entry_mapping(self):
        """Test the index mapping of the partial transpose"""
        x = np.arange(36, dtype=complex).reshape(6, 6)
        op = BipartiteOperator(x, 2, 3)
        pt = partial_transpose(op).matrix
        # ((i, j), (k, l)) <- ((i, l), (k, j))
        self.assertEqual(pt[0 * 3 + 1, 1 * 3 + 2], x[0 * 3 + 2, 1 * 3 + 1])

    def test_marginals_of_max_entangled(self):
        """Test that both marginals of Phi^d are I/d"""
        phi = max_entangled(4)
        assert_allclose(partial_trace(phi, keep="A"), np.eye(4) / 4, atol=1e-15)
        assert_allclose(partial_trace(phi, keep="B"), np.eye(4) / 4, atol=1e-15)

    def test_partial_trace_rejects_bad_subsystem(self):
        """Test that an unknown subsystem is rejected"""
        with self.assertRaises(ValidationError):
            partial_trace(max_entangled(2), keep="C")

    def test_kron_operators_regroups_cut(self):
        """Test that Phi^2 with Phi^3 across the AA'|BB' cut is Phi^6"""
        joint = kron_operators(max_entangled(2), max_entangled(3))
        self.assertEqual(joint.dims, (6, 6))
        # Phi^2 (x) Phi^3 on AA'|BB' is Phi^6
        assert_allclose(joint.matrix, max_entangled(6).matrix, atol=1e-14)

    def test_permute_subsystems_round_trip(self):
        """Test that a permutation and its inverse cancel"""
        rho = random_state(2, 3, 2, seed=5).matrix
        swapped = permute_subsystems(rho, [2, 3], [1, 0])
        assert_allclose(permute_subsystems(swapped, [3, 2], [1, 0]), rho, atol=1e-15)

    def test_permute_rejects_non_permutation(self):
        """Test that a non-permutation is rejected"""
        with self.assertRaises(ValidationError):
            permute_subsystems(np.eye(4), [2, 2], [0, 0])


class TestProjectors(unittest.TestCase):
    """Test the flip operator and symmetric/antisymmetric projectors"""

    def test_projectors_are_complementary(self):
        """Test that the symmetric and antisymmetric projectors sum to I"""
        for d in (2, 3):
            s, a = symmetric_projector(d), antisymmetric_projector(d)
            assert_allclose(s + a, np.eye(d * d), atol=1e-15)
            assert_allclose(s @ a, np.zeros((d * d, d * d)), atol=1e-15)
            self.assertAlmostEqual(np.trace(s).real, d * (d + 1) / 2)
            self.assertAlmostEqual(np.trace(a).real, d * (d - 1) / 2)

    def test_swap_squares_to_identity(self):
        """Test that the swap squares to I"""
        flip = swap_operator(3)
        assert_allclose(flip @ flip, np.eye(9), atol=1e-15)


class TestSpectral(unittest.TestCase):
    """Test eigen-derived quantities"""

    def test_hermitian_abs(self):
        """Test |h| on a diagonal matrix"""
        assert_allclose(hermitian_abs(np.diag([1.0, -2.0])), np.diag([1.0, 2.0]), atol=1e-15)

    def test_hermitian_abs_zero_tolerance(self):
        """Test that tiny eigenvalues are zeroed"""
        assert_allclose(hermitian_abs(np.diag([1e-14, -3.0]), zero_tol=1e-12), np.diag([0.0, 3.0]), atol=1e-15)

    def test_trace_norm_of_transposed_phi(self):
        """Test that the partial transpose of Phi^d has trace norm d"""
        for d in (2, 3, 4):
            self.assertAlmostEqual(trace_norm(partial_transpose(max_entangled(d)).matrix), d, places=12)

    def test_trace_distance_of_orthogonal_states(self):
        """Test that orthogonal states are at trace distance one"""
        self.assertAlmostEqual(trace_distance(np.diag([1.0, 0.0]), np.diag([0.0, 1.0])), 1.0)

    def test_is_psd(self):
        """Test the PSD check near zero"""
        self.assertTrue(is_psd(np.diag([1.0, 0.0]), 1e-10))
        self.assertFalse(is_psd(np.diag([1.0, -1e-3]), 1e-10))

    def test_herm_eig_reconstructs(self):
        """Test ascending eigenvalues and reconstruction"""
        h = random_hermitian(5, 3)
        values, vectors = herm_eig(h)
        self.assertTrue(np.all(np.diff(values) >= 0))
        assert_allclose((vectors * values) @ vectors.conj().T, h, atol=1e-12)

    def test_herm_eig_reconstruction_residual(self):
        """Test the relative reconstruction residual on 1000 matrices of side up to 81"""
        rng = np.random.default_rng(81)
        for k in range(1000):
            n = 1 + k % 81
            g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            h = (g + g.conj().T) / 2
            values, vectors = herm_eig(h)
            residual = np.linalg.norm((vectors * values) @ vectors.conj().T - h)
            self.assertLessEqual(residual, 1e-10 * np.linalg.norm(h, np.inf), f"side {n}")


class TestSpectralProperties(unittest.TestCase):
    """Property-based invariants of the partial transpose"""

    @given(st.integers(min_value=0, max_value=10_000), st.sampled_from([(2, 2), (2, 3), (3, 2), (3, 3)]))
    @settings(max_examples=50, deadline=None)
    def test_partial_transpose_is_trace_preserving_involution(self, seed, dims):
        """Test that the partial transpose is a trace-preserving involution"""
        rho = random_state(dims[0], dims[1], 2, seed)
        once = partial_transpose(rho)
        assert_allclose(partial_transpose(once).matrix, rho.matrix, atol=1e-15)
        self.assertAlmostEqual(np.trace(once.matrix).real, 1.0, places=12)
        self.assertTrue(is_hermitian(once.matrix))

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=50, deadline=None)
    def test_trace_norm_bounds_smallest_eigenvalue(self, seed):
        """Test that the trace norm is at least the trace"""
        rho = random_state(3, 3, 4, seed)
        pt = partial_transpose(rho).matrix
        # ||X||_1 >= Tr X with equality iff X >= 0
        norm = trace_norm(pt)
        self.assertGreaterEqual(norm, 1.0 - 1e-12)
        if min_eigenvalue(pt) >= 0:
            self.assertAlmostEqual(norm, 1.0, places=10)


if __name__ == "__main__":
    unittest.main()
