"""Unit tests for the state library and random states"""

import unittest

import numpy as np
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from src.errors import ValidationError
from src.linalg import BipartiteOperator, is_psd, partial_trace, partial_transpose, swap_operator, trace_norm
from src.states import (
    FAMILIES,
    antisym_rank2,
    convexity_trio,
    family_omega,
    family_sigma,
    family_tau,
    get_family,
    isotropic_state,
    max_entangled,
    mix_with_identity,
    monogamy_state,
    product_state,
    random_pure_state,
    random_state,
    tensor_power,
    validate_density,
)


class TestNamedStates(unittest.TestCase):
    """Test the fixed states"""

    def test_max_entangled_is_pure(self):
        """Test that Phi^d is a pure state"""
        for d in (1, 2, 3):
            phi = max_entangled(d).matrix
            assert_allclose(phi @ phi, phi, atol=1e-15)
            self.assertAlmostEqual(np.trace(phi).real, 1.0)

    def test_max_entangled_rejects_zero(self):
        """Test that d = 0 is rejected"""
        with self.assertRaises(ValidationError):
            max_entangled(0)

    def test_antisym_rank2_lives_on_antisymmetric_subspace(self):
        """Test that rho_v is supported on the antisymmetric subspace"""
        rho = antisym_rank2()
        self.assertEqual(rho.dims, (3, 3))
        self.assertEqual(np.linalg.matrix_rank(rho.matrix, tol=1e-12), 2)
        assert_allclose(swap_operator(3) @ rho.matrix, -rho.matrix, atol=1e-15)

    def test_convexity_trio(self):
        """Test the convexity counterexample states"""
        rho1, rho2, avg = convexity_trio()
        assert_allclose(avg.matrix, (rho1.matrix + rho2.matrix) / 2)
        self.assertTrue(is_psd(partial_transpose(rho2).matrix, 1e-12))

    def test_monogamy_cuts(self):
        """Test the cuts of the monogamy state"""
        whole, ab, ac = monogamy_state()
        self.assertEqual(whole.dims, (2, 4))
        self.assertEqual(ab.dims, (2, 2))
        self.assertEqual(ac.dims, (2, 2))
        # All three share the reduced state of A
        reduced = partial_trace(whole, keep="A")
        assert_allclose(partial_trace(ab, keep="A"), reduced, atol=1e-15)
        assert_allclose(partial_trace(ac, keep="A"), reduced, atol=1e-15)
        assert_allclose(reduced, np.diag([0.5, 0.5]), atol=1e-15)

    def test_monogamy_bc_marginals_differ(self):
        """Test that the two pair marginals differ on B"""
        _, ab, ac = monogamy_state()
        # |psi> puts weight 3/4 on B = 1 and 1/4 on C = 1
        assert_allclose(np.diag(partial_trace(ab, keep="B")).real, [0.25, 0.75], atol=1e-15)
        assert_allclose(np.diag(partial_trace(ac, keep="B")).real, [0.75, 0.25], atol=1e-15)


class TestFamilies(unittest.TestCase):
    """Test the parametric families"""

    def test_family_ranks(self):
        """Test the ranks of the three families"""
        self.assertEqual(np.linalg.matrix_rank(family_sigma(0.3).matrix, tol=1e-12), 2)
        self.assertEqual(np.linalg.matrix_rank(family_omega(0.3).matrix, tol=1e-12), 3)
        self.assertEqual(np.linalg.matrix_rank(family_tau(0.3).matrix, tol=1e-12), 9)

    def test_families_are_states_over_interval(self):
        """Test that each family gives states on its interval"""
        for family in FAMILIES.values():
            for p in (0.0, 0.25, 1.0):
                validate_density(family(p))

    def test_parameter_outside_interval(self):
        """Test that parameters outside [0, 1] are rejected"""
        for builder in (family_sigma, family_omega, family_tau):
            with self.assertRaises(ValidationError):
                builder(1.5)
        with self.assertRaises(ValidationError):
            get_family("sigma")(-0.1)

    def test_omega_custom_first_ket(self):
        """Test omega_p with a custom first ket"""
        u1 = np.zeros(9)
        u1[4] = 2.0
        rho = family_omega(1.0, u1=u1)
        self.assertAlmostEqual(rho.matrix[4, 4].real, 0.5)
        with self.assertRaises(ValidationError):
            family_omega(0.5, u1=np.ones(4))

    def test_families_are_lipschitz_in_p(self):
        """Test that a parameter step of delta moves each family by at most 4 delta in trace norm"""
        delta = 1e-6
        for name, family in FAMILIES.items():
            for p in (0.0, 0.3, 0.7, 0.9):
                moved = trace_norm(family(p + delta).matrix - family(p).matrix)
                self.assertLessEqual(moved, 4 * delta, f"{name} at p = {p}")

    def test_unknown_family(self):
        """Test that an unknown family is rejected"""
        with self.assertRaises(ValidationError):
            get_family("delta")

    def test_grid(self):
        """Test even grids and the single-point grid"""
        grid = get_family("sigma").grid(0.0, 1.0, 5)
        assert_allclose(grid, [0.0, 0.25, 0.5, 0.75, 1.0])
        assert_allclose(get_family("tau").grid(0.5, 0.5, 1), [0.5])

    def test_grid_rejects_inconsistent_steps(self):
        """Test that inconsistent steps are rejected"""
        family = get_family("omega")
        with self.assertRaises(ValidationError):
            family.grid(0.0, 1.0, 1)
        with self.assertRaises(ValidationError):
            family.grid(0.5, 0.5, 3)
        with self.assertRaises(ValidationError):
            family.grid(0.8, 0.2, 4)
        with self.assertRaises(ValidationError):
            family.grid(0.0, 1.0, 0)


class TestBuilders(unittest.TestCase):
    """Test product, isotropic, mixing and tensor powers"""

    def test_product_state_is_ppt(self):
        """Test that a product state is PPT"""
        rho = product_state(np.diag([0.7, 0.3]), np.eye(3) / 3)
        self.assertEqual(rho.dims, (2, 3))
        self.assertTrue(is_psd(partial_transpose(rho).matrix, 1e-12))

    def test_isotropic_endpoints(self):
        """Test the endpoints of the isotropic family"""
        assert_allclose(isotropic_state(3, 1.0).matrix, max_entangled(3).matrix, atol=1e-15)
        assert_allclose(isotropic_state(2, 0.25).matrix, np.eye(4) / 4, atol=1e-15)

    def test_mix_with_identity(self):
        """Test mixing toward the maximally mixed state"""
        mixed = mix_with_identity(max_entangled(2), 1.0)
        assert_allclose(mixed.matrix, np.eye(4) / 4)

    def test_tensor_power(self):
        """Test the tensor power of a state"""
        rho = tensor_power(max_entangled(2), 2)
        self.assertEqual(rho.dims, (4, 4))
        assert_allclose(rho.matrix, max_entangled(4).matrix, atol=1e-14)
        with self.assertRaises(ValidationError):
            tensor_power(rho, 0)


class TestValidateDensity(unittest.TestCase):
    """Test density matrix validation"""

    def test_bad_trace(self):
        """Test that a wrong trace is rejected"""
        with self.assertRaises(ValidationError) as ctx:
            validate_density(BipartiteOperator(np.eye(4), 2, 2))
        self.assertIn("trace", str(ctx.exception))

    def test_not_psd(self):
        """Test that a non-PSD matrix is rejected"""
        with self.assertRaises(ValidationError) as ctx:
            validate_density(BipartiteOperator(np.diag([1.5, -0.5, 0.0, 0.0]), 2, 2))
        self.assertIn("PSD", str(ctx.exception))

    def test_not_hermitian(self):
        """Test that a non-Hermitian matrix is rejected"""
        matrix = np.eye(4, dtype=complex) / 4
        matrix[0, 1] = 0.1
        with self.assertRaises(ValidationError):
            validate_density(BipartiteOperator(matrix, 2, 2))


class TestRandomStates(unittest.TestCase):
    """Test seeded random states"""

    def test_seed_reproducibility(self):
        """Test that equal seeds give equal states"""
        assert_allclose(random_state(2, 3, 4, seed=1).matrix, random_state(2, 3, 4, seed=1).matrix)
        self.assertFalse(np.allclose(random_state(2, 3, 4, seed=1).matrix, random_state(2, 3, 4, seed=2).matrix))

    def test_rank_bounds(self):
        """Test that the rank must lie between one and the dimension"""
        with self.assertRaises(ValidationError):
            random_state(2, 2, 5, seed=0)
        with self.assertRaises(ValidationError):
            random_state(2, 2, 0, seed=0)

    def test_negative_seed_rejected(self):
        """Test that a negative seed is a validation error"""
        with self.assertRaises(ValidationError):
            random_state(2, 2, 1, seed=-1)

    def test_pure_state(self):
        """Test that rank one gives a pure state"""
        rho = random_pure_state(2, 2, seed=4).matrix
        assert_allclose(rho @ rho, rho, atol=1e-12)

    @given(
        st.integers(min_value=1, max_value=3),
        st.integers(min_value=1, max_value=3),
        st.integers(min_value=0, max_value=2**31 - 1),
    )
    @settings(max_examples=40, deadline=None)
    def test_random_states_are_valid(self, dim_a, dim_b, seed):
        """Test that random states are valid densities"""
        rank = max(1, (dim_a * dim_b) // 2)
        rho = random_state(dim_a, dim_b, rank, seed)
        validate_density(rho)
        self.assertEqual(np.linalg.matrix_rank(rho.matrix, tol=1e-10), rank)


if __name__ == "__main__":
    unittest.main()
