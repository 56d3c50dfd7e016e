import numpy as np
import pytest

from services.linear_algebra_service import LinearAlgebraService
from utils.exceptions import InvalidInputError


class TestSvd:

    def test_singular_values_descending(self):
        """Singular values come back in descending order"""
        result = LinearAlgebraService.svd(np.diag([1.0, 3.0, 2.0]))
        np.testing.assert_allclose(result.singular_values, [3.0, 2.0, 1.0])

    def test_reconstruction(self):
        """U diag(s) V* reproduces the matrix"""
        A = np.random.default_rng(1).standard_normal((6, 4)) + 1j * np.random.default_rng(2).standard_normal((6, 4))
        result = LinearAlgebraService.svd(A)
        rebuilt = result.left_vectors @ np.diag(result.singular_values) @ result.right_vectors.conj().T
        np.testing.assert_allclose(rebuilt, A, atol=1e-13)

    def test_full_gives_null_vector_of_wide_matrix(self):
        """With full=True the last right vector spans the null space of a 1x2 matrix"""
        result = LinearAlgebraService.svd(np.array([[1.0, 1.0]]), full=True)
        v = result.right_vectors[:, -1]
        assert abs(v[0] + v[1]) < 1e-14

    def test_rejects_non_finite(self):
        """NaN entries are rejected"""
        with pytest.raises(InvalidInputError):
            LinearAlgebraService.svd(np.array([[1.0, np.nan]]))


class TestLeastSquares:

    def test_consistent_overdetermined_system(self):
        """A consistent tall system is solved exactly"""
        A = np.vander(np.linspace(-1, 1, 10), 3)
        x = np.array([1.0, -2.0, 0.5])
        np.testing.assert_allclose(LinearAlgebraService.least_squares_min_norm(A, A @ x), x, atol=1e-13)

    def test_minimum_norm_on_rank_deficient(self):
        """Duplicated columns share the solution equally"""
        A = np.array([[1.0, 1.0], [1.0, 1.0]])
        x = LinearAlgebraService.least_squares_min_norm(A, np.array([2.0, 2.0]))
        np.testing.assert_allclose(x, [1.0, 1.0], atol=1e-14)

    def test_mismatched_rows(self):
        """Right-hand side length must match the rows"""
        with pytest.raises(InvalidInputError):
            LinearAlgebraService.least_squares_min_norm(np.eye(3), np.ones(2))


class TestGeneralizedEig:

    def test_regular_pencil(self):
        """diag(2, 3) against the identity"""
        values = LinearAlgebraService.generalized_eig(np.diag([2.0, 3.0]), np.eye(2))
        np.testing.assert_allclose(np.sort(values.real), [2.0, 3.0])

    def test_singular_b_drops_infinite_eigenvalue(self):
        """A zero on the diagonal of B gives an infinite eigenvalue, which is dropped"""
        values = LinearAlgebraService.generalized_eig(np.diag([2.0, 3.0]), np.diag([1.0, 0.0]))
        np.testing.assert_allclose(values, [2.0])

    def test_rejects_non_square(self):
        """Pencil matrices must be square"""
        with pytest.raises(InvalidInputError):
            LinearAlgebraService.generalized_eig(np.ones((2, 3)), np.ones((2, 3)))


class TestChebyshevTransform:

    def test_points(self):
        """Second-kind points run from 1 down to -1"""
        x = LinearAlgebraService.chebyshev_points(4)
        np.testing.assert_allclose(x, [1.0, np.sqrt(0.5), 0.0, -np.sqrt(0.5), -1.0], atol=1e-15)

    def test_single_mode(self):
        """Values of T_3 transform to the unit vector e_3"""
        x = LinearAlgebraService.chebyshev_points(8)
        coeffs = LinearAlgebraService.cheb_transform(np.cos(3 * np.arccos(x)))
        expected = np.zeros(9)
        expected[3] = 1.0
        np.testing.assert_allclose(coeffs, expected, atol=1e-14)

    def test_endpoint_modes(self):
        """T_0 and T_m are recovered with unit coefficients"""
        x = LinearAlgebraService.chebyshev_points(6)
        np.testing.assert_allclose(LinearAlgebraService.cheb_transform(np.ones(7))[0], 1.0, atol=1e-15)
        np.testing.assert_allclose(LinearAlgebraService.cheb_transform(np.cos(6 * np.arccos(x)))[-1], 1.0,
                                   atol=1e-14)

    def test_inverse(self):
        """The inverse transform returns the sampled values"""
        x = LinearAlgebraService.chebyshev_points(16)
        values = np.exp(x) + 1j * np.sin(x)
        coeffs = LinearAlgebraService.cheb_transform(values)
        np.testing.assert_allclose(LinearAlgebraService.inverse_cheb_transform(coeffs), values, atol=1e-14)

    def test_matches_chebval(self):
        """Coefficients evaluate back to the function between the points"""
        x = LinearAlgebraService.chebyshev_points(32)
        coeffs = LinearAlgebraService.cheb_transform(np.exp(x))
        x = np.linspace(-1, 1, 101)
        np.testing.assert_allclose(np.polynomial.chebyshev.chebval(x, coeffs), np.exp(x), atol=1e-14)
