import numpy as np
import pytest

from models.linear_fit import BASIS_ARNOLDI_FOURIER, BASIS_CHEBYSHEV
from services.baseline_service import BaselineService
from services.test_function_service import TestFunctionService
from utils.exceptions import InvalidInputError
from utils.helpers import equispaced_grid

DENSE = np.linspace(-1, 1, 1000)


class TestPolynomialLeastSquares:

    def test_degree(self):
        """Degree is ceil(n/gamma) - 1"""
        X = equispaced_grid(21)
        fit = BaselineService.poly_ls_cheb(X, np.cos(X), gamma=2)
        assert fit.basis == BASIS_CHEBYSHEV
        assert fit.degree == 10

    def test_reproduces_polynomial(self):
        """Data from a cubic is reproduced on the dense grid"""
        X = equispaced_grid(20)
        f = lambda x: 4 * x ** 3 - 3 * x + 0.5
        for fitter in (BaselineService.poly_ls_cheb, BaselineService.poly_ls_monomial):
            fit = fitter(X, f(X))
            assert np.max(np.abs(BaselineService.evaluate(fit, DENSE) - f(DENSE))) < 1e-10

    def test_real_data_gives_real_values(self):
        """Real samples evaluate to real values"""
        X = equispaced_grid(16)
        fit = BaselineService.poly_ls_cheb(X, np.exp(X))
        assert np.isrealobj(BaselineService.evaluate(fit, DENSE))

    def test_gamma_must_exceed_one(self):
        """gamma <= 1 is rejected"""
        with pytest.raises(InvalidInputError):
            BaselineService.poly_ls_cheb(equispaced_grid(10), np.ones(10), gamma=1.0)


class TestFourierExtension:

    def test_exact_mode(self):
        """cos(pi x / 2) is a single mode of the period-4 extension"""
        X = equispaced_grid(20)
        fit = BaselineService.fourier_ext(X, np.cos(np.pi * X / 2), T=2)
        assert fit.degree == 4
        assert np.max(np.abs(BaselineService.evaluate(fit, DENSE) - np.cos(np.pi * DENSE / 2))) < 1e-10

    def test_arnoldi_matches_plain(self):
        """Both variants fit a representable function equally well"""
        X = equispaced_grid(40)
        F = np.cos(np.pi * X / 2) + 0.3 * np.sin(np.pi * X)
        exact = np.cos(np.pi * DENSE / 2) + 0.3 * np.sin(np.pi * DENSE)
        fit = BaselineService.fourier_ext_va(X, F, T=2)
        assert fit.basis == BASIS_ARNOLDI_FOURIER
        assert np.max(np.abs(BaselineService.evaluate(fit, DENSE) - exact)) < 1e-10

    def test_arnoldi_columns_orthonormal_on_grid(self):
        """The replayed basis has identity Gram matrix on the sample grid"""
        X = equispaced_grid(40)
        fit = BaselineService.fourier_ext_va(X, np.exp(X), T=2)
        Q = BaselineService.arnoldi_basis(fit, X)
        np.testing.assert_allclose(Q.conj().T @ Q, np.eye(Q.shape[1]), atol=1e-10)

    def test_half_width_must_exceed_one(self):
        """T <= 1 is rejected"""
        with pytest.raises(InvalidInputError):
            BaselineService.fourier_ext(equispaced_grid(10), np.ones(10), T=1.0)


class TestFourierPlusPolynomial:

    def test_linear_data(self):
        """F = x is captured by the polynomial part"""
        X = equispaced_grid(50)
        fit = BaselineService.fourier_plus_poly(X, X.copy())
        assert fit.poly_degree == 7
        assert np.max(np.abs(BaselineService.evaluate(fit, X) - X)) < 1e-10

    def test_periodic_data(self):
        """sin(pi x) is captured by the Fourier part"""
        X = equispaced_grid(50)
        fit = BaselineService.fourier_plus_poly(X, np.sin(np.pi * X))
        assert np.max(np.abs(BaselineService.evaluate(fit, DENSE) - np.sin(np.pi * DENSE))) < 1e-10

    def test_too_few_points(self):
        """n=4 leaves no room for Fourier modes"""
        with pytest.raises(InvalidInputError):
            BaselineService.fourier_plus_poly(equispaced_grid(4), np.ones(4))


class TestCubicSpline:

    def test_reproduces_cubic(self):
        """Not-a-knot splines reproduce cubics"""
        X = equispaced_grid(10)
        f = lambda x: x ** 3 - 2 * x ** 2 + 0.25
        fit = BaselineService.cubic_spline(X, f(X))
        assert fit.degree == 3
        assert np.max(np.abs(BaselineService.evaluate(fit, DENSE) - f(DENSE))) < 1e-12

    def test_complex_data(self):
        """Real and imaginary parts are splined separately"""
        X = equispaced_grid(8)
        fit = BaselineService.cubic_spline(X, X + 2j * X)
        np.testing.assert_allclose(BaselineService.evaluate(fit, DENSE), DENSE + 2j * DENSE, atol=1e-12)

    def test_needs_four_points(self):
        """Fewer than four points are rejected"""
        with pytest.raises(InvalidInputError):
            BaselineService.cubic_spline(equispaced_grid(3), np.ones(3))

    def test_fourth_order_rate(self):
        """Error for sin(40x) decays like n^-4"""
        n_values = np.arange(100, 401, 20)
        errors = []
        for n in n_values:
            X = equispaced_grid(int(n))
            fit = BaselineService.cubic_spline(X, TestFunctionService.sample('fD', int(n)))
            errors.append(TestFunctionService.max_dense_error(lambda x: BaselineService.evaluate(fit, x), 'fD'))
        slope = np.polyfit(np.log(n_values), np.log(errors), 1)[0]
        assert -4.5 <= slope <= -3.5


class TestFloaterHormann:

    def test_berrut_weights(self):
        """d=0 gives alternating unit weights"""
        np.testing.assert_array_equal(BaselineService.fh_weights(5, 0), [1, -1, 1, -1, 1])

    def test_polynomial_weights(self):
        """d=n-1 gives alternating binomial weights"""
        np.testing.assert_array_equal(BaselineService.fh_weights(5, 4), [1, -4, 6, -4, 1])

    def test_blended_weights(self):
        """n=6, d=2 from the blending sum"""
        np.testing.assert_array_equal(BaselineService.fh_weights(6, 2), [1, -3, 4, -4, 3, -1])

    def test_degree_out_of_range(self):
        """d must lie in [0, n-1]"""
        with pytest.raises(InvalidInputError):
            BaselineService.fh_weights(5, 5)

    def test_interpolates_nodes(self):
        """The interpolant matches the data at every node"""
        X = equispaced_grid(60)
        F = TestFunctionService.sample('fA', 60)
        fit = BaselineService.fh_adaptive(X, F)
        assert np.max(np.abs(BaselineService.evaluate(fit, X) - F)) <= 1e-12

    def test_linear_data_picks_smallest_exact_degree(self):
        """Equispaced Berrut weights (d=0) already reproduce linear data, so d=0 wins"""
        X = equispaced_grid(20)
        fit = BaselineService.fh_adaptive(X, 2 * X + 1)
        assert fit.blending_degree == 0
        assert np.max(np.abs(BaselineService.evaluate(fit, DENSE) - (2 * DENSE + 1))) < 1e-12

    def test_no_poles_in_interval(self):
        """The denominator never vanishes between the nodes"""
        X = equispaced_grid(50)
        fit = BaselineService.fh_adaptive(X, TestFunctionService.sample('fC', 50))
        between = np.linspace(-1, 1, 10000)
        between = between[~np.isin(between, X)]
        denominator = (1 / np.subtract.outer(between, X)) @ fit.weights
        assert np.all(np.abs(denominator) > 0)
        assert np.all(np.isfinite(BaselineService.evaluate(fit, between)))

    def test_runge_catastrophe(self):
        """The degree-49 interpolant of exp(x)/sqrt(1 + 9x^2) is off by about 100"""
        X = equispaced_grid(50)
        fit = BaselineService.poly_interp(X, TestFunctionService.sample('fig1', 50))
        assert fit.degree == 49
        error = TestFunctionService.max_dense_error(lambda x: BaselineService.evaluate(fit, x), 'fig1')
        assert 50 <= error <= 250


class TestGrowthConstant:

    def test_gamma_two(self):
        """C(2) = 3^(3/4)/2"""
        assert BaselineService.growth_constant(2) == pytest.approx(3 ** 0.75 / 2, abs=1e-12)

    def test_gamma_one(self):
        """C(1) = 2"""
        assert BaselineService.growth_constant(1) == pytest.approx(2.0, abs=1e-12)

    def test_monotone_towards_one(self):
        """C decreases with gamma and tends to 1"""
        values = [BaselineService.growth_constant(g) for g in (1, 1.5, 2, 4, 16, 1e6)]
        assert all(a > b for a, b in zip(values, values[1:]))
        assert values[-1] == pytest.approx(1.0, abs=1e-5)

    def test_gamma_below_one(self):
        """gamma < 1 is rejected"""
        with pytest.raises(InvalidInputError):
            BaselineService.growth_constant(0.5)
