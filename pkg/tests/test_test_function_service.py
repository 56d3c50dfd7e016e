import numpy as np
import pytest

from services.test_function_service import TestFunctionService
from utils.exceptions import InvalidInputError


class TestEvaluation:

    def test_values_at_origin(self):
        """fA(0) = 1.1, fC(0) = fD(0) = fE(0) = 0"""
        assert TestFunctionService.eval_test_function('fA', 0.0) == pytest.approx(1.1)
        for identifier in ('fC', 'fD', 'fE'):
            assert TestFunctionService.eval_test_function(identifier, 0.0) == 0

    def test_branch_points(self):
        """fB vanishes at +-0.1i"""
        values = TestFunctionService.eval_test_function('fB', np.array([0.1j, -0.1j]))
        assert np.max(np.abs(values)) < 1e-8

    def test_real_on_interval(self):
        """Every function is real on [-1, 1]"""
        x = np.linspace(-1, 1, 501)
        for function in TestFunctionService.list_functions():
            assert np.max(np.abs(function(x).imag)) <= 1e-15, function.identifier

    def test_flat_function_underflows_quietly(self):
        """exp(-1/x^2) is below 1e-300 near the origin, with no warnings"""
        x = np.linspace(-0.03, 0.03, 61)
        with np.errstate(all='raise'):
            values = TestFunctionService.eval_test_function('fE', x)
        assert np.max(np.abs(values)) <= 1e-300

    def test_sum_of_six(self):
        """sum6 adds the five panel functions and the amber function"""
        x = np.linspace(-1, 1, 11)
        parts = sum(TestFunctionService.eval_test_function(i, x) for i in ('fA', 'fB', 'fC', 'fD', 'fE', 'amber'))
        np.testing.assert_allclose(TestFunctionService.eval_test_function('sum6', x), parts, atol=1e-14)

    def test_unknown_identifier(self):
        """Unknown ids are rejected"""
        with pytest.raises(InvalidInputError):
            TestFunctionService.get('fZ')

    def test_sample_is_real(self):
        """Samples on the grid are returned as real numbers"""
        samples = TestFunctionService.sample('runge', 9)
        assert np.isrealobj(samples)
        assert samples[4] == pytest.approx(1.0)


class TestAmber:

    def test_signs_follow_pi(self):
        """pi = 11.00100100... gives signs + + - - + - - + - -"""
        signs = TestFunctionService.amber_coeffs().signs[:10]
        np.testing.assert_array_equal(signs, [1, 1, -1, -1, 1, -1, -1, 1, -1, -1])

    def test_magnitudes(self):
        """54 coefficients with |c_k| = 2^-k"""
        c = TestFunctionService.amber_coeffs().coefficients
        assert c.size == 54
        np.testing.assert_array_equal(np.abs(c), 2.0 ** -np.arange(54))

    def test_value_at_one(self):
        """A(1) is the coefficient sum, close to pi - 2"""
        c = TestFunctionService.amber_coeffs().coefficients
        value = TestFunctionService.amber_eval(1.0)
        assert value.real == pytest.approx(c.sum(), abs=1e-15)
        assert value.real == pytest.approx(np.pi - 2, abs=1e-14)

    def test_value_at_minus_one(self):
        """A(-1) is the alternating coefficient sum"""
        c = TestFunctionService.amber_coeffs().coefficients
        alternating = np.sum(c * (-1.0) ** np.arange(c.size))
        assert TestFunctionService.amber_eval(-1.0).real == pytest.approx(alternating, abs=1e-14)

    def test_clenshaw_matches_trigonometric_sum(self):
        """Clenshaw agrees with sum c_k cos(k arccos x)"""
        x = np.random.default_rng(0).uniform(-1, 1, 100)
        c = TestFunctionService.amber_coeffs().coefficients
        direct = np.cos(np.outer(np.arccos(x), np.arange(c.size))) @ c
        assert np.max(np.abs(TestFunctionService.amber_eval(x) - direct)) <= 1e-14


class TestDenseError:

    def test_exact_evaluator(self):
        """An exact evaluator has zero error"""
        error = TestFunctionService.max_dense_error(lambda x: TestFunctionService.eval_test_function('fC', x), 'fC')
        assert error == 0

    def test_non_finite_evaluator(self):
        """An evaluator that blows up counts as infinite error"""
        error = TestFunctionService.max_dense_error(lambda x: np.where(x > 0.5, np.inf, 0.0), 'fA')
        assert error == float('inf')

    def test_grid_size(self):
        """grid_size below 2 is rejected"""
        with pytest.raises(InvalidInputError):
            TestFunctionService.max_dense_error(lambda x: x, 'fA', grid_size=1)
