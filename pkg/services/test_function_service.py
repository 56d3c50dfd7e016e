import logging
from functools import lru_cache
from typing import Callable, Dict, List

import numpy as np
from numpy.polynomial import chebyshev

from config.config import Config
from models.test_function import AmberCoefficients, TestFunction
from utils.exceptions import InvalidInputError
from utils.helpers import equispaced_grid

logger = logging.getLogger(__name__)


def _as_complex(z) -> np.ndarray:
    return np.asarray(z, dtype=complex)


def f_a(z):
    return np.sqrt(1.21 - _as_complex(z) ** 2)


def f_b(z):
    return np.sqrt(0.01 + _as_complex(z) ** 2)


def f_c(z):
    return np.tanh(5 * _as_complex(z))


def f_d(z):
    return np.sin(40 * _as_complex(z))


def f_e(z):
    """exp(-1/z^2), continued by 0 at the origin"""
    z = _as_complex(z)
    at_origin = z == 0
    safe = np.where(at_origin, 1.0, z)
    with np.errstate(over='ignore', under='ignore'):
        values = np.exp(-1 / safe ** 2)
    return np.where(at_origin, 0.0, values)


def runge(z):
    return 1 / (1 + 25 * _as_complex(z) ** 2)


def fig1(z):
    z = _as_complex(z)
    return np.exp(z) / np.sqrt(1 + 9 * z ** 2)


def amber(z):
    return TestFunctionService.amber_eval(z)


def sum6(z):
    return f_a(z) + f_b(z) + f_c(z) + f_d(z) + f_e(z) + amber(z)


_REGISTRY: Dict[str, TestFunction] = {
    'fA': TestFunction('fA', f_a, 'sqrt(1.21 - x^2)'),
    'fB': TestFunction('fB', f_b, 'sqrt(0.01 + x^2)'),
    'fC': TestFunction('fC', f_c, 'tanh(5x)'),
    'fD': TestFunction('fD', f_d, 'sin(40x)'),
    'fE': TestFunction('fE', f_e, 'exp(-1/x^2)'),
    'amber': TestFunction('amber', amber, 'amber function A(x)'),
    'runge': TestFunction('runge', runge, '1/(1 + 25x^2)'),
    'sum6': TestFunction('sum6', sum6, 'fA + fB + fC + fD + fE + A'),
    'fig1': TestFunction('fig1', fig1, 'exp(x)/sqrt(1 + 9x^2)'),
}

PANEL_FUNCTIONS = ('fA', 'fB', 'fC', 'fD', 'fE')
EXTENDED_FUNCTIONS = ('amber', 'sum6')


class TestFunctionService:
    """The test corpus, evaluable at complex arguments (principal branches)"""

    __test__ = False

    @staticmethod
    def list_functions() -> List[TestFunction]:
        return list(_REGISTRY.values())

    @staticmethod
    def get(identifier: str) -> TestFunction:
        try:
            return _REGISTRY[identifier]
        except KeyError:
            raise InvalidInputError(
                f"Unknown test function '{identifier}'; expected one of {', '.join(_REGISTRY)}") from None

    @staticmethod
    def eval_test_function(identifier: str, z) -> np.ndarray:
        return TestFunctionService.get(identifier)(z)

    @staticmethod
    def sample(identifier: str, n: int) -> np.ndarray:
        """Real samples at n equispaced points in [-1, 1]"""
        return TestFunctionService.eval_test_function(identifier, equispaced_grid(n)).real

    @staticmethod
    @lru_cache(maxsize=1)
    def amber_coeffs() -> AmberCoefficients:
        """c_k = +-2^-k, sign from bit k (most significant first) of floor(2^52 pi)"""
        bits = format(int(np.floor(2.0 ** 52 * np.pi)), 'b')
        signs = np.array([1.0 if bit == '1' else -1.0 for bit in bits])
        return AmberCoefficients(signs * 2.0 ** -np.arange(signs.size))

    @staticmethod
    def amber_eval(z) -> np.ndarray:
        # chebval runs the Clenshaw recurrence
        return chebyshev.chebval(_as_complex(z), TestFunctionService.amber_coeffs().coefficients)

    @staticmethod
    def max_dense_error(evaluator: Callable, identifier: str,
                        grid_size: int = Config.DENSE_GRID_SIZE) -> float:
        """max |f(x) - r(x)| over grid_size equispaced points; inf if r is not finite there"""
        if grid_size < 2:
            raise InvalidInputError(f"grid_size must be at least 2, got {grid_size}")
        x = equispaced_grid(grid_size)
        approx = np.asarray(evaluator(x))
        if not np.all(np.isfinite(approx)):
            return float('inf')
        exact = TestFunctionService.eval_test_function(identifier, x)
        return float(np.max(np.abs(exact - approx)))
