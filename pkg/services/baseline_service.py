import logging
from typing import Union

import numpy as np
from numpy.polynomial import chebyshev, polynomial
from scipy.interpolate import CubicSpline, PPoly
from scipy.special import binom

from config.config import Config
from models.linear_fit import (
    BASIS_ARNOLDI_FOURIER,
    BASIS_CHEBYSHEV,
    BASIS_FOURIER,
    BASIS_FOURIER_PLUS_CHEB,
    BASIS_MONOMIAL,
    FHInterpolant,
    LinearFit,
    SplineFit,
)
from services.linear_algebra_service import LinearAlgebraService
from services.rational_service import RationalService
from utils.exceptions import InvalidInputError
from utils.helpers import validate_samples

logger = logging.getLogger(__name__)

BaselineFit = Union[LinearFit, SplineFit, FHInterpolant]


def _check_gamma(gamma: float):
    if not gamma > 1:
        raise InvalidInputError(f"Oversampling ratio must exceed 1, got {gamma}")


def _fourier_columns(x: np.ndarray, n_modes: int, half_width: float) -> np.ndarray:
    k = np.arange(-n_modes, n_modes + 1)
    return np.exp(1j * np.pi * np.outer(x, k) / half_width)


def _largest_odd_at_most(count: int) -> int:
    return count if count % 2 == 1 else count - 1


class BaselineService:
    """The classical comparison methods, all fitted from samples on a grid in [-1, 1]"""

    @staticmethod
    def poly_ls_cheb(X, F, gamma: float = Config.OVERSAMPLING_RATIO,
                     rtol: float = Config.LSQ_RTOL) -> LinearFit:
        """Least-squares Chebyshev series of degree ceil(n/gamma) - 1"""
        X, F = validate_samples(X, F)
        _check_gamma(gamma)
        degree = int(np.ceil(X.size / gamma)) - 1
        A = chebyshev.chebvander(X, degree)
        coeffs = LinearAlgebraService.least_squares_min_norm(A, F, rtol)
        return LinearFit(basis=BASIS_CHEBYSHEV, coefficients=coeffs, real_valued=np.isrealobj(F))

    @staticmethod
    def poly_ls_monomial(X, F, gamma: float = Config.OVERSAMPLING_RATIO,
                         rtol: float = Config.LSQ_RTOL) -> LinearFit:
        """Same fit in the monomial basis; truncation caps the coefficient growth"""
        X, F = validate_samples(X, F)
        _check_gamma(gamma)
        degree = int(np.ceil(X.size / gamma)) - 1
        A = polynomial.polyvander(X, degree)
        coeffs = LinearAlgebraService.least_squares_min_norm(A, F, rtol)
        return LinearFit(basis=BASIS_MONOMIAL, coefficients=coeffs, real_valued=np.isrealobj(F))

    @staticmethod
    def _extension_modes(n: int, gamma: float) -> int:
        count = int(np.floor(n / gamma))
        if count < 1:
            raise InvalidInputError(f"n={n} is too small for a Fourier extension with gamma={gamma}")
        return (_largest_odd_at_most(count) - 1) // 2

    @staticmethod
    def fourier_ext(X, F, T: float = Config.EXTENSION_HALF_WIDTH, gamma: float = Config.OVERSAMPLING_RATIO,
                    rtol: float = Config.LSQ_RTOL) -> LinearFit:
        """Fourier series periodic on [-T, T] fitted to data on [-1, 1]"""
        X, F = validate_samples(X, F)
        _check_gamma(gamma)
        if not T > 1:
            raise InvalidInputError(f"Extension half-width must exceed 1, got {T}")

        K = BaselineService._extension_modes(X.size, gamma)
        A = _fourier_columns(X, K, T)
        coeffs = LinearAlgebraService.least_squares_min_norm(A, F, rtol)
        return LinearFit(basis=BASIS_FOURIER, coefficients=coeffs, real_valued=np.isrealobj(F),
                         half_width=T, n_modes=K)

    @staticmethod
    def fourier_ext_va(X, F, T: float = Config.EXTENSION_HALF_WIDTH, gamma: float = Config.OVERSAMPLING_RATIO,
                       rtol: float = Config.LSQ_RTOL) -> LinearFit:
        """
        Fourier extension through Vandermonde with Arnoldi.

        Columns come from repeated multiplication by exp(i pi x / T), starting
        at exp(-i pi K x / T), and are orthonormalized on the grid by modified
        Gram-Schmidt (two passes). The Hessenberg coefficients replay the same
        recurrence at other points.
        """
        X, F = validate_samples(X, F)
        _check_gamma(gamma)
        if not T > 1:
            raise InvalidInputError(f"Extension half-width must exceed 1, got {T}")

        K = BaselineService._extension_modes(X.size, gamma)
        n_cols = 2 * K + 1
        shift = np.exp(1j * np.pi * X / T)
        start = np.exp(-1j * np.pi * K * X / T)
        start_norm = float(np.linalg.norm(start))

        Q = np.zeros((X.size, n_cols), dtype=complex)
        H = np.zeros((n_cols, max(n_cols - 1, 1)), dtype=complex)
        Q[:, 0] = start / start_norm
        for k in range(n_cols - 1):
            v = shift * Q[:, k]
            for _ in range(2):
                for j in range(k + 1):
                    h = np.vdot(Q[:, j], v)
                    v = v - h * Q[:, j]
                    H[j, k] += h
            H[k + 1, k] = np.linalg.norm(v)
            Q[:, k + 1] = v / H[k + 1, k]

        coeffs = LinearAlgebraService.least_squares_min_norm(Q, F, rtol)
        return LinearFit(basis=BASIS_ARNOLDI_FOURIER, coefficients=coeffs, real_valued=np.isrealobj(F),
                         half_width=T, n_modes=K, hessenberg=H, start_norm=start_norm)

    @staticmethod
    def arnoldi_basis(fit: LinearFit, x) -> np.ndarray:
        """Columns of the Arnoldi basis at arbitrary points"""
        x = np.asarray(x, dtype=float).ravel()
        n_cols = fit.coefficients.size
        H = fit.hessenberg
        shift = np.exp(1j * np.pi * x / fit.half_width)

        W = np.zeros((x.size, n_cols), dtype=complex)
        W[:, 0] = np.exp(-1j * np.pi * fit.n_modes * x / fit.half_width) / fit.start_norm
        for k in range(n_cols - 1):
            v = shift * W[:, k] - W[:, :k + 1] @ H[:k + 1, k]
            W[:, k + 1] = v / H[k + 1, k]
        return W

    @staticmethod
    def fourier_plus_poly(X, F, gamma: float = Config.OVERSAMPLING_RATIO,
                          rtol: float = Config.LSQ_RTOL) -> LinearFit:
        """
        Joint least squares in exp(i pi k x), k = -K..K, and T_0..T_p with
        p = round(sqrt(n)); ceil(n/gamma) columns in total, polynomial first.
        """
        X, F = validate_samples(X, F)
        _check_gamma(gamma)

        n = X.size
        total = int(np.ceil(n / gamma))
        p = int(np.floor(np.sqrt(n) + 0.5))
        remaining = total - (p + 1)
        if remaining < 1:
            raise InvalidInputError(f"n={n} is too small to allot Fourier modes next to degree {p}")
        K = (_largest_odd_at_most(remaining) - 1) // 2

        A = np.hstack([_fourier_columns(X, K, 1.0), chebyshev.chebvander(X, p)])
        coeffs = LinearAlgebraService.least_squares_min_norm(A, F, rtol)
        return LinearFit(basis=BASIS_FOURIER_PLUS_CHEB, coefficients=coeffs, real_valued=np.isrealobj(F),
                         half_width=1.0, n_modes=K, poly_degree=p)

    @staticmethod
    def cubic_spline(X, F) -> SplineFit:
        """C2 cubic spline interpolant with not-a-knot end conditions"""
        X, F = validate_samples(X, F, min_points=4)
        if np.iscomplexobj(F):
            coeffs = (CubicSpline(X, F.real, bc_type='not-a-knot').c
                      + 1j * CubicSpline(X, F.imag, bc_type='not-a-knot').c)
        else:
            coeffs = CubicSpline(X, F, bc_type='not-a-knot').c
        return SplineFit(knots=X, coefficients=coeffs)

    @staticmethod
    def fh_weights(n: int, d: int) -> np.ndarray:
        """Equispaced Floater-Hormann weights (-1)^k sum_i C(d, k-i)"""
        if n < 1 or not 0 <= d <= n - 1:
            raise InvalidInputError(f"Blending degree must lie in [0, {n - 1}], got {d}")

        binomials = binom(d, np.arange(d + 1))
        weights = np.empty(n)
        for k in range(n):
            lo = max(0, k - d)
            hi = min(k, n - 1 - d)
            weights[k] = binomials[k - hi:k - lo + 1].sum()
        weights[1::2] *= -1
        return weights

    @staticmethod
    def fh_interpolant(X, F, d: int) -> FHInterpolant:
        X, F = validate_samples(X, F)
        return FHInterpolant(nodes=X, values=F, weights=BaselineService.fh_weights(X.size, d), blending_degree=d)

    @staticmethod
    def fh_adaptive(X, F, max_degree: int = Config.FH_MAX_DEGREE) -> FHInterpolant:
        """
        Floater-Hormann interpolant with d picked by leave-half-out validation:
        fit the even-index samples, score the max error at the odd-index ones.
        Scores within roundoff of the best count as ties; the smallest d wins.
        """
        X, F = validate_samples(X, F, min_points=4)
        train_x, train_f = X[::2], F[::2]
        test_x, test_f = X[1::2], F[1::2]

        d_max = min(X.size - 1, max_degree, train_x.size - 1)
        scores = {}
        for d in range(d_max + 1):
            w = BaselineService.fh_weights(train_x.size, d)
            predicted = RationalService.barycentric_evaluate(train_x, train_f, w, test_x)
            scores[d] = float(np.max(np.abs(test_f - predicted)))

        threshold = max(min(scores.values()), 1e-13 * float(np.max(np.abs(F))))
        best = min(d for d, score in scores.items() if score <= threshold)
        logger.debug(f"FH adaptive: n={X.size}, d={best}, score={scores[best]:.3e}")

        return FHInterpolant(nodes=X, values=F, weights=BaselineService.fh_weights(X.size, best),
                             blending_degree=best, scores=scores)

    @staticmethod
    def poly_interp(X, F) -> FHInterpolant:
        """Polynomial interpolant of degree n-1 (binomial barycentric weights)"""
        X, F = validate_samples(X, F)
        return BaselineService.fh_interpolant(X, F, X.size - 1)

    @staticmethod
    def growth_constant(gamma: float) -> float:
        """C = [(1+a)^(1+a) (1-a)^(1-a)]^(1/2) with a = 1/gamma"""
        if not gamma >= 1:
            raise InvalidInputError(f"Oversampling ratio must be at least 1, got {gamma}")
        alpha = 1.0 / gamma
        return float(np.sqrt((1 + alpha) ** (1 + alpha) * (1 - alpha) ** (1 - alpha)))

    @staticmethod
    def evaluate(fit: BaselineFit, x) -> np.ndarray:
        """Evaluate any baseline fit at real points"""
        x = np.asarray(x, dtype=float)
        shape = x.shape
        x = x.ravel()

        if isinstance(fit, FHInterpolant):
            values = RationalService.barycentric_evaluate(fit.nodes, fit.values, fit.weights, x)
        elif isinstance(fit, SplineFit):
            coeffs = fit.coefficients
            values = PPoly(coeffs.real, fit.knots)(x)
            if np.iscomplexobj(coeffs):
                values = values + 1j * PPoly(coeffs.imag, fit.knots)(x)
        elif fit.basis == BASIS_CHEBYSHEV:
            values = chebyshev.chebval(x, fit.coefficients)
        elif fit.basis == BASIS_MONOMIAL:
            values = polynomial.polyval(x, fit.coefficients)
        elif fit.basis == BASIS_FOURIER:
            values = _fourier_columns(x, fit.n_modes, fit.half_width) @ fit.coefficients
        elif fit.basis == BASIS_FOURIER_PLUS_CHEB:
            n_fourier = 2 * fit.n_modes + 1
            values = (_fourier_columns(x, fit.n_modes, fit.half_width) @ fit.coefficients[:n_fourier]
                      + chebyshev.chebval(x, fit.coefficients[n_fourier:]))
        elif fit.basis == BASIS_ARNOLDI_FOURIER:
            values = BaselineService.arnoldi_basis(fit, x) @ fit.coefficients
        else:
            raise InvalidInputError(f"Unknown basis '{fit.basis}'")

        if isinstance(fit, LinearFit) and fit.real_valued:
            values = values.real
        return values.reshape(shape)
