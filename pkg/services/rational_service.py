import logging
from typing import Tuple

import numpy as np

from config.config import Config
from models.approximant import (
    Approximant,
    BarycentricRational,
    ChebyshevPolynomial,
    FitReport,
    PartialFractionRational,
    interpolation_degree,
)
from services.linear_algebra_service import LinearAlgebraService
from utils.exceptions import DegenerateFitError, InvalidInputError, NonResolvableError
from utils.helpers import equispaced_grid, validate_samples

logger = logging.getLogger(__name__)


class RationalService:
    """AAA fitting, barycentric evaluation and the AAA-LS rescue"""

    @staticmethod
    def barycentric_evaluate(t, f, w, z) -> np.ndarray:
        """N(z)/D(z); exactly f_j wherever z equals a support point t_j"""
        z = np.asarray(z)
        zv = np.ravel(z)
        with np.errstate(divide='ignore', invalid='ignore'):
            diff = np.subtract.outer(zv, t)
            C = 1 / diff
            values = (C @ (w * f)) / (C @ w)

        # inf/inf at support points
        hit_rows, hit_cols = np.nonzero(diff == 0)
        values[hit_rows] = f[hit_cols]
        return values.reshape(z.shape)

    @staticmethod
    def _loewner_weights(X, F, is_support, t, f) -> np.ndarray:
        rows = ~is_support
        if not np.any(rows):
            # No rows left: use the polynomial interpolant's weights
            gaps = np.subtract.outer(t, t) + np.eye(t.size)
            return 1 / np.prod(gaps, axis=1)

        C = 1 / np.subtract.outer(X[rows], t)
        loewner = (F[rows][:, None] - f[None, :]) * C
        wide = loewner.shape[0] < loewner.shape[1]
        result = LinearAlgebraService.svd(loewner, full=wide)
        return result.right_vectors[:, -1]

    @staticmethod
    def aaa_fit(X, F, tol: float = Config.AAA_TOLERANCE,
                mmax: int = Config.AAA_MMAX) -> Tuple[BarycentricRational, FitReport]:
        """
        Greedy AAA fit of samples F on the real grid X.

        Starts from the mean of F and adds, one at a time, the sample with the
        largest residual as a support point until the residual on the grid is
        within tol * ||F||_inf, the degree reaches mmax, or the fit interpolates
        every sample (degree ceil((n-1)/2)).
        """
        X, F = validate_samples(X, F)
        if not 0 < tol < 1:
            raise InvalidInputError(f"tol must lie in (0, 1), got {tol}")
        if mmax < 1:
            raise InvalidInputError(f"mmax must be at least 1, got {mmax}")

        n = X.size
        scale = np.max(np.abs(F))
        max_degree = min(mmax, interpolation_degree(n))

        is_support = np.zeros(n, dtype=bool)
        support = []
        approx = np.full(n, np.mean(F), dtype=F.dtype)

        while True:
            # lowest index wins ties
            candidates = np.where(is_support, -1.0, np.abs(F - approx))
            j = int(np.argmax(candidates))
            support.append(j)
            is_support[j] = True

            t = X[support]
            f = F[support]
            w = RationalService._loewner_weights(X, F, is_support, t, f)

            approx = F.copy()
            rows = ~is_support
            if np.any(rows):
                approx[rows] = RationalService.barycentric_evaluate(t, f, w, X[rows])
            error = float(np.max(np.abs(F - approx)))

            degree = len(support) - 1
            if error <= tol * scale or degree >= max_degree:
                break

        r = BarycentricRational(support_points=t, support_values=f, weights=w)
        report = FitReport(
            degree=r.degree,
            grid_residual=error / scale if scale > 0 else 0.0,
            is_interpolant=r.degree == interpolation_degree(n),
            n_samples=n,
        )
        logger.debug(f"AAA fit: n={n}, degree={report.degree}, residual={report.grid_residual:.3e}")
        return r, report

    @staticmethod
    def bary_eval(r: BarycentricRational, z):
        return RationalService.barycentric_evaluate(r.support_points, r.support_values, r.weights, z)

    @staticmethod
    def _arrowhead_eigenvalues(r: BarycentricRational, top_row: np.ndarray) -> np.ndarray:
        if r.degree == 0:
            return np.zeros(0, dtype=complex)

        size = r.support_points.size + 1
        E = np.zeros((size, size), dtype=np.result_type(top_row, float))
        E[0, 1:] = top_row / np.max(np.abs(top_row))
        E[1:, 0] = 1
        E[1:, 1:] = np.diag(r.support_points)
        B = np.eye(size)
        B[0, 0] = 0

        values = LinearAlgebraService.generalized_eig(E, B)
        if values.size > r.degree:
            values = values[np.argsort(np.abs(values), kind='stable')[:r.degree]]
        return values.astype(complex)

    @staticmethod
    def poles(r: BarycentricRational) -> np.ndarray:
        """
        Finite eigenvalues of the (m+2)x(m+2) arrowhead pencil built from the weights.

        At most degree values; fewer when some poles sit at infinity, as for a
        fit that is a polynomial (degree 1 through data on a line gives none).
        """
        return RationalService._arrowhead_eigenvalues(r, r.weights)

    @staticmethod
    def zeros(r: BarycentricRational) -> np.ndarray:
        """Same pencil as poles() with w_j * f_j in the top row"""
        top_row = r.weights * r.support_values
        if not np.any(top_row != 0):
            return np.zeros(0, dtype=complex)
        return RationalService._arrowhead_eigenvalues(r, top_row)

    @staticmethod
    def residues(r: BarycentricRational, p) -> np.ndarray:
        """Residue N(p)/D'(p) at each pole, D' taken analytically"""
        p = np.asarray(p, dtype=complex).ravel()
        if p.size == 0:
            return np.zeros(0, dtype=complex)

        t = r.support_points
        diff = np.subtract.outer(p, t)
        if np.any(np.abs(diff) <= 4 * np.finfo(float).eps * np.maximum(1, np.abs(t))):
            raise DegenerateFitError("Pole coincides with a support point")

        C = 1 / diff
        numerator = C @ (r.weights * r.support_values)
        denominator_derivative = -(C ** 2) @ r.weights
        return numerator / denominator_derivative

    @staticmethod
    def detect_bad_poles(p, im_tol: float = Config.BAD_POLE_IM_TOL) -> np.ndarray:
        """Indices of poles with real part in [-1, 1] and |imag| <= im_tol"""
        if im_tol < 0:
            raise InvalidInputError(f"im_tol must be nonnegative, got {im_tol}")
        p = np.asarray(p, dtype=complex).ravel()
        return np.flatnonzero((np.abs(p.real) <= 1) & (np.abs(p.imag) <= im_tol))

    @staticmethod
    def _fold_conjugates(poles: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Split poles into real ones and one upper-half-plane representative per conjugate pair"""
        is_real = np.abs(poles.imag) <= 1e-14 * (1 + np.abs(poles))
        real_poles = poles[is_real].real

        upper = poles[~is_real]
        upper = np.where(upper.imag > 0, upper, upper.conj())
        upper = upper[np.lexsort((upper.imag, upper.real))]
        kept = []
        for pole in upper:
            if not kept or abs(pole - kept[-1]) > 1e-10 * (1 + abs(pole)):
                kept.append(pole)
        return real_poles, np.asarray(kept, dtype=complex)

    @staticmethod
    def aaa_ls(X, F, good_poles, im_tol: float = Config.BAD_POLE_IM_TOL,
               rtol: float = Config.LSQ_RTOL) -> PartialFractionRational:
        """
        Least-squares fit c + sum_k a_k / (x - p_k) over the retained poles.

        For real data each complex pole is paired with its conjugate and fitted
        through the real columns Re 1/(x-p), Im 1/(x-p), so the result is real
        on the real axis.
        """
        X, F = validate_samples(X, F)
        good_poles = np.asarray(good_poles, dtype=complex).ravel()
        if RationalService.detect_bad_poles(good_poles, im_tol).size:
            raise InvalidInputError("Pole set for the least-squares refit contains bad poles")

        if good_poles.size == 0:
            return PartialFractionRational(poles=[], residues=[], constant=np.mean(F))

        if np.iscomplexobj(F):
            columns = [np.ones_like(X, dtype=complex), 1 / np.subtract.outer(X, good_poles)]
            A = np.column_stack(columns)
            coef = RationalService._scaled_lstsq(A, F, rtol)
            return PartialFractionRational(poles=good_poles, residues=coef[1:], constant=coef[0])

        real_poles, upper = RationalService._fold_conjugates(good_poles)
        G = 1 / np.subtract.outer(X, upper)
        A = np.column_stack([np.ones_like(X), 1 / np.subtract.outer(X, real_poles), G.real, G.imag])
        coef = RationalService._scaled_lstsq(A, F, rtol)

        nr, nu = real_poles.size, upper.size
        a_real = coef[1:1 + nr]
        alpha = coef[1 + nr:1 + nr + nu]
        beta = coef[1 + nr + nu:]
        a_upper = (alpha - 1j * beta) / 2

        return PartialFractionRational(
            poles=np.concatenate([real_poles, upper, upper.conj()]),
            residues=np.concatenate([a_real, a_upper, a_upper.conj()]),
            constant=coef[0],
        )

    @staticmethod
    def _scaled_lstsq(A: np.ndarray, b: np.ndarray, rtol: float) -> np.ndarray:
        # unit max-norm columns so truncation is relative to each basis function
        norms = np.max(np.abs(A), axis=0)
        norms[norms == 0] = 1
        return LinearAlgebraService.least_squares_min_norm(A / norms, b, rtol) / norms

    @staticmethod
    def fit_equispaced(F, tol: float = Config.AAA_TOLERANCE, im_tol: float = Config.BAD_POLE_IM_TOL,
                       mmax: int = Config.AAA_MMAX) -> Tuple[Approximant, FitReport]:
        """AAA on x_j = -1 + 2j/(n-1); bad poles are discarded and the rest refit by AAA-LS"""
        F = np.asarray(F)
        if F.ndim != 1 or F.size < 2:
            raise InvalidInputError(f"Need at least 2 samples, got {F.size}")

        n = F.size
        X = equispaced_grid(n)
        r, report = RationalService.aaa_fit(X, F, tol=tol, mmax=mmax)

        p = RationalService.poles(r)
        bad = RationalService.detect_bad_poles(p, im_tol)
        if bad.size == 0:
            return r, report

        logger.warning(f"n={n}: {bad.size} bad pole(s) in [-1, 1] at {p[bad]}, refitting by least squares")
        pf = RationalService.aaa_ls(X, F, np.delete(p, bad), im_tol=im_tol)

        scale = np.max(np.abs(F))
        residual = float(np.max(np.abs(F - RationalService.eval_on_grid(pf, X))))
        report = FitReport(
            degree=pf.degree,
            grid_residual=residual / scale if scale > 0 else 0.0,
            is_interpolant=False,
            n_bad_poles=int(bad.size),
            rescue_applied=True,
            n_samples=n,
            bad_poles=tuple(p[bad]),
        )
        return pf, report

    @staticmethod
    def eval_on_grid(r: Approximant, points) -> np.ndarray:
        """Elementwise evaluation; infinite at a retained pole of a partial-fraction fit"""
        z = np.asarray(points)
        if z.size == 0:
            return np.zeros(z.shape, dtype=complex)

        if r.variant == BarycentricRational.variant:
            return RationalService.bary_eval(r, z)

        zv = np.ravel(z)
        with np.errstate(divide='ignore', invalid='ignore'):
            diff = np.subtract.outer(zv, r.poles)
            values = r.constant + (1 / diff) @ r.residues
        at_pole = np.any(diff == 0, axis=1)
        if np.any(at_pole):
            logger.warning(f"Evaluation at {int(at_pole.sum())} retained pole(s); reporting inf")
            values[at_pole] = np.inf
        return values.reshape(z.shape)

    @staticmethod
    def approximant_degree(r: Approximant) -> int:
        """Support points minus one, or the number of retained poles"""
        return r.degree

    @staticmethod
    def approximant_poles(r: Approximant) -> np.ndarray:
        if r.variant == BarycentricRational.variant:
            return RationalService.poles(r)
        return np.array(r.poles)

    @staticmethod
    def approximant_residues(r: Approximant, p=None) -> np.ndarray:
        if r.variant == BarycentricRational.variant:
            return RationalService.residues(r, RationalService.poles(r) if p is None else p)
        return np.array(r.residues)

    @staticmethod
    def _standard_chop(coeffs: np.ndarray, tol: float) -> int:
        """
        Number of Chebyshev coefficients worth keeping: locate the plateau
        where the envelope stops decaying, then cut at the lowest point of the
        envelope tilted towards the plateau.
        """
        if tol >= 1:
            return 1
        n = coeffs.size
        if n < 17:
            return n

        b = np.abs(coeffs)
        envelope = np.maximum.accumulate(b[::-1])[::-1]
        if envelope[0] == 0:
            return 1
        envelope = envelope / envelope[0]

        # indices below are 1-based to match the envelope positions
        plateau_point = None
        for j in range(2, n + 1):
            j2 = int(np.floor(1.25 * j + 5.5))
            if j2 > n:
                return n
            e1 = envelope[j - 1]
            e2 = envelope[j2 - 1]
            if e1 == 0:
                plateau_point = j - 1
                break
            r = 3 * (1 - np.log(e1) / np.log(tol))
            if e2 / e1 > r:
                plateau_point = j - 1
                break

        if plateau_point is None:
            return n
        if envelope[plateau_point - 1] == 0:
            return plateau_point

        floor = tol ** (7 / 6)
        j3 = int(np.sum(envelope >= floor))
        if j3 < j2:
            j2 = j3 + 1
            envelope[j2 - 1] = floor
        tilted = np.log10(envelope[:j2]) + np.linspace(0, (-1 / 3) * np.log10(tol), j2)
        d = int(np.argmin(tilted)) + 1
        return max(d - 1, 1)

    @staticmethod
    def to_chebyshev(r: Approximant, tol: float = Config.CHEB_CHOP_TOL,
                     max_points: int = Config.CHEB_MAX_POINTS) -> ChebyshevPolynomial:
        """Sample r on Chebyshev grids of 2^k+1 points until the series chops"""
        k = 4
        while 2 ** k + 1 <= max_points:
            x = LinearAlgebraService.chebyshev_points(2 ** k)
            values = np.asarray(RationalService.eval_on_grid(r, x))
            if not np.all(np.isfinite(values)):
                raise NonResolvableError("Approximant is not finite on the Chebyshev grid")
            if np.iscomplexobj(values) and np.max(np.abs(values.imag)) <= 1e-13 * np.max(np.abs(values)):
                values = values.real

            coeffs = LinearAlgebraService.cheb_transform(values)
            cutoff = RationalService._standard_chop(coeffs, tol)
            if cutoff < coeffs.size:
                logger.debug(f"Chebyshev conversion: degree {cutoff - 1} from {coeffs.size} points")
                return ChebyshevPolynomial(coefficients=coeffs[:cutoff])
            k += 1

        raise NonResolvableError(f"Chebyshev series did not converge with {max_points} points")
