import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np

from config.config import Config
from models.approximant import FitReport
from models.bench import (
    METHOD_AAA,
    METHOD_FH,
    METHOD_FOURIER_EXT,
    METHOD_FOURIER_EXT_VA,
    METHOD_FOURIER_POLY,
    METHOD_POLY_CHEB,
    METHOD_POLY_INTERP,
    METHOD_POLY_MONOMIAL,
    METHOD_SPLINE,
    ComplexErrorMap,
    ConvergenceCurve,
    ErrorProfile,
    MethodConfig,
)
from services.baseline_service import BaselineService
from services.rational_service import RationalService
from services.test_function_service import TestFunctionService
from utils.exceptions import InvalidInputError
from utils.helpers import equispaced_grid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MethodFit:
    """Outcome of one (method, n) fit, reduced to what a sweep records"""
    evaluator: Callable
    degree: Optional[int]
    is_interpolant: bool = False
    rescue_applied: bool = False
    fit: Any = None
    report: Optional[FitReport] = None


def fit_method(config: MethodConfig, X: np.ndarray, F: np.ndarray) -> MethodFit:
    """Fit samples F on the grid X with the configured method"""
    method = config.method

    if method == METHOD_AAA:
        r, report = RationalService.fit_equispaced(F, tol=config.tol, im_tol=config.im_tol, mmax=config.mmax)
        return MethodFit(
            evaluator=lambda x: RationalService.eval_on_grid(r, x),
            degree=report.degree,
            is_interpolant=report.is_interpolant,
            rescue_applied=report.rescue_applied,
            fit=r,
            report=report,
        )

    if method == METHOD_POLY_CHEB:
        fit = BaselineService.poly_ls_cheb(X, F, gamma=config.gamma)
    elif method == METHOD_POLY_MONOMIAL:
        fit = BaselineService.poly_ls_monomial(X, F, gamma=config.gamma)
    elif method == METHOD_FOURIER_EXT:
        fit = BaselineService.fourier_ext(X, F, T=config.T, gamma=config.gamma)
    elif method == METHOD_FOURIER_EXT_VA:
        fit = BaselineService.fourier_ext_va(X, F, T=config.T, gamma=config.gamma)
    elif method == METHOD_FOURIER_POLY:
        fit = BaselineService.fourier_plus_poly(X, F, gamma=config.gamma)
    elif method == METHOD_SPLINE:
        fit = BaselineService.cubic_spline(X, F)
    elif method == METHOD_FH:
        fit = BaselineService.fh_adaptive(X, F)
    elif method == METHOD_POLY_INTERP:
        fit = BaselineService.poly_interp(X, F)
    else:
        raise InvalidInputError(f"Unknown method '{method}'")

    interpolates = method in (METHOD_SPLINE, METHOD_FH, METHOD_POLY_INTERP)
    return MethodFit(
        evaluator=lambda x: BaselineService.evaluate(fit, x),
        degree=fit.degree,
        is_interpolant=interpolates,
        fit=fit,
    )


class ConvergenceService:
    """Convergence sweeps, complex-plane error maps and sample-point error profiles"""

    def __init__(self, grid_size: int = Config.DENSE_GRID_SIZE, max_workers: int = Config.MAX_WORKERS):
        if grid_size < 2:
            raise InvalidInputError(f"grid_size must be at least 2, got {grid_size}")
        if max_workers < 1:
            raise InvalidInputError(f"max_workers must be at least 1, got {max_workers}")
        self.grid_size = grid_size
        self.max_workers = max_workers

    def _measure(self, function_id: str, config: MethodConfig, n: int) -> Dict[str, Any]:
        """Fit one (method, n) pair; any failure is recorded as an infinite error"""
        try:
            X = equispaced_grid(n)
            F = TestFunctionService.sample(function_id, n)
            result = fit_method(config, X, F)
            error = TestFunctionService.max_dense_error(result.evaluator, function_id, self.grid_size)
            return {
                'error': error,
                'degree': result.degree,
                'is_interpolant': result.is_interpolant,
                'rescue_applied': result.rescue_applied,
            }
        except Exception as e:
            logger.error(f"{function_id}/{config.method} failed at n={n}: {str(e)}")
            return {'error': math.inf, 'degree': None, 'is_interpolant': False, 'rescue_applied': False}

    def run_convergence(self, function_id: str, methods: Sequence[MethodConfig],
                        n_values: Sequence[int]) -> List[ConvergenceCurve]:
        """
        Sweep n for each method and record the max error on the dense grid.
        Fits for distinct (method, n) pairs run concurrently; curves keep the
        configured method and n order.
        """
        TestFunctionService.get(function_id)
        if not methods:
            raise InvalidInputError("At least one method is required")
        n_values = [int(n) for n in n_values]
        if not n_values:
            raise InvalidInputError("n_values must not be empty")
        if any(n < 4 for n in n_values):
            raise InvalidInputError(f"Every n must be at least 4, got {min(n_values)}")
        if any(b <= a for a, b in zip(n_values, n_values[1:])):
            raise InvalidInputError("n_values must be strictly increasing")

        tasks = [(config, n) for config in methods for n in n_values]
        logger.info(f"Convergence sweep on {function_id}: {len(methods)} method(s) x {len(n_values)} n value(s)")

        if self.max_workers == 1:
            outcomes = [self._measure(function_id, config, n) for config, n in tasks]
        else:
            with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
                outcomes = list(pool.map(lambda task: self._measure(function_id, *task), tasks))

        curves = []
        position = 0
        for config in methods:
            curve = ConvergenceCurve(function_id=function_id, config=config)
            for n in n_values:
                outcome = outcomes[position]
                position += 1
                curve.append(n, outcome['error'], outcome['degree'],
                             outcome['is_interpolant'], outcome['rescue_applied'])
            failed = sum(math.isinf(e) for e in curve.errors)
            rescued = sum(curve.rescue_applied)
            logger.info(f"{function_id}/{config.method}: best error {min(curve.errors):.3e}, "
                        f"{failed} failed, {rescued} rescued")
            curves.append(curve)
        return curves

    def run_complex_map(self, function_id: str, n: int, box: Sequence[float] = (-2.0, 2.0, -2.0, 2.0),
                        resolution: int = 201, tol: float = Config.AAA_TOLERANCE,
                        im_tol: float = Config.BAD_POLE_IM_TOL) -> ComplexErrorMap:
        """|f - r| on a resolution x resolution grid over the box re0,re1,im0,im1"""
        if resolution < 2:
            raise InvalidInputError(f"Resolution must be at least 2 per axis, got {resolution}")
        re0, re1, im0, im1 = box
        if not (re0 < re1 and im0 < im1):
            raise InvalidInputError(f"Box must satisfy re0 < re1 and im0 < im1, got {tuple(box)}")

        F = TestFunctionService.sample(function_id, n)
        r, report = RationalService.fit_equispaced(F, tol=tol, im_tol=im_tol)

        re = np.linspace(re0, re1, resolution)
        im = np.linspace(im0, im1, resolution)
        Z = re[None, :] + 1j * im[:, None]
        with np.errstate(all='ignore'):
            abserr = np.abs(TestFunctionService.eval_test_function(function_id, Z) - RationalService.eval_on_grid(r, Z))

        poles = RationalService.approximant_poles(r)
        try:
            residues = RationalService.approximant_residues(r, poles)
        except Exception as e:
            logger.warning(f"Residues unavailable for {function_id} at n={n}: {str(e)}")
            residues = np.full(poles.shape, np.nan, dtype=complex)

        logger.info(f"Complex map of {function_id}, n={n}: degree {report.degree}, {poles.size} pole(s)")
        return ComplexErrorMap(function_id=function_id, n=n, re=re, im=im, abserr=abserr,
                               poles=poles, residues=residues, rescue_applied=report.rescue_applied)

    def run_error_profile(self, function_id: str, n: int, tol: float = Config.AAA_TOLERANCE,
                          im_tol: float = Config.BAD_POLE_IM_TOL) -> ErrorProfile:
        """Errors of the AAA fit at the sample points next to its error on the dense grid"""
        X = equispaced_grid(n)
        F = TestFunctionService.sample(function_id, n)
        r, report = RationalService.fit_equispaced(F, tol=tol, im_tol=im_tol)

        sample_errors = np.abs(F - RationalService.eval_on_grid(r, X))
        if report.rescue_applied:
            is_support = np.zeros(n, dtype=bool)
        else:
            is_support = np.isin(X, r.support_points)
        dense_error = TestFunctionService.max_dense_error(
            lambda x: RationalService.eval_on_grid(r, x), function_id, self.grid_size)

        return ErrorProfile(function_id=function_id, n=n, x=X, sample_errors=sample_errors,
                            is_support=is_support, dense_error=dense_error, degree=report.degree,
                            approximant=r)

    @staticmethod
    def default_n_values(function_id: str, nmin: int = Config.DEFAULT_NMIN, nmax: Optional[int] = None,
                         nstep: int = Config.DEFAULT_NSTEP) -> List[int]:
        """4, 8, ..., 200 by default; amber and sum6 run on to 400"""
        if nmax is None:
            nmax = Config.EXTENDED_NMAX if function_id in ('amber', 'sum6') else Config.DEFAULT_NMAX
        return list(range(nmin, nmax + 1, nstep))

