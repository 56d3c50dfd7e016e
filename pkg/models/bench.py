# Benchmark models
import math
from dataclasses import dataclass, field, asdict
from typing import Any, List, Optional

import numpy as np

from config.config import Config
from utils.helpers import complex_to_pairs

METHOD_AAA = 'aaa'
METHOD_POLY_CHEB = 'poly_cheb'
METHOD_POLY_MONOMIAL = 'poly_monomial'
METHOD_FOURIER_EXT = 'fourier_ext'
METHOD_FOURIER_EXT_VA = 'fourier_ext_va'
METHOD_FOURIER_POLY = 'fourier_poly'
METHOD_SPLINE = 'spline'
METHOD_FH = 'fh'
METHOD_POLY_INTERP = 'poly_interp'

METHODS = (
    METHOD_AAA, METHOD_POLY_CHEB, METHOD_POLY_MONOMIAL, METHOD_FOURIER_EXT, METHOD_FOURIER_EXT_VA,
    METHOD_FOURIER_POLY, METHOD_SPLINE, METHOD_FH, METHOD_POLY_INTERP,
)

# The six methods compared on every panel
PANEL_METHODS = (METHOD_SPLINE, METHOD_POLY_CHEB, METHOD_FOURIER_EXT, METHOD_FOURIER_POLY, METHOD_FH, METHOD_AAA)


@dataclass(frozen=True)
class MethodConfig:
    method: str
    gamma: float = Config.OVERSAMPLING_RATIO
    T: float = Config.EXTENSION_HALF_WIDTH
    tol: float = Config.AAA_TOLERANCE
    im_tol: float = Config.BAD_POLE_IM_TOL
    mmax: int = Config.AAA_MMAX

    def to_dict(self):
        return asdict(self)


@dataclass
class ConvergenceCurve:
    function_id: str
    config: MethodConfig
    n_values: List[int] = field(default_factory=list)
    errors: List[float] = field(default_factory=list)
    degrees: List[Optional[int]] = field(default_factory=list)
    is_interpolant: List[bool] = field(default_factory=list)
    rescue_applied: List[bool] = field(default_factory=list)

    def append(self, n: int, error: float, degree: Optional[int] = None,
               is_interpolant: bool = False, rescue_applied: bool = False):
        if self.n_values and n <= self.n_values[-1]:
            raise ValueError(f"n values must be strictly increasing, got {n} after {self.n_values[-1]}")
        if not error >= 0:
            error = math.inf
        self.n_values.append(n)
        self.errors.append(float(error))
        self.degrees.append(degree)
        self.is_interpolant.append(bool(is_interpolant))
        self.rescue_applied.append(bool(rescue_applied))

    @property
    def method(self) -> str:
        return self.config.method

    @property
    def last_interpolant_n(self) -> Optional[int]:
        """Final n at which the fit interpolates all samples"""
        hits = [n for n, flag in zip(self.n_values, self.is_interpolant) if flag]
        return hits[-1] if hits else None

    def first_n_below(self, level: float) -> Optional[int]:
        for n, error in zip(self.n_values, self.errors):
            if error <= level:
                return n
        return None

    def to_dict(self):
        return {
            'function': self.function_id,
            'config': self.config.to_dict(),
            'n': self.n_values,
            'error': [None if math.isinf(e) else e for e in self.errors],
            'degree': self.degrees,
            'is_interpolant': self.is_interpolant,
            'rescue': self.rescue_applied,
            'last_interpolant_n': self.last_interpolant_n,
        }


@dataclass(frozen=True)
class ComplexErrorMap:
    function_id: str
    n: int
    re: np.ndarray
    im: np.ndarray
    abserr: np.ndarray  # shape (len(im), len(re)), row-major over im then re
    poles: np.ndarray
    residues: np.ndarray
    rescue_applied: bool = False

    def to_dict(self):
        return {
            'function': self.function_id,
            'n': self.n,
            're': self.re.tolist(),
            'im': self.im.tolist(),
            'abserr': [[None if not np.isfinite(v) else float(v) for v in row] for row in self.abserr],
            'poles': complex_to_pairs(self.poles),
            'residues': complex_to_pairs(self.residues),
            'rescue_applied': self.rescue_applied,
        }


@dataclass(frozen=True)
class ErrorProfile:
    function_id: str
    n: int
    x: np.ndarray
    sample_errors: np.ndarray
    is_support: np.ndarray
    dense_error: float
    degree: int
    approximant: Any = field(default=None, repr=False, compare=False)

    def to_dict(self):
        return {
            'function': self.function_id,
            'n': self.n,
            'x': self.x.tolist(),
            'error': self.sample_errors.tolist(),
            'is_support': self.is_support.tolist(),
            'dense_error': self.dense_error,
            'degree': self.degree,
        }


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    measured: str
    expected: str

    def to_dict(self):
        return asdict(self)
