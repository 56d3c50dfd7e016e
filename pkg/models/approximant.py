# Rational approximant models
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from utils.helpers import complex_to_pairs


def _frozen_array(values, dtype=None) -> np.ndarray:
    array = np.array(values, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


def _native(values) -> np.ndarray:
    """Keep real data real; promote everything else to complex"""
    array = np.asarray(values)
    if np.isrealobj(array):
        return _frozen_array(array, dtype=float)
    return _frozen_array(array, dtype=complex)


@dataclass(frozen=True)
class BarycentricRational:
    support_points: np.ndarray
    support_values: np.ndarray
    weights: np.ndarray

    variant = 'barycentric'

    def __post_init__(self):
        object.__setattr__(self, 'support_points', _frozen_array(self.support_points, dtype=float))
        object.__setattr__(self, 'support_values', _native(self.support_values))
        object.__setattr__(self, 'weights', _native(self.weights))

        m = self.support_points.size
        if m == 0 or self.support_values.size != m or self.weights.size != m:
            raise ValueError("support points, values and weights must be nonempty and of equal length")
        if np.unique(self.support_points).size != m:
            raise ValueError("support points must be pairwise distinct")
        if not np.any(self.weights != 0):
            raise ValueError("at least one weight must be nonzero")

    @property
    def degree(self) -> int:
        return self.support_points.size - 1

    @property
    def is_real(self) -> bool:
        return np.isrealobj(self.support_values) and np.isrealobj(self.weights)

    def to_dict(self):
        return {
            'variant': self.variant,
            'degree': self.degree,
            'support_points': self.support_points.tolist(),
            'support_values': complex_to_pairs(self.support_values),
            'weights': complex_to_pairs(self.weights),
        }

    def __repr__(self):
        return f'<BarycentricRational degree={self.degree}>'


@dataclass(frozen=True)
class PartialFractionRational:
    poles: np.ndarray
    residues: np.ndarray
    constant: complex

    variant = 'partial_fraction'

    def __post_init__(self):
        object.__setattr__(self, 'poles', _frozen_array(self.poles, dtype=complex))
        object.__setattr__(self, 'residues', _frozen_array(self.residues, dtype=complex))
        object.__setattr__(self, 'constant', complex(self.constant))
        if self.poles.size != self.residues.size:
            raise ValueError("poles and residues must have equal length")

    @property
    def degree(self) -> int:
        return self.poles.size

    def to_dict(self):
        return {
            'variant': self.variant,
            'degree': self.degree,
            'poles': complex_to_pairs(self.poles),
            'residues': complex_to_pairs(self.residues),
            'constant': [self.constant.real, self.constant.imag],
        }

    def __repr__(self):
        return f'<PartialFractionRational degree={self.degree}>'


def interpolation_degree(n: int) -> int:
    """Degree ceil((n-1)/2) at which an AAA fit on n points interpolates all of them"""
    return n // 2


# Exactly one of the two representations; dispatch on `variant`
Approximant = Union[BarycentricRational, PartialFractionRational]


@dataclass(frozen=True)
class FitReport:
    degree: int
    grid_residual: float
    is_interpolant: bool
    n_bad_poles: int = 0
    rescue_applied: bool = False
    n_samples: int = 0
    bad_poles: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.rescue_applied != (self.n_bad_poles > 0):
            raise ValueError("rescue_applied must be set exactly when bad poles were found")
        if self.n_samples > 0 and self.is_interpolant != (self.degree == interpolation_degree(self.n_samples)):
            raise ValueError("is_interpolant must hold exactly at degree ceil((n-1)/2)")

    def to_dict(self):
        return {
            'degree': self.degree,
            'grid_residual': self.grid_residual,
            'is_interpolant': self.is_interpolant,
            'n_bad_poles': self.n_bad_poles,
            'rescue_applied': self.rescue_applied,
            'n_samples': self.n_samples,
            'bad_poles': complex_to_pairs(np.asarray(self.bad_poles, dtype=complex)),
        }


@dataclass(frozen=True)
class ChebyshevPolynomial:
    coefficients: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', _native(np.atleast_1d(self.coefficients)))

    @property
    def degree(self) -> int:
        return self.coefficients.size - 1

    def __call__(self, x):
        # Clenshaw recurrence
        return np.polynomial.chebyshev.chebval(x, self.coefficients)

    def to_dict(self):
        return {
            'degree': self.degree,
            'coefficients': complex_to_pairs(self.coefficients),
        }

    def __repr__(self):
        return f'<ChebyshevPolynomial degree={self.degree}>'
