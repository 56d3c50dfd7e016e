# Baseline fit models
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from utils.helpers import complex_to_pairs

BASIS_CHEBYSHEV = 'chebyshev'
BASIS_MONOMIAL = 'monomial'
BASIS_FOURIER = 'fourier'
BASIS_FOURIER_PLUS_CHEB = 'fourier_plus_cheb'
BASIS_ARNOLDI_FOURIER = 'arnoldi_fourier'

BASES = (BASIS_CHEBYSHEV, BASIS_MONOMIAL, BASIS_FOURIER, BASIS_FOURIER_PLUS_CHEB, BASIS_ARNOLDI_FOURIER)


def _frozen(values, dtype=None) -> Optional[np.ndarray]:
    if values is None:
        return None
    array = np.array(values, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class LinearFit:
    """
    Coefficients in a fixed basis.

    chebyshev / monomial: degree = len(coefficients) - 1
    fourier: exp(i pi k x / T), k = -K..K
    fourier_plus_cheb: 2K+1 Fourier coefficients (T = 1) followed by T_0..T_p
    arnoldi_fourier: coefficients of the grid-orthonormal columns; hessenberg
        and start_norm replay the recurrence off the grid
    """
    basis: str
    coefficients: np.ndarray
    real_valued: bool = False
    half_width: float = 1.0
    n_modes: int = 0
    poly_degree: int = 0
    hessenberg: Optional[np.ndarray] = None
    start_norm: float = 1.0

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"Unknown basis '{self.basis}'")
        if self.basis == BASIS_ARNOLDI_FOURIER and self.hessenberg is None:
            raise ValueError("Arnoldi basis needs its Hessenberg recurrence")
        object.__setattr__(self, 'coefficients', _frozen(self.coefficients, dtype=complex))
        object.__setattr__(self, 'hessenberg', _frozen(self.hessenberg, dtype=complex))

    @property
    def degree(self) -> int:
        if self.basis in (BASIS_FOURIER, BASIS_ARNOLDI_FOURIER):
            return self.n_modes
        if self.basis == BASIS_FOURIER_PLUS_CHEB:
            return max(self.n_modes, self.poly_degree)
        return self.coefficients.size - 1

    def to_dict(self):
        return {
            'basis': self.basis,
            'coefficients': complex_to_pairs(self.coefficients),
            'real_valued': self.real_valued,
            'half_width': self.half_width,
            'n_modes': self.n_modes,
            'poly_degree': self.poly_degree,
        }

    def __repr__(self):
        return f'<LinearFit {self.basis} terms={self.coefficients.size}>'


@dataclass(frozen=True)
class SplineFit:
    knots: np.ndarray
    coefficients: np.ndarray  # shape (4, n-1), highest power first per piece

    def __post_init__(self):
        object.__setattr__(self, 'knots', _frozen(self.knots, dtype=float))
        coefficients = np.asarray(self.coefficients)
        dtype = complex if np.iscomplexobj(coefficients) else float
        object.__setattr__(self, 'coefficients', _frozen(coefficients, dtype=dtype))

    @property
    def degree(self) -> int:
        return 3

    def to_dict(self):
        return {
            'knots': self.knots.tolist(),
            'coefficients': [complex_to_pairs(row) for row in self.coefficients],
        }


@dataclass(frozen=True)
class FHInterpolant:
    nodes: np.ndarray
    values: np.ndarray
    weights: np.ndarray
    blending_degree: int
    scores: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'nodes', _frozen(self.nodes, dtype=float))
        values = np.asarray(self.values)
        object.__setattr__(self, 'values', _frozen(values, dtype=complex if np.iscomplexobj(values) else float))
        object.__setattr__(self, 'weights', _frozen(self.weights, dtype=float))

    @property
    def degree(self) -> int:
        return self.blending_degree

    def to_dict(self):
        return {
            'nodes': self.nodes.tolist(),
            'values': complex_to_pairs(self.values),
            'weights': self.weights.tolist(),
            'blending_degree': self.blending_degree,
        }
