import logging
from dataclasses import dataclass

import numpy as np
import scipy.fft
import scipy.linalg

from config.config import Config
from utils.exceptions import InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SvdResult:
    singular_values: np.ndarray
    left_vectors: np.ndarray
    right_vectors: np.ndarray


def as_dense_matrix(A) -> np.ndarray:
    """Validate a 2-D finite matrix; real matrices stay real, anything else is complex"""
    A = np.asarray(A)
    if A.ndim != 2:
        raise InvalidInputError(f"Expected a 2-D matrix, got shape {A.shape}")
    if not np.iscomplexobj(A):
        A = A.astype(float)
    if not np.all(np.isfinite(A)):
        raise InvalidInputError("Matrix has non-finite entries")
    return A


class LinearAlgebraService:
    """Dense kernels shared by every fitter"""

    @staticmethod
    def svd(A, full: bool = False) -> SvdResult:
        """
        Singular value decomposition A = U diag(s) V*.
        With full=True the right vectors span the whole column space, so the
        last column is a null vector of a wide matrix.
        """
        A = as_dense_matrix(A)
        if A.shape[0] < 1 or A.shape[1] < 1:
            raise InvalidInputError(f"Matrix must be nonempty, got shape {A.shape}")

        U, s, Vh = scipy.linalg.svd(A, full_matrices=full, lapack_driver='gesdd')
        return SvdResult(singular_values=s, left_vectors=U, right_vectors=Vh.conj().T)

    @staticmethod
    def least_squares_min_norm(A, b, rtol: float = Config.LSQ_RTOL) -> np.ndarray:
        """
        Minimum-norm solution of min ||Ax - b||_2 with singular values below
        rtol * sigma_1 treated as zero.
        """
        A = as_dense_matrix(A)
        b = np.asarray(b)
        if A.size == 0:
            raise InvalidInputError("Empty least-squares matrix")
        if b.shape[0] != A.shape[0]:
            raise InvalidInputError(f"Right-hand side has {b.shape[0]} rows, matrix has {A.shape[0]}")
        if not 0 < rtol < 1:
            raise InvalidInputError(f"rtol must lie in (0, 1), got {rtol}")

        result = LinearAlgebraService.svd(A)
        s = result.singular_values
        if s[0] == 0:
            return np.zeros(A.shape[1], dtype=np.result_type(A, b))

        keep = s > rtol * s[0]
        U = result.left_vectors[:, keep]
        V = result.right_vectors[:, keep]
        return V @ ((U.conj().T @ b) / s[keep])

    @staticmethod
    def generalized_eig(A, B, infinite_ratio: float = 1e-14) -> np.ndarray:
        """
        Finite generalized eigenvalues of the pencil (A, B).

        QZ returns each eigenvalue as a pair (alpha, beta); an eigenvalue is
        infinite when |beta| <= infinite_ratio * |alpha|, which catches both the
        exact zeros of a singular B and their rounded counterparts.
        """
        A = as_dense_matrix(A)
        B = as_dense_matrix(B)
        if A.shape[0] != A.shape[1] or A.shape != B.shape:
            raise InvalidInputError(f"Pencil needs square matrices of equal size, got {A.shape} and {B.shape}")
        if A.shape[0] == 0:
            return np.zeros(0, dtype=complex)

        alpha, beta = scipy.linalg.eig(A, B, right=False, homogeneous_eigvals=True)
        finite = np.abs(beta) > infinite_ratio * np.abs(alpha)
        finite &= np.abs(alpha) + np.abs(beta) > 0
        return alpha[finite] / beta[finite]

    @staticmethod
    def chebyshev_points(m: int) -> np.ndarray:
        """Chebyshev points of the second kind x_j = cos(j pi / m), j = 0..m"""
        if m == 0:
            return np.array([1.0])
        return np.cos(np.pi * np.arange(m + 1) / m)

    @staticmethod
    def cheb_transform(values) -> np.ndarray:
        """Values at x_j = cos(j pi / m) -> coefficients c_0..c_m of sum c_k T_k"""
        values = np.asarray(values)
        if values.ndim != 1 or values.size < 1:
            raise InvalidInputError("cheb_transform needs at least one value")
        if np.iscomplexobj(values):
            return (LinearAlgebraService.cheb_transform(values.real)
                    + 1j * LinearAlgebraService.cheb_transform(values.imag))

        m = values.size - 1
        if m == 0:
            return values.astype(float)

        coeffs = scipy.fft.dct(values.astype(float), type=1) / m
        coeffs[0] /= 2
        coeffs[-1] /= 2
        return coeffs

    @staticmethod
    def inverse_cheb_transform(coeffs) -> np.ndarray:
        """Coefficients c_0..c_m -> values at x_j = cos(j pi / m)"""
        coeffs = np.asarray(coeffs)
        if coeffs.ndim != 1 or coeffs.size < 1:
            raise InvalidInputError("inverse_cheb_transform needs at least one coefficient")
        if np.iscomplexobj(coeffs):
            return (LinearAlgebraService.inverse_cheb_transform(coeffs.real)
                    + 1j * LinearAlgebraService.inverse_cheb_transform(coeffs.imag))

        if coeffs.size == 1:
            return coeffs.astype(float)

        scaled = coeffs.astype(float) / 2
        scaled[0] = coeffs[0]
        scaled[-1] = coeffs[-1]
        return scipy.fft.dct(scaled, type=1)
