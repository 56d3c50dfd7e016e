# Utils module
import math
from typing import Any, List, Sequence

import numpy as np

from utils.exceptions import InvalidInputError


def equispaced_grid(n: int) -> np.ndarray:
    """n equispaced points x_j = -1 + 2j/(n-1) on [-1, 1]"""
    if n < 2:
        raise InvalidInputError(f"Need at least 2 grid points, got {n}")
    return np.linspace(-1.0, 1.0, n)


def format_sci17(value: float) -> str:
    """Decimal scientific notation with 17 significant digits; 'inf' and 'nan' spelled out"""
    if math.isnan(value):
        return 'nan'
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return f"{value:.16e}"


def parse_float(text: str) -> float:
    """Inverse of format_sci17"""
    text = text.strip()
    if text in ('inf', '+inf', 'Inf'):
        return math.inf
    return float(text)


def parse_csv_list(value, cast=str) -> List[Any]:
    """Parse 'a,b,c' (or an already split sequence) into a list"""
    if value is None:
        return []
    if isinstance(value, str):
        items = [item.strip() for item in value.split(',')]
    else:
        items = list(value)
    return [cast(item) for item in items if item != '']


def as_complex_vector(values: Sequence) -> np.ndarray:
    """Convert a JSON-style list (numbers or [re, im] pairs) to a numpy vector"""
    converted = []
    for value in values:
        if isinstance(value, (list, tuple)):
            converted.append(complex(value[0], value[1]))
        else:
            converted.append(value)
    array = np.asarray(converted)
    if np.iscomplexobj(array) and np.all(array.imag == 0):
        array = array.real
    return array


def complex_to_pairs(values: np.ndarray) -> List[List[float]]:
    """Split a complex vector into [re, im] pairs for JSON output"""
    values = np.asarray(values, dtype=complex)
    return [[float(v.real), float(v.imag)] for v in values]


def validate_samples(X, F, min_points: int = 2):
    """
    Check a sample grid and its data: 1-D, equal length, finite, strictly increasing.
    Real-valued complex data is returned as real.
    """
    X = np.asarray(X, dtype=float)
    F = np.asarray(F)
    if X.ndim != 1 or F.shape != X.shape:
        raise InvalidInputError(f"Sample grid and samples must be 1-D of equal length, got {X.shape} and {F.shape}")
    if X.size < min_points:
        raise InvalidInputError(f"Need at least {min_points} samples, got {X.size}")
    if not (np.all(np.isfinite(X)) and np.all(np.isfinite(F))):
        raise InvalidInputError("Samples must be finite")

    steps = np.diff(X)
    if np.any(steps == 0):
        raise InvalidInputError("Duplicate sample points")
    if np.any(steps < 0):
        raise InvalidInputError("Sample points must be strictly increasing")

    if np.iscomplexobj(F) and np.all(F.imag == 0):
        F = F.real
    if not np.iscomplexobj(F):
        F = F.astype(float)
    return X, F
