import logging
from typing import Tuple

import numpy as np

from config.config import Config
from models.approximant import Approximant, BarycentricRational, PartialFractionRational
from repositories.base_repository import BaseRepository
from utils.exceptions import ExportError
from utils.helpers import format_sci17, parse_float

logger = logging.getLogger(__name__)


class ApproximantRepository(BaseRepository):
    """
    Plain-text approximant files.

    Header line: variant degree tol, with the constant's real and imaginary
    parts appended for partial fractions. Then one record per support point
    (t, Re f, Im f, Re w, Im w) or per pole (Re p, Im p, Re a, Im a).
    Values carry 17 significant digits, so a save/load cycle is exact.
    """

    def __init__(self, tol: float = Config.AAA_TOLERANCE):
        self.tol = tol

    def save(self, record: Approximant, path: str) -> str:
        lines = [self._header(record)]
        if record.variant == BarycentricRational.variant:
            f = record.support_values.astype(complex)
            w = record.weights.astype(complex)
            for t, fj, wj in zip(record.support_points, f, w):
                lines.append(' '.join(format_sci17(v) for v in (t, fj.real, fj.imag, wj.real, wj.imag)))
        else:
            for p, a in zip(record.poles.astype(complex), record.residues.astype(complex)):
                lines.append(' '.join(format_sci17(v) for v in (p.real, p.imag, a.real, a.imag)))

        self.ensure_parent(path)
        try:
            with open(path, 'w', encoding='utf-8') as handle:
                handle.write('\n'.join(lines) + '\n')
        except OSError as e:
            raise ExportError(f"Cannot write {path}: {e}") from e
        logger.debug(f"Saved {record.variant} approximant of degree {record.degree} to {path}")
        return path

    def _header(self, record: Approximant) -> str:
        fields = [record.variant, str(record.degree), format_sci17(self.tol)]
        if record.variant == PartialFractionRational.variant:
            c = complex(record.constant)
            fields += [format_sci17(c.real), format_sci17(c.imag)]
        return ' '.join(fields)

    def load(self, path: str) -> Approximant:
        approximant, _ = self.load_with_tolerance(path)
        return approximant

    def load_with_tolerance(self, path: str) -> Tuple[Approximant, float]:
        try:
            with open(path, encoding='utf-8') as handle:
                lines = [line.split() for line in handle if line.strip()]
        except OSError as e:
            raise ExportError(f"Cannot read {path}: {e}") from e
        if not lines:
            raise ExportError(f"{path} is empty")

        header, records = lines[0], lines[1:]
        variant = header[0]
        try:
            degree = int(header[1])
            tol = parse_float(header[2])
            values = np.array([[parse_float(v) for v in record] for record in records])
            if values.ndim != 2:
                values = values.reshape(len(records), 0 if not records else -1)
        except (IndexError, ValueError) as e:
            raise ExportError(f"{path}: malformed approximant file ({e})") from e

        if variant == BarycentricRational.variant:
            if values.shape[1:] != (5,) or degree != len(records) - 1:
                raise ExportError(f"{path}: expected {degree + 1} records of 5 values")
            f = values[:, 1] + 1j * values[:, 2]
            w = values[:, 3] + 1j * values[:, 4]
            approximant = BarycentricRational(
                support_points=values[:, 0],
                support_values=f.real if np.all(f.imag == 0) else f,
                weights=w.real if np.all(w.imag == 0) else w,
            )
        elif variant == PartialFractionRational.variant:
            if len(header) != 5 or (records and values.shape[1] != 4) or degree != len(records):
                raise ExportError(f"{path}: expected a constant and {degree} records of 4 values")
            constant = complex(parse_float(header[3]), parse_float(header[4]))
            approximant = PartialFractionRational(
                poles=values[:, 0] + 1j * values[:, 1] if records else [],
                residues=values[:, 2] + 1j * values[:, 3] if records else [],
                constant=constant.real if constant.imag == 0 else constant,
            )
        else:
            raise ExportError(f"{path}: unknown variant '{variant}'")
        return approximant, tol
