import csv
import json
import logging
import math
from typing import Any, Dict, List, Sequence

import numpy as np

from config.config import Config
from models.bench import ComplexErrorMap, ConvergenceCurve, MethodConfig
from repositories.base_repository import BaseRepository
from utils.exceptions import ExportError
from utils.helpers import format_sci17, parse_float

logger = logging.getLogger(__name__)

CONVERGENCE_HEADER = ['function', 'method', 'n', 'error', 'degree', 'is_interpolant', 'rescue']
MAP_HEADER = ['re', 'im', 'abserr']
POLES_HEADER = ['re', 'im', 'residue_re', 'residue_im']
PROFILE_HEADER = ['x', 'error', 'is_support']


def _write_rows(path: str, header: Sequence[str], rows) -> str:
    BaseRepository.ensure_parent(path)
    try:
        with open(path, 'w', newline='', encoding='utf-8') as handle:
            writer = csv.writer(handle, lineterminator='\n')
            writer.writerow(header)
            writer.writerows(rows)
    except OSError as e:
        raise ExportError(f"Cannot write {path}: {e}") from e
    return path


def _read_rows(path: str, header: Sequence[str]) -> List[Dict[str, str]]:
    try:
        with open(path, newline='', encoding='utf-8') as handle:
            reader = csv.DictReader(handle)
            if reader.fieldnames != list(header):
                raise ExportError(f"{path}: expected header {','.join(header)}, got {reader.fieldnames}")
            return list(reader)
    except OSError as e:
        raise ExportError(f"Cannot read {path}: {e}") from e


class ResultRepository(BaseRepository):
    """CSV, plot-data and metadata files for convergence sweeps, complex maps and error profiles"""

    def save(self, curves: List[ConvergenceCurve], path: str) -> str:
        rows = []
        for curve in curves:
            for n, error, degree, interpolant, rescue in zip(
                    curve.n_values, curve.errors, curve.degrees, curve.is_interpolant, curve.rescue_applied):
                rows.append([
                    curve.function_id,
                    curve.method,
                    n,
                    format_sci17(error),
                    '' if degree is None else degree,
                    int(interpolant),
                    int(rescue),
                ])
        _write_rows(path, CONVERGENCE_HEADER, rows)
        logger.info(f"Wrote {len(rows)} convergence row(s) to {path}")
        return path

    def load(self, path: str) -> List[ConvergenceCurve]:
        """Rebuild curves from a convergence CSV; only the method id of each config survives"""
        curves: Dict[tuple, ConvergenceCurve] = {}
        for row in _read_rows(path, CONVERGENCE_HEADER):
            key = (row['function'], row['method'])
            if key not in curves:
                curves[key] = ConvergenceCurve(function_id=row['function'], config=MethodConfig(method=row['method']))
            curves[key].append(
                int(row['n']),
                parse_float(row['error']),
                int(row['degree']) if row['degree'] else None,
                row['is_interpolant'] == '1',
                row['rescue'] == '1',
            )
        return list(curves.values())

    def save_plot_data(self, curves: List[ConvergenceCurve], path: str) -> str:
        """One whitespace-separated block per method: n and log10 of the error"""
        target = self.sibling_path(path, '.plot.dat')
        BaseRepository.ensure_parent(target)
        try:
            with open(target, 'w', encoding='utf-8') as handle:
                for index, curve in enumerate(curves):
                    if index:
                        handle.write('\n\n')
                    handle.write(f"# {curve.function_id} {curve.method}\n")
                    handle.write("# n log10_error\n")
                    for n, error in zip(curve.n_values, curve.errors):
                        level = 'inf' if math.isinf(error) else (
                            '-inf' if error == 0 else format_sci17(math.log10(error)))
                        handle.write(f"{n} {level}\n")
        except OSError as e:
            raise ExportError(f"Cannot write {target}: {e}") from e
        return target

    def save_metadata(self, path: str, metadata: Dict[str, Any]) -> str:
        """<out>.meta.json next to the CSV, with the defaults actually in force"""
        target = path + '.meta.json'
        record = dict(metadata)
        record.setdefault('defaults', {
            'dense_grid_size': Config.DENSE_GRID_SIZE,
            'aaa_tolerance': Config.AAA_TOLERANCE,
            'aaa_mmax': Config.AAA_MMAX,
            'bad_pole_im_tol': Config.BAD_POLE_IM_TOL,
            'lsq_rtol': Config.LSQ_RTOL,
            'oversampling_ratio': Config.OVERSAMPLING_RATIO,
            'extension_half_width': Config.EXTENSION_HALF_WIDTH,
            'fh_max_degree': Config.FH_MAX_DEGREE,
        })
        BaseRepository.ensure_parent(target)
        try:
            with open(target, 'w', encoding='utf-8') as handle:
                json.dump(record, handle, indent=2, sort_keys=True)
                handle.write('\n')
        except OSError as e:
            raise ExportError(f"Cannot write {target}: {e}") from e
        return target

    def save_map(self, error_map: ComplexErrorMap, path: str) -> List[str]:
        """Map CSV row-major over im then re, plus the pole list in <out>.poles.csv"""
        rows = []
        for i, im in enumerate(error_map.im):
            for j, re in enumerate(error_map.re):
                rows.append([format_sci17(re), format_sci17(im), format_sci17(error_map.abserr[i, j])])
        _write_rows(path, MAP_HEADER, rows)

        poles_path = self.sibling_path(path, '.poles.csv')
        pole_rows = [
            [format_sci17(p.real), format_sci17(p.imag), format_sci17(a.real), format_sci17(a.imag)]
            for p, a in zip(error_map.poles, error_map.residues)
        ]
        _write_rows(poles_path, POLES_HEADER, pole_rows)
        logger.info(f"Wrote {len(rows)} map value(s) to {path} and {len(pole_rows)} pole(s) to {poles_path}")
        return [path, poles_path]

    def load_map(self, path: str) -> Dict[str, np.ndarray]:
        rows = _read_rows(path, MAP_HEADER)
        poles = _read_rows(self.sibling_path(path, '.poles.csv'), POLES_HEADER)
        return {
            're': np.array([parse_float(row['re']) for row in rows]),
            'im': np.array([parse_float(row['im']) for row in rows]),
            'abserr': np.array([parse_float(row['abserr']) for row in rows]),
            'poles': np.array([complex(parse_float(row['re']), parse_float(row['im'])) for row in poles]),
            'residues': np.array([complex(parse_float(row['residue_re']), parse_float(row['residue_im']))
                                  for row in poles]),
        }

    def save_profile(self, profile, path: str) -> str:
        rows = [
            [format_sci17(x), format_sci17(e), int(s)]
            for x, e, s in zip(profile.x, profile.sample_errors, profile.is_support)
        ]
        return _write_rows(path, PROFILE_HEADER, rows)
