# Config module
import os


def _env_float(name: str, default: float) -> float:
    return float(os.environ.get(name, default))


def _env_int(name: str, default: int) -> int:
    return int(os.environ.get(name, default))


class Config:
    SECRET_KEY = os.environ.get('SECRET_KEY') or 'dev-secret-key-change-in-production'

    # AAA settings
    AAA_TOLERANCE = _env_float('AAA_TOLERANCE', 1e-13)
    AAA_MMAX = _env_int('AAA_MMAX', 99)  # degree < 100
    BAD_POLE_IM_TOL = _env_float('BAD_POLE_IM_TOL', 1e-8)

    # Linear algebra settings
    LSQ_RTOL = _env_float('LSQ_RTOL', 1e-14)
    CHEB_CHOP_TOL = _env_float('CHEB_CHOP_TOL', 2.220446049250313e-16)
    CHEB_MAX_POINTS = _env_int('CHEB_MAX_POINTS', 2 ** 16 + 1)

    # Baseline method settings
    OVERSAMPLING_RATIO = _env_float('OVERSAMPLING_RATIO', 2.0)
    EXTENSION_HALF_WIDTH = _env_float('EXTENSION_HALF_WIDTH', 2.0)
    FH_MAX_DEGREE = _env_int('FH_MAX_DEGREE', 20)

    # Benchmark settings
    DENSE_GRID_SIZE = _env_int('DENSE_GRID_SIZE', 1000)
    DEFAULT_NMIN = _env_int('DEFAULT_NMIN', 4)
    DEFAULT_NMAX = _env_int('DEFAULT_NMAX', 200)
    EXTENDED_NMAX = _env_int('EXTENDED_NMAX', 400)  # amber and sum6
    DEFAULT_NSTEP = _env_int('DEFAULT_NSTEP', 4)
    MAX_WORKERS = _env_int('MAX_WORKERS', 4)

    # Output settings
    OUTPUT_FOLDER = os.environ.get('OUTPUT_FOLDER') or os.path.join(
        os.path.dirname(os.path.dirname(__file__)), 'results')
    LOG_FILE = os.environ.get('LOG_FILE', 'bench.log')
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO')

    # API settings
    JSONIFY_PRETTYPRINT_REGULAR = True


class TestingConfig(Config):
    TESTING = True
    LOG_FILE = ''
    MAX_WORKERS = 1
