import logging
import os
from typing import Any, Dict, Iterable, Optional

from dotenv import dotenv_values

from utils.exceptions import InvalidInputError

logger = logging.getLogger(__name__)


def load_run_config(path: Optional[str], field_names: Iterable[str] = ()) -> Dict[str, str]:
    """
    Read a key=value run-configuration file; keys mirror the CLI option names.

    Keys are matched to field_names ignoring case and '-' vs '_', so `T`, `t`
    and `IM-TOL` all land on the declared field. Other keys pass through unchanged.
    """
    if not path:
        return {}
    if not os.path.isfile(path):
        raise InvalidInputError(f"Config file not found: {path}")

    canonical = {name.lower(): name for name in field_names}
    values = {}
    for key, value in dotenv_values(path).items():
        if value is None:
            continue
        key = key.strip().replace('-', '_')
        values[canonical.get(key.lower(), key)] = value
    logger.info(f"Loaded {len(values)} option(s) from {path}")
    return values


def merge_options(file_options: Dict[str, Any], cli_options: Dict[str, Any]) -> Dict[str, Any]:
    """File values first, then every CLI option that was actually given"""
    merged = dict(file_options)
    merged.update({key: value for key, value in cli_options.items() if value is not None})
    return merged
