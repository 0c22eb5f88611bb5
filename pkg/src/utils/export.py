"""CSV and JSON writers for command artifacts.

Floats are written with 17 significant digits so every value read back is
bit-identical to the one computed.
"""

import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, Mapping, Sequence

import numpy as np
import pandas as pd

logger = logging.getLogger(__name__)

FLOAT_FORMAT = '%.17g'


def write_csv(path: Path, columns: Mapping[str, Sequence[Any]], header: Sequence[str]) -> Path:
    """Write columns to a CSV file with a fixed header order.

    Missing or NaN values become empty fields.

    Args:
        path: Target file; parent directories are created
        columns: Column name -> values
        header: Column order (every name must be present in `columns`)

    Returns:
        The written path
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame({name: columns[name] for name in header}, columns=list(header))
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, na_rep='', lineterminator='\n',
                 encoding='utf-8')
    logger.debug("wrote %d rows to %s", len(frame), path)
    return path


def _jsonable(value: Any) -> Any:
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if math.isfinite(value) else None
    if hasattr(value, 'value') and isinstance(getattr(value, 'value'), str):
        return value.value
    return value


def write_json(path: Path, payload: Dict[str, Any]) -> Path:
    """Write a JSON document with sorted keys; non-finite floats become null."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = json.dumps(_jsonable(payload), indent=2, sort_keys=True, allow_nan=False)
    path.write_text(text + '\n', encoding='utf-8')
    logger.debug("wrote %s", path)
    return path
