import json
import logging
import sys
from pathlib import Path
from typing import Iterable

import pandas as pd

from cskit.errors import IoError
from cskit.schemas.records import Artifact

logger = logging.getLogger(__name__)


def to_json_text(payload) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    if isinstance(payload, Artifact):
        payload = payload.to_json_dict()
    elif isinstance(payload, list):
        payload = [p.to_json_dict() if isinstance(p, Artifact) else p for p in payload]
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _flatten(value):
    if isinstance(value, list):
        if value and isinstance(value[0], list):
            return ";".join("{" + ",".join(str(x) for x in item) + "}" for item in value)
        return ";".join(str(x) for x in value)
    return value


def to_csv_text(records: Iterable[Artifact]) -> str:
    """One row per record, list fields semicolon-joined, columns in field order."""
    rows = [{k: _flatten(v) for k, v in r.to_json_dict().items()} for r in records]
    return pd.DataFrame(rows).to_csv(index=False, lineterminator="\n")


def write_text(text: str, out_path: str | Path | None = None) -> None:
    """Write to out_path, or stdout when no path is given."""
    if out_path is None or str(out_path) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        path = Path(out_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        raise IoError(f"Could not write {out_path}: {str(e)}")
    logger.info(f"Wrote {path}")
