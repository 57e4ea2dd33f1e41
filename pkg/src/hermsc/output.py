"""CSV and run-manifest writers used by the command-line front end."""
from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__


def fmt(v):
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float) or hasattr(v, "dtype"):
        v = float(v)
        return "nan" if math.isnan(v) else f"{v:.17g}"
    return str(v)


def _atomic_write(path, text):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_csv(path, header, rows):
    """Header row plus 17-significant-digit rows, written atomically."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) for v in row])
    _atomic_write(path, buf.getvalue())
    return Path(path)


def write_json(path, obj):
    _atomic_write(path, json.dumps(obj, indent=2, sort_keys=True, default=_jsonable) + "\n")
    return Path(path)


def _jsonable(v):
    if hasattr(v, "tolist"):
        return v.tolist()
    if isinstance(v, Path):
        return str(v)
    raise TypeError(f"not JSON serializable: {type(v).__name__}")


@dataclass
class RunManifest:
    command: str
    parameters: dict
    outputs: list = field(default_factory=list)
    wall_time: float = 0.0
    version: str = __version__
    extra: dict = field(default_factory=dict)

    def write(self, path):
        d = asdict(self)
        d["outputs"] = [str(p) for p in self.outputs]
        return write_json(path, d)

    @classmethod
    def read(cls, path):
        with open(path) as fh:
            return cls(**json.load(fh))
