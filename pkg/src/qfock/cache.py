"""Content-addressed JSON cache on disk.

Entries are keyed by a namespace and a JSON-serializable key together with
``FORMAT_VERSION``; unreadable or mismatched files are treated as misses and
overwritten.  Writes go to a temporary file that is then renamed into place.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

FORMAT_VERSION = 1
ENV_VAR = "QFOCK_CACHE_DIR"


class JsonCache:
    def __init__(self, directory):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def _path(self, namespace: str, key) -> Path:
        blob = json.dumps([FORMAT_VERSION, namespace, key], sort_keys=True, separators=(",", ":"))
        digest = hashlib.sha256(blob.encode()).hexdigest()
        return self.directory / f"{namespace}-{digest[:32]}.json"

    def get(self, namespace: str, key):
        path = self._path(namespace, key)
        try:
            with open(path) as fh:
                record = json.load(fh)
        except (OSError, ValueError):
            return None
        if not isinstance(record, dict) or record.get("version") != FORMAT_VERSION or record.get("key") != key:
            return None
        return record.get("value")

    def put(self, namespace: str, key, value) -> None:
        path = self._path(namespace, key)
        record = {"version": FORMAT_VERSION, "namespace": namespace, "key": key, "value": value}
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(record, fh, sort_keys=True)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


_active: list = [None]


def set_cache_dir(directory) -> None:
    """Enable the disk cache in ``directory``; ``None`` disables it."""
    _active[0] = JsonCache(directory) if directory else None


def active_cache():
    if _active[0] is None and os.environ.get(ENV_VAR):
        _active[0] = JsonCache(os.environ[ENV_VAR])
    return _active[0]
