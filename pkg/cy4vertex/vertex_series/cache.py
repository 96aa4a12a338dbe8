"""CY4Vertex memoized fixed point classes

Square root classes are pickled under CY4VERTEX_CACHE_DIR, keyed by a
digest of the chart data; caching is off when the directory is unset.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from pathlib import Path
from typing import Callable
import hashlib
import pickle

from cy4vertex import settings


# Bumped whenever cached classes change meaning
CACHE_FORMAT = 2


def cache_key(*parts) -> str:
    text = "\x1f".join(str(part) for part in (CACHE_FORMAT,) + parts)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def memoized(key: str, compute: Callable, directory: str = None):
    """compute() or its pickled value from an earlier run."""
    directory = settings.CY4VERTEX_CACHE_DIR if directory is None else directory
    if not directory:
        return compute()
    path = Path(directory) / f"{key}.pickle"
    if path.exists():
        try:
            with path.open("rb") as handle:
                return pickle.load(handle)
        except (OSError, pickle.UnpicklingError, EOFError) as err:
            settings.warn(f"Ignoring unreadable cache entry {path.name}: {err}")
    value = compute()
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("wb") as handle:
            pickle.dump(value, handle)
    except OSError as err:
        settings.warn(f"Cannot write cache entry {path.name}: {err}")
    return value
