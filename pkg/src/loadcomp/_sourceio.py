"""Input source handling shared by the parsers."""

from __future__ import annotations

from pathlib import Path
from typing import Any


def read_text(source: Any) -> str:
    """Return text content from bytes, str, a Path, or a readable stream.

    A plain ``str`` is treated as content, not as a file name; use a
    ``pathlib.Path`` (or the ``load_*`` helpers) to read from disk.
    """
    if isinstance(source, Path):
        return source.read_text(encoding="utf-8")
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    data = source.read()
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data
