"""Input fingerprints echoed by command outputs."""

import hashlib
from pathlib import Path


def input_hash(data: bytes | str) -> str:
    """SHA-256 of raw input bytes, prefixed with the algorithm."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    return "sha256:" + hashlib.sha256(data).hexdigest()


def file_hash(path: Path) -> str:
    return input_hash(path.read_bytes())
