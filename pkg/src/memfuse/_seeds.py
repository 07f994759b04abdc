"""Deterministic per-component seed derivation.

All randomness in the package flows from one user-supplied root seed. Each
component derives its own child seed from the root plus a sequence of string
or integer tokens, hashed with crc32 so results do not depend on scheduling
order or on Python's per-process hash randomization.
"""

from __future__ import annotations

import zlib

import numpy as np


def child_seed(root: int, *tokens: str | int) -> int:
    """Derive a stable 32-bit child seed from a root seed and token path."""
    h = zlib.crc32(str(int(root)).encode("utf-8"))
    for token in tokens:
        h = zlib.crc32(str(token).encode("utf-8"), h)
    return h & 0xFFFFFFFF


def child_rng(root: int, *tokens: str | int) -> np.random.Generator:
    """A numpy Generator seeded from `child_seed(root, *tokens)`."""
    return np.random.default_rng(child_seed(root, *tokens))
