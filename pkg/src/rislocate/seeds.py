"""Deterministic seed derivation.

Every random stage of the pipeline draws its seed from one root seed
plus a label path, so runs are reproducible across platforms and the
derivation can be recorded in run manifests.
"""

from __future__ import annotations

import hashlib


def derive_seed(base_seed: int, *labels: object) -> int:
    """Derive a 63-bit child seed from a root seed and a label path."""
    h = hashlib.sha256(str(int(base_seed)).encode("ascii"))
    for label in labels:
        h.update(b"/")
        h.update(str(label).encode("utf-8"))
    return int.from_bytes(h.digest()[:8], "big") >> 1
