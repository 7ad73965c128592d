"""Labeled power datasets: generation over the angle sweep, reproducible
splitting, and CSV persistence with a JSON metadata sidecar.

CSV layout for a 4-sector codebook:

    p_s0_dbm,p_s1_dbm,p_s2_dbm,p_s3_dbm,theta_deg

UTF-8, newline line endings, 6 decimal places, no quoting.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .config import RisConfig
from .errors import CsvParseError, DomainError
from .physics import grid_angles
from .probing import SectorCodebook, probe_features
from .seeds import derive_seed


@dataclass(frozen=True, eq=False)
class Sample:
    """One labeled observation: per-sector powers plus the true angle."""

    features: np.ndarray
    theta_deg: float


@dataclass(eq=False)
class Dataset:
    """Ordered samples stored as arrays, plus generation metadata."""

    features: np.ndarray  # shape (n_samples, n_sectors), dBm
    theta_deg: np.ndarray  # shape (n_samples,), degrees
    meta: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.theta_deg)

    def __getitem__(self, i: int) -> Sample:
        return Sample(features=self.features[i], theta_deg=float(self.theta_deg[i]))

    @property
    def n_sectors(self) -> int:
        return self.features.shape[1]


def generate_dataset(
    cfg: RisConfig,
    codebook: SectorCodebook,
    step_deg: float = 0.5,
    repeats_per_angle: int = 5,
    noise_sigma_db: float = 1.0,
    seed: int = 42,
) -> Dataset:
    """Probe every grid angle in [0, 90], ``repeats_per_angle`` times each.

    Each sample's noise seed is derived from (seed, angle index, repeat
    index), so generation is deterministic and order-independent.
    """
    if repeats_per_angle < 1:
        raise DomainError("repeats_per_angle must be >= 1")
    angles = grid_angles(0.0, 90.0, step_deg)
    rows = []
    labels = []
    for ai, angle in enumerate(angles):
        for rep in range(repeats_per_angle):
            rows.append(
                probe_features(
                    cfg,
                    codebook,
                    float(angle),
                    noise_sigma_db=noise_sigma_db,
                    rng_seed=derive_seed(seed, "sample", ai, rep),
                )
            )
            labels.append(float(angle))
    meta = {
        "step_deg": step_deg,
        "repeats_per_angle": repeats_per_angle,
        "noise_sigma_db": noise_sigma_db,
        "seed": seed,
        "codebook_steer_deg": codebook.steer_angles_deg,
    }
    return Dataset(features=np.array(rows), theta_deg=np.array(labels), meta=meta)


def split_dataset(
    ds: Dataset, test_fraction: float = 0.2, seed: int = 42
) -> tuple[Dataset, Dataset]:
    """Seeded shuffle followed by a train/test partition.

    The test side gets round(n * fraction) samples, at least one on
    each side; together the halves are exactly the input multiset.
    """
    if not 0.0 < test_fraction < 1.0:
        raise DomainError("test_fraction must lie strictly between 0 and 1")
    n = len(ds)
    if n < 2:
        raise DomainError("need at least 2 samples to split")
    n_test = int(math.floor(n * test_fraction + 0.5))
    n_test = min(max(n_test, 1), n - 1)
    perm = np.random.default_rng(seed).permutation(n)
    test_idx, train_idx = perm[:n_test], perm[n_test:]

    def _take(idx: np.ndarray, role: str) -> Dataset:
        meta = dict(ds.meta)
        meta["split"] = {"test_fraction": test_fraction, "seed": seed, "role": role}
        return Dataset(
            features=ds.features[idx].copy(),
            theta_deg=ds.theta_deg[idx].copy(),
            meta=meta,
        )

    return _take(train_idx, "train"), _take(test_idx, "test")


def _header(n_sectors: int) -> str:
    return ",".join([f"p_s{i}_dbm" for i in range(n_sectors)] + ["theta_deg"])


def _meta_path(path: Path) -> Path:
    return path.with_suffix(".meta.json")


def save_csv(ds: Dataset, path: str | Path) -> None:
    """Write the dataset CSV and its `<name>.meta.json` sidecar."""
    path = Path(path)
    if ds.features.ndim != 2:
        raise DomainError("dataset features must be a 2-D array (n_samples, n_sectors)")
    lines = [_header(ds.features.shape[1])]
    for i in range(len(ds)):
        cells = [f"{v:.6f}" for v in ds.features[i]] + [f"{ds.theta_deg[i]:.6f}"]
        lines.append(",".join(cells))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    _meta_path(path).write_text(
        json.dumps(ds.meta, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def load_csv(path: str | Path, expected_sectors: int = 4) -> Dataset:
    """Load a dataset CSV; the header must match the expected width."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    lines = [ln for ln in text.split("\n") if ln != ""]
    if not lines:
        raise CsvParseError(f"{path}: empty file")
    expected_header = _header(expected_sectors)
    if lines[0] != expected_header:
        raise CsvParseError(
            f"{path}: line 1: expected header {expected_header!r}, got {lines[0]!r}"
        )
    if len(lines) == 1:
        raise CsvParseError(f"{path}: no samples")
    features = []
    labels = []
    width = expected_sectors + 1
    for lineno, line in enumerate(lines[1:], start=2):
        cells = line.split(",")
        if len(cells) != width:
            raise CsvParseError(
                f"{path}: line {lineno}: expected {width} columns, got {len(cells)}"
            )
        try:
            values = [float(c) for c in cells]
        except ValueError:
            raise CsvParseError(f"{path}: line {lineno}: non-numeric cell") from None
        features.append(values[:-1])
        labels.append(values[-1])
    meta_file = _meta_path(path)
    meta = (
        json.loads(meta_file.read_text(encoding="utf-8"))
        if meta_file.exists()
        else {"source": str(path)}
    )
    return Dataset(features=np.array(features), theta_deg=np.array(labels), meta=meta)
