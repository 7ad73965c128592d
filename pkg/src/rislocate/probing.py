"""Four-sector probing codebook and per-sector power measurements.

The 0-90 degree sweep is cut into equal sectors, one steered beam per
sector center. A user at angle theta reports one received power per
beam; that vector is the feature input of every regressor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import RisConfig
from .errors import DomainError
from .physics import PhaseProfile, received_power_dbm, steering_phase_profile

DEFAULT_SPAN = (0.0, 90.0)


@dataclass(frozen=True, eq=False)
class SectorCodebook:
    """Contiguous angular sectors plus one steering profile per sector.

    ``sectors`` is an ordered list of (lower_deg, upper_deg, center_deg);
    intervals are half-open except the last, which closes the span.
    """

    sectors: list[tuple[float, float, float]]
    profiles: list[PhaseProfile]

    @property
    def n_sectors(self) -> int:
        return len(self.sectors)

    @property
    def steer_angles_deg(self) -> list[float]:
        return [center for (_, _, center) in self.sectors]

    def sector_of(self, theta_deg: float) -> int:
        """Index of the sector containing theta (last sector is closed)."""
        lo = self.sectors[0][0]
        hi = self.sectors[-1][1]
        if not lo <= theta_deg <= hi:
            raise DomainError(f"angle {theta_deg} outside span [{lo}, {hi}]")
        for i, (low, high, _) in enumerate(self.sectors):
            if theta_deg < high:
                return i
        return self.n_sectors - 1


def build_sector_codebook(
    cfg: RisConfig,
    n_sectors: int = 4,
    span: tuple[float, float] = DEFAULT_SPAN,
) -> SectorCodebook:
    """Partition ``span`` into equal sectors and steer one beam per center.

    Beams are steered in the receiver azimuth plane (phi_r from the
    config) so their pattern peaks land on the sector centers.
    """
    if n_sectors < 1:
        raise DomainError("n_sectors must be >= 1")
    lo, hi = span
    if not lo < hi:
        raise DomainError("span must be increasing")
    width = (hi - lo) / n_sectors
    sectors = []
    profiles = []
    for i in range(n_sectors):
        lower = lo + i * width
        upper = lo + (i + 1) * width
        center = (lower + upper) / 2.0
        sectors.append((lower, upper, center))
        profiles.append(steering_phase_profile(cfg, center, cfg.phi_r_deg))
    return SectorCodebook(sectors=sectors, profiles=profiles)


def probe_features(
    cfg: RisConfig,
    codebook: SectorCodebook,
    theta_user_deg: float,
    noise_sigma_db: float = 0.0,
    rng_seed: int | None = None,
) -> np.ndarray:
    """Received power per codebook beam at the user angle, in dBm.

    Gaussian measurement noise (standard deviation ``noise_sigma_db``)
    is added in the dB domain; sigma 0 bypasses the random source
    entirely, and a fixed seed makes the draw reproducible.
    """
    if not 0.0 <= theta_user_deg <= 90.0:
        raise DomainError(f"user angle out of [0,90]: got {theta_user_deg}")
    if noise_sigma_db < 0:
        raise DomainError("noise_sigma_db must be >= 0")
    powers = np.array(
        [
            received_power_dbm(cfg, profile, theta_user_deg)
            for profile in codebook.profiles
        ]
    )
    if noise_sigma_db > 0:
        rng = np.random.default_rng(rng_seed)
        powers = powers + rng.normal(0.0, noise_sigma_db, size=powers.shape)
    return powers
