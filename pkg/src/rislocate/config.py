"""Physical configuration of the reflective-surface link.

Defaults describe the reference 27 GHz setup: a 20x20 surface with
4.6 mm element pitch, 10 dBm transmit power, 15 dBi antennas on both
ends, reflection amplitude 0.7 and 2.3 m on each hop.
"""

from __future__ import annotations

import dataclasses
import enum
import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError


class PropagationMode(enum.Enum):
    """Wavefront model used when summing element contributions."""

    PLANE_WAVE = "PlaneWave"
    SPHERICAL_WAVE = "SphericalWave"


@dataclass(frozen=True)
class RisConfig:
    """All physical parameters of the simulated link.

    Angles are degrees, distances meters, powers dBm, gains dBi. The
    transmit direction (theta_t, phi_t) defaults to broadside, and the
    receiver azimuth phi_r to 180 degrees, i.e. the reflection
    half-space; the receiver polar angle is swept externally.
    """

    m_rows: int = 20
    n_cols: int = 20
    d_x: float = 4.6e-3
    d_y: float = 4.6e-3
    freq_hz: float = 27e9
    p_t_dbm: float = 10.0
    g_t_dbi: float = 15.0
    g_r_dbi: float = 15.0
    gamma_amp: float = 0.7
    d1_m: float = 2.3
    d2_m: float = 2.3
    theta_t_deg: float = 0.0
    phi_t_deg: float = 0.0
    phi_r_deg: float = 180.0
    propagation_mode: PropagationMode = PropagationMode.PLANE_WAVE

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        if self.m_rows < 1 or self.n_cols < 1:
            raise ConfigError("m_rows and n_cols must be >= 1")
        if self.d_x <= 0 or self.d_y <= 0:
            raise ConfigError("element spacings d_x, d_y must be > 0")
        if self.freq_hz <= 0:
            raise ConfigError("freq_hz must be > 0")
        if self.d1_m <= 0 or self.d2_m <= 0:
            raise ConfigError("distances d1_m, d2_m must be > 0")
        if not 0.0 <= self.gamma_amp <= 1.0:
            raise ConfigError("gamma_amp must lie in [0, 1]")
        if not isinstance(self.propagation_mode, PropagationMode):
            raise ConfigError("propagation_mode must be a PropagationMode")

    def replace(self, **changes) -> "RisConfig":
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["propagation_mode"] = self.propagation_mode.value
        return d

    @classmethod
    def from_dict(cls, data: dict) -> "RisConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config key(s): {', '.join(sorted(unknown))}")
        kwargs = dict(data)
        if "propagation_mode" in kwargs:
            raw = kwargs["propagation_mode"]
            try:
                kwargs["propagation_mode"] = PropagationMode(raw)
            except ValueError:
                valid = ", ".join(m.value for m in PropagationMode)
                raise ConfigError(
                    f"propagation_mode must be one of: {valid} (got {raw!r})"
                ) from None
        for key in ("m_rows", "n_cols"):
            if key in kwargs:
                value = kwargs[key]
                if value != int(value):
                    raise ConfigError(f"{key} must be an integer (got {value!r})")
                kwargs[key] = int(value)
        try:
            return cls(**kwargs)
        except TypeError as exc:
            raise ConfigError(str(exc)) from None


def load_config(path: str | Path) -> RisConfig:
    """Read a JSON config file; missing keys fall back to defaults."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: config must be a JSON object")
    return RisConfig.from_dict(data)


def save_config(cfg: RisConfig, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(cfg.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
