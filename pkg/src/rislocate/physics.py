"""Beam steering, array factor and link budget for the reflected path.

Conventions
-----------
Element (m, n) sits at (m_bar * d_x, n_bar * d_y, 0) with centered
indices m_bar = m - (M-1)/2, n_bar = n - (N-1)/2, so a broadside
steering profile is identically zero. The polar angle theta is measured
from the surface normal; a direction (theta, phi) has transverse
components u_x = sin(theta)cos(phi), u_y = sin(theta)sin(phi).

A profile steered at (theta_s, phi_s) applies

    phase[m, n] = wrap(-k (d_x m_bar u_sx + d_y n_bar u_sy) - psi_inc)

which cancels the outgoing path gradient exactly at the steer
direction, so all phasors align there and |AF| = gamma_amp * M * N.
psi_inc is the incident plane-wave gradient; it vanishes for the
default broadside transmitter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .config import PropagationMode, RisConfig
from .errors import ConfigError, DomainError, InputError

SPEED_OF_LIGHT = 299_792_458.0

#: dBm value reported for exactly zero linear power (avoids -inf).
POWER_FLOOR_DBM = -300.0

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, eq=False)
class PhaseProfile:
    """Per-element phase matrix realizing one steered beam.

    ``phases`` holds radians wrapped to [0, 2*pi), shape (m_rows, n_cols).
    """

    phases: np.ndarray
    steer_theta_deg: float
    steer_phi_deg: float


@dataclass(frozen=True, eq=False)
class PatternTrace:
    """Received power sampled over a strictly increasing angle grid."""

    angles_deg: np.ndarray
    power_dbm: np.ndarray
    label: str = ""

    def __len__(self) -> int:
        return len(self.angles_deg)


def wavelength(freq_hz: float) -> float:
    """Free-space wavelength in meters."""
    if freq_hz <= 0:
        raise ConfigError("freq_hz must be > 0")
    return SPEED_OF_LIGHT / freq_hz


def wrap_phase(phases: np.ndarray) -> np.ndarray:
    """Wrap angles to the canonical [0, 2*pi) interval."""
    wrapped = np.mod(phases, _TWO_PI)
    # np.mod can round up to the modulus itself for tiny negatives
    return np.where(wrapped >= _TWO_PI, 0.0, wrapped)


def _centered_offsets(cfg: RisConfig) -> tuple[np.ndarray, np.ndarray]:
    m_bar = np.arange(cfg.m_rows) - (cfg.m_rows - 1) / 2.0
    n_bar = np.arange(cfg.n_cols) - (cfg.n_cols - 1) / 2.0
    return m_bar, n_bar


def _direction_cosines(theta_deg: float, phi_deg: float) -> tuple[float, float]:
    theta = math.radians(theta_deg)
    phi = math.radians(phi_deg)
    return math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi)


def steering_phase_profile(
    cfg: RisConfig, theta_s_deg: float, phi_s_deg: float
) -> PhaseProfile:
    """Phase matrix that steers the reflected beam to (theta_s, phi_s).

    theta_s must lie in [0, 90] degrees. The incident-wave gradient for
    (theta_t, phi_t) is subtracted; with the default broadside
    transmitter it is identically zero.
    """
    if not 0.0 <= theta_s_deg <= 90.0:
        raise DomainError(f"steer out of [0,90]: got {theta_s_deg}")
    k = _TWO_PI / wavelength(cfg.freq_hz)
    m_bar, n_bar = _centered_offsets(cfg)
    u_sx, u_sy = _direction_cosines(theta_s_deg, phi_s_deg)
    u_tx, u_ty = _direction_cosines(cfg.theta_t_deg, cfg.phi_t_deg)
    x = cfg.d_x * m_bar[:, None]
    y = cfg.d_y * n_bar[None, :]
    psi_inc = k * (x * u_tx + y * u_ty)
    raw = -k * (x * u_sx + y * u_sy) - psi_inc
    return PhaseProfile(
        phases=wrap_phase(raw),
        steer_theta_deg=float(theta_s_deg),
        steer_phi_deg=float(phi_s_deg),
    )


def array_factor(
    cfg: RisConfig, profile: PhaseProfile, theta_r_deg: float, phi_r_deg: float
) -> complex:
    """Complex sum of element phasors toward (theta_r, phi_r).

    Plane-wave mode applies the linear far-field phase gradient;
    spherical mode uses exact per-element path lengths to the Tx and Rx
    points at distances d1 and d2 (recentered so the sum's global phase
    stays small; the magnitude is unaffected).
    """
    if profile.phases.shape != (cfg.m_rows, cfg.n_cols):
        raise InputError(
            f"profile shape {profile.phases.shape} does not match "
            f"config ({cfg.m_rows}, {cfg.n_cols})"
        )
    k = _TWO_PI / wavelength(cfg.freq_hz)
    m_bar, n_bar = _centered_offsets(cfg)
    x = cfg.d_x * m_bar[:, None]
    y = cfg.d_y * n_bar[None, :]

    if cfg.propagation_mode is PropagationMode.PLANE_WAVE:
        u_x, u_y = _direction_cosines(theta_r_deg, phi_r_deg)
        path_phase = k * (x * u_x + y * u_y)
    else:
        tx = _point_at(cfg.d1_m, cfg.theta_t_deg, cfg.phi_t_deg)
        rx = _point_at(cfg.d2_m, theta_r_deg, phi_r_deg)
        r_t = np.sqrt((x - tx[0]) ** 2 + (y - tx[1]) ** 2 + tx[2] ** 2)
        r_r = np.sqrt((x - rx[0]) ** 2 + (y - rx[1]) ** 2 + rx[2] ** 2)
        path_phase = -k * (r_t + r_r - cfg.d1_m - cfg.d2_m)

    total = np.sum(cfg.gamma_amp * np.exp(1j * (profile.phases + path_phase)))
    return complex(total)


def _point_at(dist: float, theta_deg: float, phi_deg: float) -> np.ndarray:
    theta = math.radians(theta_deg)
    phi = math.radians(phi_deg)
    return dist * np.array(
        [math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)]
    )


def received_power_dbm(
    cfg: RisConfig, profile: PhaseProfile, theta_r_deg: float
) -> float:
    """Received power on the cascaded Tx-surface-Rx path, in dBm.

    Far-field product link budget with unit element gain:

        P_r = P_t * G_t * G_r * d_x * d_y * lambda^2
              / (64 pi^3 d1^2 d2^2) * |AF|^2

    The receiver azimuth is taken from the config. Exactly zero linear
    power maps to the documented floor of -300 dBm.
    """
    if not 0.0 <= theta_r_deg <= 90.0:
        raise DomainError(f"theta_r out of [0,90]: got {theta_r_deg}")
    af = array_factor(cfg, profile, theta_r_deg, cfg.phi_r_deg)
    lam = wavelength(cfg.freq_hz)
    p_t_w = 10.0 ** (cfg.p_t_dbm / 10.0) / 1000.0
    g_t = 10.0 ** (cfg.g_t_dbi / 10.0)
    g_r = 10.0 ** (cfg.g_r_dbi / 10.0)
    budget = (
        g_t * g_r * cfg.d_x * cfg.d_y * lam**2
        / (64.0 * math.pi**3 * cfg.d1_m**2 * cfg.d2_m**2)
    )
    p_r_w = p_t_w * budget * abs(af) ** 2
    if p_r_w == 0.0:
        return POWER_FLOOR_DBM
    return 10.0 * math.log10(p_r_w) + 30.0


def grid_angles(start_deg: float, stop_deg: float, step_deg: float) -> np.ndarray:
    """Angle grid from start to stop inclusive, with the given spacing."""
    if step_deg <= 0:
        raise DomainError("step_deg must be > 0")
    if start_deg >= stop_deg:
        raise DomainError("start_deg must be < stop_deg")
    count = int(math.floor((stop_deg - start_deg) / step_deg + 1e-9)) + 1
    return start_deg + step_deg * np.arange(count)


def radiation_pattern(
    cfg: RisConfig,
    profile: PhaseProfile,
    start_deg: float = 0.0,
    stop_deg: float = 90.0,
    step_deg: float = 0.5,
) -> PatternTrace:
    """Sample received power over a polar-angle grid."""
    angles = grid_angles(start_deg, stop_deg, step_deg)
    powers = np.array(
        [received_power_dbm(cfg, profile, float(a)) for a in angles]
    )
    label = f"steer={profile.steer_theta_deg:g}deg"
    return PatternTrace(angles_deg=angles, power_dbm=powers, label=label)


def peak_angle(trace: PatternTrace) -> float:
    """Angle of the pattern maximum; ties resolve to the smallest angle."""
    if len(trace) == 0:
        raise DomainError("empty pattern trace")
    return float(trace.angles_deg[int(np.argmax(trace.power_dbm))])


def write_trace_csv(trace: PatternTrace, path: str | Path) -> None:
    """Export a trace as `theta_deg,pr_dbm` rows with 6 decimal places."""
    lines = ["theta_deg,pr_dbm"]
    for angle, power in zip(trace.angles_deg, trace.power_dbm):
        lines.append(f"{angle:.6f},{power:.6f}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
