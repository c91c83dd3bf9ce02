"""Line-of-sight channel matrices and steering vectors for linear arrays.

The channel entry for a transmit/receive element pair carries the
propagation phase of the element-to-element distance, referenced to the
link range so the center-to-center path contributes zero phase, and an
amplitude that is either unit modulus or the free-space pathloss root.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from .arrays import along_link_clearance, element_offsets, pairwise_distances

PHASE_MODELS = ("exact", "fresnel")
AMPLITUDE_MODELS = ("unit_modulus", "free_space")


@dataclass(frozen=True)
class ChannelMatrix:
    """Receive-by-transmit channel with its generating conventions."""

    entries: np.ndarray
    phase_model: str
    amplitude_model: str
    carrier_wavelength: float

    @property
    def num_rx(self):
        return self.entries.shape[0]

    @property
    def num_tx(self):
        return self.entries.shape[1]


@dataclass(frozen=True)
class SteeringVector:
    """Array response coefficients for one focus point or direction.

    kind is "near_field" (finite focus range) or "far_field" (direction
    only, range_m is None). spacing and wavelength are recorded so that
    downstream transforms can reconstruct the geometry.
    """

    coefficients: np.ndarray
    kind: str
    angle: float
    range_m: float | None
    spacing: float
    wavelength: float
    normalized: bool = True


def build_channel(geom, tx, rx, wavelength, phase_model="exact",
                  amplitude_model="unit_modulus"):
    """Assemble the line-of-sight channel for a placed array pair.

    Parameters
    ----------
    geom : LinkGeometry
    tx, rx : ArrayConfig
    wavelength : float
        Carrier wavelength in meters.
    phase_model : {"exact", "fresnel"}
        Distance model feeding the propagation phase.
    amplitude_model : {"unit_modulus", "free_space"}
        Entry magnitudes: all ones, or wavelength/(4 pi distance).

    Returns
    -------
    ChannelMatrix
        entries[n, m] = amplitude * exp(-2j pi (d_mn - r) / wavelength).

    Raises
    ------
    ValueError
        If the arrays interpenetrate along the link axis, or a model
        name is unknown.
    """
    if phase_model not in PHASE_MODELS:
        raise ValueError(f"unknown phase model: {phase_model!r}")
    if amplitude_model not in AMPLITUDE_MODELS:
        raise ValueError(f"unknown amplitude model: {amplitude_model!r}")
    if not wavelength > 0:
        raise ValueError("wavelength must be positive")
    if along_link_clearance(geom, tx, rx) <= 0:
        raise ValueError(
            "arrays interpenetrate along the link axis; "
            "increase range_m or reduce the tilts"
        )
    dist = pairwise_distances(geom, tx, rx, phase_model)
    phase = np.exp(-2j * np.pi / wavelength * (dist - geom.range_m))
    if amplitude_model == "free_space":
        exact = dist if phase_model == "exact" else pairwise_distances(geom, tx, rx, "exact")
        amp = wavelength / (4 * np.pi * exact)
    else:
        amp = 1.0
    return ChannelMatrix(amp * phase, phase_model, amplitude_model, float(wavelength))


def nf_response(cfg, wavelength, angle, range_m):
    """Quadratic-phase array response focused at (angle, range_m).

    Element at offset o gets phase -(2 pi / wavelength) *
    (o sin(angle) - o^2 cos^2(angle) / (2 range_m)); coefficients are
    normalized to unit vector norm.
    """
    if abs(angle) > np.pi / 2:
        raise ValueError("focus angle must satisfy |angle| <= pi/2")
    if not range_m > 0 or not np.isfinite(range_m):
        raise ValueError("focus range must be positive and finite")
    offs = element_offsets(cfg)
    sin_a, cos_a = np.sin(angle), np.cos(angle)
    path = offs * sin_a - (offs * cos_a) ** 2 / (2 * range_m)
    coeff = np.exp(-2j * np.pi / wavelength * path) / np.sqrt(cfg.num_elements)
    return SteeringVector(coeff, "near_field", float(angle), float(range_m),
                          cfg.spacing, float(wavelength))


def ff_steering(cfg, wavelength, angle):
    """Linear-phase (planar wavefront) steering vector toward angle."""
    if abs(angle) > np.pi / 2:
        raise ValueError("steering angle must satisfy |angle| <= pi/2")
    offs = element_offsets(cfg)
    coeff = np.exp(-2j * np.pi / wavelength * offs * np.sin(angle))
    coeff = coeff / np.sqrt(cfg.num_elements)
    return SteeringVector(coeff, "far_field", float(angle), None,
                          cfg.spacing, float(wavelength))


def _format_float(x):
    return repr(float(x))


def channel_to_csv(channel, path_prefix):
    """Write the channel as <prefix>_real.csv and <prefix>_imag.csv.

    Rows follow the receive index; values use shortest round-trip
    formatting. Returns the two file paths.
    """
    paths = (f"{path_prefix}_real.csv", f"{path_prefix}_imag.csv")
    for path, part in zip(paths, (channel.entries.real, channel.entries.imag)):
        lines = [",".join(_format_float(v) for v in row) for row in part]
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    return paths


def channel_to_record(channel) -> dict[str, Any]:
    """JSON-ready dict with shape metadata and split real/imag parts."""
    return {
        "shape": [channel.num_rx, channel.num_tx],
        "phase_model": channel.phase_model,
        "amplitude_model": channel.amplitude_model,
        "carrier_wavelength_m": channel.carrier_wavelength,
        "real": channel.entries.real.tolist(),
        "imag": channel.entries.imag.tolist(),
    }
