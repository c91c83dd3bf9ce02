"""Uniform linear array geometry, link bookkeeping, and scenario loading.

Coordinate convention: each link is laid out in a 2-D plane whose second
axis runs from the transmit array center to the receive array center
(the link axis) and whose first axis is the cross-link direction. An
array's orientation is its broadside tilt against the link axis, in
radians; positive tilt moves positive-offset elements away from the far
end of the link. All angles are radians internally; degrees appear only
at the file/CLI boundary.
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass

import numpy as np

SPEED_OF_LIGHT = 299792458.0


class ConfigError(ValueError):
    """Raised when a scenario configuration file cannot be used."""


def wavelength_for(frequency_hz):
    """Free-space wavelength in meters for a carrier frequency in Hz."""
    if not frequency_hz > 0:
        raise ValueError("frequency must be positive")
    return SPEED_OF_LIGHT / frequency_hz


@dataclass(frozen=True)
class ArrayConfig:
    """A uniform linear array, optionally split into collinear subarrays.

    Parameters
    ----------
    num_elements : int
        Total element count across all subarrays.
    spacing : float
        Inter-element spacing in meters (within a subarray, if any).
    orientation : float
        Broadside tilt in radians against the link axis.
    subarray_layout : sequence of (size, center_offset_m), optional
        Collinear subarrays along the array axis. Sizes must sum to
        num_elements. Offsets are measured from the array center.
    """

    num_elements: int
    spacing: float
    orientation: float = 0.0
    subarray_layout: tuple[tuple[int, float], ...] | None = None

    def __post_init__(self):
        if self.num_elements < 1:
            raise ValueError("num_elements must be at least 1")
        if not self.spacing > 0 or not math.isfinite(self.spacing):
            raise ValueError("spacing must be positive and finite")
        if not math.isfinite(self.orientation):
            raise ValueError("orientation must be finite")
        if self.subarray_layout is not None:
            layout = tuple((int(s), float(o)) for s, o in self.subarray_layout)
            object.__setattr__(self, "subarray_layout", layout)
            if any(s < 1 for s, _ in layout):
                raise ValueError("subarray sizes must be at least 1")
            if sum(s for s, _ in layout) != self.num_elements:
                raise ValueError("subarray sizes must sum to num_elements")
            centers = [o for _, o in layout]
            if any(b <= a for a, b in zip(centers, centers[1:])):
                raise ValueError("subarray centers must be strictly increasing")

    @property
    def aperture(self):
        """Aperture in meters: element span plus one spacing.

        For a plain array this is num_elements * spacing; for subarray
        layouts it covers the full span including gaps.
        """
        offs = element_offsets(self)
        return float(offs.max() - offs.min()) + self.spacing


def element_offsets(cfg):
    """1-D element coordinates along the array axis, centered on the array.

    Element k of a plain array sits at (k - (num_elements - 1)/2) * spacing;
    subarray layouts add their center offsets. Units: meters.
    """
    if cfg.subarray_layout is None:
        idx = np.arange(cfg.num_elements) - (cfg.num_elements - 1) / 2
        return idx * cfg.spacing
    parts = []
    for size, center in cfg.subarray_layout:
        idx = np.arange(size) - (size - 1) / 2
        parts.append(center + idx * cfg.spacing)
    return np.concatenate(parts)


def element_positions(cfg):
    """2-D element coordinates (cross-link, along-link), in meters.

    The array axis is rotated by the orientation angle: an element at
    offset o lands at (o cos(phi), -o sin(phi)).
    """
    offs = element_offsets(cfg)
    phi = cfg.orientation
    return np.column_stack((offs * np.cos(phi), -offs * np.sin(phi)))


@dataclass(frozen=True)
class LinkGeometry:
    """Placement of a transmit/receive array pair.

    range_m separates the array centers along the link axis; the two
    orientations are broadside tilts against that axis and must stay off
    endfire. focus_angle is the transmit focus direction used by
    beam-domain sweeps.
    """

    range_m: float
    tx_orientation: float = 0.0
    rx_orientation: float = 0.0
    focus_angle: float = 0.0

    def __post_init__(self):
        if not self.range_m > 0 or not math.isfinite(self.range_m):
            raise ValueError("range_m must be positive and finite")
        for name in ("tx_orientation", "rx_orientation"):
            if abs(getattr(self, name)) >= np.pi / 2:
                raise ValueError(f"{name} must satisfy |angle| < pi/2")
        if abs(self.focus_angle) > np.pi / 2:
            raise ValueError("focus_angle must satisfy |angle| <= pi/2")


def pairwise_distances(geom, tx, rx, model="exact"):
    """Distances between every (receive, transmit) element pair.

    Parameters
    ----------
    geom : LinkGeometry
        Supplies the range and the authoritative orientations.
    tx, rx : ArrayConfig
        Element layouts. Orientations are read from geom, not the configs.
    model : {"exact", "fresnel"}
        "exact" evaluates the 2-D Euclidean distance; "fresnel" keeps the
        quadratic expansion of the cross-link term around the range.

    Returns
    -------
    ndarray of shape (rx.num_elements, tx.num_elements).
    """
    r = geom.range_m
    ot = element_offsets(tx)[None, :]
    orx = element_offsets(rx)[:, None]
    sin_t, cos_t = np.sin(geom.tx_orientation), np.cos(geom.tx_orientation)
    sin_r, cos_r = np.sin(geom.rx_orientation), np.cos(geom.rx_orientation)
    along = r + ot * sin_t - orx * sin_r
    cross = ot * cos_t - orx * cos_r
    if model == "exact":
        return np.sqrt(along**2 + cross**2)
    if model == "fresnel":
        return along + cross**2 / (2 * r)
    raise ValueError(f"unknown distance model: {model!r}")


def pairwise_distance_exact(geom, tx, rx, m, n):
    """Euclidean distance between transmit element m and receive element n."""
    return float(pairwise_distances(geom, tx, rx, "exact")[n, m])


def pairwise_distance_fresnel(geom, tx, rx, m, n):
    """Quadratic-expansion distance between transmit element m and receive element n."""
    return float(pairwise_distances(geom, tx, rx, "fresnel")[n, m])


def along_link_clearance(geom, tx, rx):
    """Gap between the arrays' along-link extents, in meters.

    Positive means the receive array lies strictly beyond the transmit
    array along the link axis; zero or negative means the arrays
    interpenetrate.
    """
    ty = -element_offsets(tx) * np.sin(geom.tx_orientation)
    ry = geom.range_m - element_offsets(rx) * np.sin(geom.rx_orientation)
    return float(ry.min() - ty.max())


@dataclass(frozen=True)
class Scenario:
    """A fully specified link: both arrays, placement, and carrier."""

    tx: ArrayConfig
    rx: ArrayConfig
    link: LinkGeometry
    wavelength: float


def _parse_subarrays(text):
    # format: "size@center_offset_m" entries, comma separated
    layout = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            size, offset = part.split("@")
            layout.append((int(size), float(offset)))
        except ValueError as exc:
            raise ConfigError(f"bad subarray entry {part!r}: expected size@offset_m") from exc
    if not layout:
        raise ConfigError("subarrays given but empty")
    return tuple(layout)


def _array_from_section(section, name):
    try:
        num = section.getint("elements")
        spacing = section.getfloat("spacing_m")
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"[{name}] needs integer 'elements' and float 'spacing_m'") from exc
    if num is None or spacing is None:
        raise ConfigError(f"[{name}] needs 'elements' and 'spacing_m'")
    orientation = math.radians(section.getfloat("orientation_deg", 0.0))
    layout = None
    if section.get("subarrays"):
        layout = _parse_subarrays(section["subarrays"])
    try:
        return ArrayConfig(num, spacing, orientation, layout)
    except ValueError as exc:
        raise ConfigError(f"[{name}]: {exc}") from exc


def load_scenario(path):
    """Read a Scenario from an INI-style key-value file.

    Sections and keys:
      [tx] / [rx]: elements, spacing_m, orientation_deg (default 0),
                   subarrays (optional, "size@offset_m, size@offset_m, ...")
      [link]:      range_m, frequency_hz, focus_angle_deg (default 0)

    [rx] may be omitted; it defaults to a 4-element array at the transmit
    spacing. Raises ConfigError on missing or malformed entries.
    """
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        with open(path, "r", encoding="utf-8") as fh:
            parser.read_file(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    except configparser.Error as exc:
        raise ConfigError(f"malformed config file {path}: {exc}") from exc

    if "tx" not in parser:
        raise ConfigError("config file needs a [tx] section")
    if "link" not in parser:
        raise ConfigError("config file needs a [link] section")
    tx = _array_from_section(parser["tx"], "tx")
    if "rx" in parser:
        rx = _array_from_section(parser["rx"], "rx")
    else:
        rx = ArrayConfig(4, tx.spacing)

    link_sec = parser["link"]
    try:
        range_m = link_sec.getfloat("range_m")
        frequency = link_sec.getfloat("frequency_hz")
    except ValueError as exc:
        raise ConfigError("[link] needs float 'range_m' and 'frequency_hz'") from exc
    if range_m is None or frequency is None:
        raise ConfigError("[link] needs 'range_m' and 'frequency_hz'")
    focus = math.radians(link_sec.getfloat("focus_angle_deg", 0.0))
    try:
        link = LinkGeometry(range_m, tx.orientation, rx.orientation, focus)
        lam = wavelength_for(frequency)
    except ValueError as exc:
        raise ConfigError(f"[link]: {exc}") from exc
    return Scenario(tx, rx, link, lam)
