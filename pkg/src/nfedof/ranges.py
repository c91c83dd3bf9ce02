"""Closed-form distance and stream-count metrics for a two-array link.

Everything here is scalar algebra in the apertures, wavelength, tilts,
and range: beamwidth and its footprint, the continuous stream estimate,
the classical far-field boundary and focusing limit, and the distances
at which the discrete stream count falls to one (EMRD) or saturates
(MSMD). Functions take apertures in meters directly; metrics_report
bridges from array configurations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def _cosines(orientations):
    # check the angles, not the cosines: cos(pi/2) rounds to ~6e-17 > 0
    if any(abs(t) >= math.pi / 2 for t in orientations):
        raise ValueError("orientations must stay off endfire (|tilt| < pi/2)")
    return math.cos(orientations[0]), math.cos(orientations[1])


def _check_positive(**kwargs):
    for name, value in kwargs.items():
        if not value > 0 or not math.isfinite(value):
            raise ValueError(f"{name} must be positive and finite")


def beamwidth_and_crossrange(aperture_tx, wavelength, range_m, tilt=0.0):
    """Transmit beamwidth in radians and its footprint at range_m.

    beamwidth = wavelength / (aperture * cos(tilt)); the footprint is
    range_m times that. A tilted array presents a shorter projected
    aperture, so the beam widens.
    """
    _check_positive(aperture_tx=aperture_tx, wavelength=wavelength,
                    range_m=range_m)
    if abs(tilt) >= math.pi / 2:
        raise ValueError("orientations must stay off endfire (|tilt| < pi/2)")
    beamwidth = wavelength / (aperture_tx * math.cos(tilt))
    return beamwidth, range_m * beamwidth


def edof1(aperture_tx, aperture_rx, wavelength, range_m, orientations=(0.0, 0.0)):
    """Continuous stream estimate: projected receive aperture over the
    transmit footprint.

    aperture_tx * aperture_rx * cos(tilt_tx) * cos(tilt_rx) /
    (wavelength * range_m). Not rounded; callers wanting an integer
    round half up.
    """
    _check_positive(aperture_tx=aperture_tx, aperture_rx=aperture_rx,
                    wavelength=wavelength, range_m=range_m)
    cos_t, cos_r = _cosines(orientations)
    return aperture_tx * aperture_rx * cos_t * cos_r / (wavelength * range_m)


def emrd(aperture_tx, aperture_rx, wavelength, orientations=(0.0, 0.0)):
    """Range at which the stream estimate falls to one.

    aperture_tx * aperture_rx * cos * cos / wavelength; equals
    edof1 * range_m for any range (same numerator).
    """
    _check_positive(aperture_tx=aperture_tx, aperture_rx=aperture_rx,
                    wavelength=wavelength)
    cos_t, cos_r = _cosines(orientations)
    return aperture_tx * aperture_rx * cos_t * cos_r / wavelength


def msmd(aperture_tx, aperture_rx, wavelength, v_max, orientations=(0.0, 0.0)):
    """Range at which the stream count saturates at v_max.

    emrd / v_max with v_max the larger element count of the two arrays.
    """
    if not (isinstance(v_max, int) and v_max >= 1):
        raise ValueError("v_max must be a positive integer")
    return emrd(aperture_tx, aperture_rx, wavelength, orientations) / v_max


def msmd_halfwave(aperture_rx, orientations=(0.0, 0.0)):
    """Saturation range when the larger array has half-wavelength spacing.

    With the transmit aperture equal to num_elements * wavelength / 2 the
    wavelength cancels, leaving aperture_rx / 2 * cos * cos.
    """
    _check_positive(aperture_rx=aperture_rx)
    cos_t, cos_r = _cosines(orientations)
    return aperture_rx / 2 * cos_t * cos_r


def rescaled_distance(aperture_tx, aperture_rx, wavelength, edof2_count,
                      orientations=(0.0, 0.0)):
    """Range normalized by the observed stream count: emrd / edof2_count.

    Equals emrd at a count of one and msmd when the count saturates.
    """
    if not (isinstance(edof2_count, int) and edof2_count >= 1):
        raise ValueError("edof2_count must be a positive integer")
    return emrd(aperture_tx, aperture_rx, wavelength, orientations) / edof2_count


def rayleigh_and_focus_limit(aperture_tx, wavelength, focus_angle=0.0):
    """Classical far-field boundary 2 D^2 / wavelength and the focusing
    limit beyond which a focused beam degenerates to a plain beam.

    The limit is the boundary scaled by cos(focus_angle)^2 / 7.
    """
    _check_positive(aperture_tx=aperture_tx, wavelength=wavelength)
    rayleigh = 2 * aperture_tx**2 / wavelength
    return rayleigh, rayleigh * math.cos(focus_angle) ** 2 / 7


def edof2_theory(aperture_tx, aperture_rx, wavelength, range_m, v_max,
                 orientations=(0.0, 0.0)):
    """Staircase stream count implied by the closed forms.

    floor(emrd / range_m) clamped to [1, v_max]: one beyond the EMRD,
    saturated inside the MSMD.
    """
    _check_positive(range_m=range_m)
    if not (isinstance(v_max, int) and v_max >= 1):
        raise ValueError("v_max must be a positive integer")
    ratio = emrd(aperture_tx, aperture_rx, wavelength, orientations) / range_m
    return max(1, min(v_max, int(math.floor(ratio))))


@dataclass(frozen=True)
class RangeMetricsReport:
    """All closed-form metrics of one link geometry, in SI units."""

    beamwidth_rad: float
    cross_range_m: float
    edof1: float
    rayleigh_m: float
    focus_limit_m: float
    emrd_m: float
    msmd_m: float
    msmd_halfwave_m: float
    rescaled_m: float
    v_max: int
    min_dims: int

    def as_dict(self):
        return {
            "beamwidth_rad": self.beamwidth_rad,
            "cross_range_m": self.cross_range_m,
            "edof1": self.edof1,
            "rayleigh_m": self.rayleigh_m,
            "focus_limit_m": self.focus_limit_m,
            "emrd_m": self.emrd_m,
            "msmd_m": self.msmd_m,
            "msmd_halfwave_m": self.msmd_halfwave_m,
            "rescaled_m": self.rescaled_m,
            "v_max": self.v_max,
            "min_dims": self.min_dims,
        }


def metrics_report(tx, rx, geom, wavelength, edof2_count=1):
    """Evaluate every metric for a configured link.

    Apertures come from the array configurations, tilts and range from
    the link geometry. v_max is the larger element count, as the
    saturation form demands; min_dims is the smaller one, the classical
    stream bound, reported alongside so the tension stays visible.
    """
    ors = (geom.tx_orientation, geom.rx_orientation)
    d_t, d_r = tx.aperture, rx.aperture
    beamwidth, cross = beamwidth_and_crossrange(
        d_t, wavelength, geom.range_m, geom.tx_orientation)
    v_max = max(tx.num_elements, rx.num_elements)
    rayleigh, focus = rayleigh_and_focus_limit(d_t, wavelength, geom.focus_angle)
    return RangeMetricsReport(
        beamwidth_rad=beamwidth,
        cross_range_m=cross,
        edof1=edof1(d_t, d_r, wavelength, geom.range_m, ors),
        rayleigh_m=rayleigh,
        focus_limit_m=focus,
        emrd_m=emrd(d_t, d_r, wavelength, ors),
        msmd_m=msmd(d_t, d_r, wavelength, v_max, ors),
        msmd_halfwave_m=msmd_halfwave(d_r, ors),
        rescaled_m=rescaled_distance(d_t, d_r, wavelength, edof2_count, ors),
        v_max=v_max,
        min_dims=min(tx.num_elements, rx.num_elements),
    )
