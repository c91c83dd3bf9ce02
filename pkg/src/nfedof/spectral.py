"""Eigenvalue spectra, capacity under the equal-eigenvalue model, and
column correlation of the quadratic-phase channel.

The capacity model assumes the Gramian eigenvalues are flat up to the
effective count and zero beyond, which turns the water-filling sum into
a single closed form driven by the composite SNR.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np


@dataclass(frozen=True)
class EigenSpectrum:
    """Squared singular values of a channel, in descending order."""

    eigenvalues: np.ndarray
    trace: float
    source_dims: tuple[int, int]  # (num_tx, num_rx)


@dataclass(frozen=True)
class CapacityParams:
    """Composite SNR and (optionally) the budget it came from.

    composite_snr is total_power * num_tx * num_rx / noise_power when
    constructed through from_budget.
    """

    composite_snr: float
    total_power: float | None = None
    noise_power: float | None = None

    def __post_init__(self):
        if not self.composite_snr > 0:
            raise ValueError("composite_snr must be positive")

    @classmethod
    def from_budget(cls, total_power, noise_power, num_tx, num_rx):
        if not total_power > 0 or not noise_power > 0:
            raise ValueError("powers must be positive")
        snr = total_power * num_tx * num_rx / noise_power
        return cls(snr, total_power, noise_power)


def eigen_spectrum(channel):
    """Eigenvalues of the channel Gramian via the SVD.

    Returns an EigenSpectrum with min(num_tx, num_rx) eigenvalues in
    descending order; trace is the squared Frobenius norm of the entries.
    """
    h = channel.entries
    sv = np.linalg.svd(h, compute_uv=False)
    eig = np.sort(sv**2)[::-1]
    trace = float(np.sum(np.abs(h) ** 2))
    return EigenSpectrum(eig, trace, (h.shape[1], h.shape[0]))


def spectral_edof(spectrum, threshold_fraction=0.5):
    """Count of eigenvalues at or above a fraction of the largest one."""
    if not 0 < threshold_fraction <= 1:
        raise ValueError("threshold_fraction must lie in (0, 1]")
    eig = spectrum.eigenvalues
    if eig.size == 0 or eig[0] <= 0:
        return 0
    return int(np.sum(eig >= threshold_fraction * eig[0]))


def _snr_of(params):
    if isinstance(params, CapacityParams):
        return params.composite_snr
    snr = float(params)
    if not snr > 0:
        raise ValueError("composite SNR must be positive")
    return snr


def equal_eigen_capacity(edof, params):
    """Capacity in bits/s/Hz with edof equal eigenchannels.

    Uniform power over edof streams, each with gain num_tx*num_rx/edof,
    collapses the per-stream sum to
    edof * log2(1 + composite_snr / edof^2).
    `params` is a CapacityParams or a bare composite SNR.
    """
    if edof < 1:
        raise ValueError("edof must be at least 1")
    rho = _snr_of(params)
    return edof * math.log2(1 + rho / edof**2)


def high_snr_capacity(edof, params):
    """High-SNR slope approximation edof * log2(composite_snr / edof^2)."""
    if edof < 1:
        raise ValueError("edof must be at least 1")
    rho = _snr_of(params)
    if rho <= edof**2:
        raise ValueError("high-SNR form needs composite_snr > edof^2")
    return edof * math.log2(rho / edof**2)


def column_inner_product(geom, tx, rx, k, l, wavelength):
    """Correlation between transmit columns k and l of the quadratic-phase
    unit-modulus channel.

    Computed as the literal sum over receive elements of
    exp(2j pi (d_kn - d_ln) / wavelength) with the quadratic-expansion
    distances and 0-based element indices. Its magnitude follows the
    Dirichlet ratio |sin(pi N u) / sin(pi u)| with
    u = spacing_t * spacing_r * cos(phi_t) cos(phi_r) (k - l) /
    (wavelength * range), vanishing when u hits a nonzero multiple of 1/N.
    """
    num_tx, num_rx = tx.num_elements, rx.num_elements
    if not (0 <= k < num_tx and 0 <= l < num_tx):
        raise ValueError("column indices must lie in [0, num_tx)")
    r = geom.range_m
    sin_t, cos_t = np.sin(geom.tx_orientation), np.cos(geom.tx_orientation)
    sin_r, cos_r = np.sin(geom.rx_orientation), np.cos(geom.rx_orientation)
    n = np.arange(num_rx)

    def fresnel_dist(m):
        along = r + m * tx.spacing * sin_t - n * rx.spacing * sin_r
        cross = m * tx.spacing * cos_t - n * rx.spacing * cos_r
        return along + cross**2 / (2 * r)

    diff = fresnel_dist(k) - fresnel_dist(l)
    return complex(np.sum(np.exp(2j * np.pi / wavelength * diff)))


def column_orthogonality_range(tx, rx, wavelength, orientations=(0.0, 0.0)):
    """Range at which adjacent transmit columns decorrelate completely:
    num_rx * spacing_t * spacing_r * cos(phi_t) cos(phi_r) / wavelength."""
    phi_t, phi_r = orientations
    return (rx.num_elements * tx.spacing * rx.spacing
            * np.cos(phi_t) * np.cos(phi_r) / wavelength)


def spectral_record(spectrum, edof, capacity_bits) -> dict[str, Any]:
    """JSON-ready record of a spectrum with its derived quantities."""
    return {
        "eigenvalues": [float(v) for v in spectrum.eigenvalues],
        "edof": int(edof),
        "capacity_bits": float(capacity_bits),
    }
