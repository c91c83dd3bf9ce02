"""Near-field line-of-sight MIMO stream counting for linear arrays.

Geometry and channel synthesis (arrays, channel), eigen and
closed-form spectral analysis (spectral), beam-grid decomposition
(beamspace), distance metrics (ranges), sweep-grid processing
(measurement), and a small CLI (cli). Fresnel integrals used by the
closed forms live in fresnel.
"""

from .arrays import (ArrayConfig, ConfigError, LinkGeometry, Scenario,
                     SPEED_OF_LIGHT, along_link_clearance, element_offsets,
                     element_positions, load_scenario, pairwise_distance_exact,
                     pairwise_distance_fresnel, pairwise_distances,
                     wavelength_for)
from .beamspace import (DftCodebook, GainProfile, edof2, explicit_codebook,
                        fft_spectrum, fresnel_args, gain_direct, gain_fresnel,
                        gain_profile, profile_to_csv, uniform_sine)
from .channel import (ChannelMatrix, SteeringVector, build_channel,
                      channel_to_csv, channel_to_record, ff_steering,
                      nf_response)
from .fresnel import FresnelPair, fresnel_cs
from .measurement import (CLIP_FLOOR, Cluster, ClusterSet, EdofReport,
                          PeakSet, RssiFormatError, RssiMatrix,
                          SWEEP_ANGLES_DEG, cluster_peaks, estimate_edof,
                          extract_peaks, load_rssi, normalize_clip,
                          quantize_phases, rssi_csv_text, save_rssi,
                          synth_rssi)
from .ranges import (RangeMetricsReport, beamwidth_and_crossrange, edof1,
                     edof2_theory, emrd, metrics_report, msmd, msmd_halfwave,
                     rayleigh_and_focus_limit, rescaled_distance)
from .spectral import (CapacityParams, EigenSpectrum, column_inner_product,
                       column_orthogonality_range, eigen_spectrum,
                       equal_eigen_capacity, high_snr_capacity, spectral_edof)

__version__ = "0.1.0"

__all__ = [
    "ArrayConfig", "CLIP_FLOOR", "CapacityParams", "ChannelMatrix", "Cluster",
    "ClusterSet", "ConfigError", "DftCodebook", "EdofReport", "EigenSpectrum",
    "FresnelPair", "GainProfile", "LinkGeometry", "PeakSet",
    "RangeMetricsReport", "RssiFormatError", "RssiMatrix", "SPEED_OF_LIGHT",
    "SWEEP_ANGLES_DEG", "Scenario",
    "SteeringVector", "along_link_clearance", "beamwidth_and_crossrange",
    "build_channel", "channel_to_csv", "channel_to_record", "cluster_peaks",
    "column_inner_product", "column_orthogonality_range", "edof1", "edof2",
    "edof2_theory", "eigen_spectrum", "element_offsets", "element_positions",
    "emrd", "equal_eigen_capacity", "estimate_edof", "explicit_codebook",
    "extract_peaks", "ff_steering", "fft_spectrum", "fresnel_args",
    "fresnel_cs", "gain_direct", "gain_fresnel", "gain_profile",
    "high_snr_capacity", "load_rssi", "load_scenario", "metrics_report",
    "msmd", "msmd_halfwave", "nf_response", "normalize_clip",
    "pairwise_distance_exact", "pairwise_distance_fresnel",
    "pairwise_distances", "profile_to_csv", "quantize_phases",
    "rayleigh_and_focus_limit", "rescaled_distance", "rssi_csv_text",
    "save_rssi", "spectral_edof", "synth_rssi", "uniform_sine",
    "wavelength_for",
]
