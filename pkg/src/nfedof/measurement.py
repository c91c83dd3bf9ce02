"""Beam-sweep RSSI processing: synthesis, file IO, and stream counting.

The pipeline mirrors a two-sided beam sweep: every transmit codeword is
paired with every receive codeword, giving a dB power grid. Counting
effective streams from such a grid runs normalize -> clip -> peak
extraction -> cluster merge; the cluster count is the estimate.

Codebook angles at this layer are degrees, because the grids are IO
objects with a degree-based file format and a deg->rad->deg round trip
is not bit exact. Synthesis converts to radians internally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .arrays import element_offsets
from .beamspace import explicit_codebook
from .channel import build_channel

CLIP_FLOOR = 0.5 * (1 - 1e-6)

SWEEP_ANGLES_DEG = tuple(float(a) for a in range(-40, 41, 10))


class RssiFormatError(ValueError):
    """Malformed RSSI file; carries the 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column else ")")
        super().__init__(message + where)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class RssiMatrix:
    """Received power grid of one sweep, receive codewords along rows.

    values_db has shape (len(rx_angles_deg), len(tx_angles_deg)); all
    entries must be finite. metadata holds free-form string tags that
    survive a save/load round trip.
    """

    values_db: np.ndarray
    tx_angles_deg: np.ndarray
    rx_angles_deg: np.ndarray
    range_m: float
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        vals = np.asarray(self.values_db, dtype=float)
        tx = np.asarray(self.tx_angles_deg, dtype=float)
        rx = np.asarray(self.rx_angles_deg, dtype=float)
        if vals.shape != (len(rx), len(tx)):
            raise ValueError(
                f"values shape {vals.shape} does not match codebook sizes "
                f"({len(rx)}, {len(tx)})")
        if not np.all(np.isfinite(vals)):
            raise ValueError("RSSI entries must be finite")
        if not self.range_m > 0:
            raise ValueError("range_m must be positive")
        object.__setattr__(self, "values_db", vals)
        object.__setattr__(self, "tx_angles_deg", tx)
        object.__setattr__(self, "rx_angles_deg", rx)

    @property
    def tx_codebook(self):
        return explicit_codebook(np.deg2rad(self.tx_angles_deg))

    @property
    def rx_codebook(self):
        return explicit_codebook(np.deg2rad(self.rx_angles_deg))


@dataclass(frozen=True)
class PeakSet:
    """Cells of a normalized grid at or above the half-power threshold."""

    peaks: tuple
    shape: tuple

    def __len__(self):
        return len(self.peaks)


@dataclass(frozen=True)
class Cluster:
    members: tuple
    centroid: tuple


@dataclass(frozen=True)
class ClusterSet:
    clusters: tuple

    def __len__(self):
        return len(self.clusters)


@dataclass(frozen=True)
class EdofReport:
    """Outcome of the full counting pipeline for one grid.

    estimated_edof is None only when the grid produced no peaks, which
    the normalization stage rules out for finite input; the branch
    exists for hand-built degenerate data.
    """

    estimated_edof: int | None
    cluster_count: int
    range_m: float
    method: str

    def as_dict(self):
        return {
            "estimated_edof": self.estimated_edof,
            "cluster_count": self.cluster_count,
            "range_m": self.range_m,
            "method": self.method,
        }


def quantize_phases(phases, bits):
    """Snap phases to the 2^bits-level grid of a coarse phase shifter."""
    if not (isinstance(bits, int) and bits >= 1):
        raise ValueError("bits must be a positive integer")
    step = 2 * np.pi / (2**bits)
    return np.round(np.asarray(phases) / step) * step


def _codeword(cfg, wavelength, angle_rad, quantize_bits=None):
    """Progressive-phase codeword pointing a planar beam at angle_rad.

    Subarray layouts apply the same local codeword in every subarray
    (one phase per element within a subarray, no inter-subarray term);
    the combiner output is the coherent 1/sqrt(total) sum.
    """
    k = 2 * np.pi / wavelength
    if cfg.subarray_layout is None:
        phases = -k * element_offsets(cfg) * np.sin(angle_rad)
    else:
        parts = []
        for size, _ in cfg.subarray_layout:
            local = (np.arange(size) - (size - 1) / 2) * cfg.spacing
            parts.append(-k * local * np.sin(angle_rad))
        phases = np.concatenate(parts)
    if quantize_bits is not None:
        phases = quantize_phases(phases, quantize_bits)
    return np.exp(1j * phases) / np.sqrt(cfg.num_elements)


def synth_rssi(geom, tx, rx, wavelength, tx_angles_deg=None, rx_angles_deg=None,
               quantize_bits=None):
    """Simulate a full two-sided sweep over the given codebooks.

    Entry (i, j) is 10 log10 |w_i^H H w_j|^2 with H the exact-phase
    unit-modulus channel and w the codewords of _codeword (optionally
    phase quantized on both sides). Codebooks default to the nine-beam
    -40:10:40 degree sweep.
    """
    if tx_angles_deg is None:
        tx_angles_deg = SWEEP_ANGLES_DEG
    if rx_angles_deg is None:
        rx_angles_deg = SWEEP_ANGLES_DEG
    tx_deg = np.asarray(tx_angles_deg, dtype=float)
    rx_deg = np.asarray(rx_angles_deg, dtype=float)
    if tx_deg.size == 0 or rx_deg.size == 0:
        raise ValueError("codebooks must be non-empty")
    entries = build_channel(geom, tx, rx, wavelength).entries
    w_tx = np.stack([_codeword(tx, wavelength, a, quantize_bits)
                     for a in np.deg2rad(tx_deg)], axis=1)
    w_rx = np.stack([_codeword(rx, wavelength, a, quantize_bits)
                     for a in np.deg2rad(rx_deg)], axis=1)
    power = np.abs(w_rx.conj().T @ entries @ w_tx) ** 2
    # exact nulls would send the dB value to -inf; clamp to the smallest
    # positive float (about -307 dB, far below any clip threshold)
    values = 10 * np.log10(np.maximum(power, np.finfo(float).tiny))
    meta = {"source": "synthetic"}
    if quantize_bits is not None:
        meta["quantize_bits"] = str(quantize_bits)
    return RssiMatrix(values, tx_deg, rx_deg, geom.range_m, meta)


def normalize_clip(matrix):
    """Peak-normalized linear gains with the low range flattened.

    The global maximum maps to 1; entries within 3 dB of it keep their
    linear value; everything below is clamped to a floor just under the
    half-power threshold so in-range cells stay distinguishable.
    """
    values = matrix.values_db if isinstance(matrix, RssiMatrix) else np.asarray(matrix)
    linear = 10 ** ((values - values.max()) / 10)
    return np.where(linear >= 0.5, linear, CLIP_FLOOR)


def extract_peaks(normalized):
    """Cells at or above half power, skipping the clip floor."""
    arr = np.asarray(normalized)
    rows, cols = np.nonzero((arr >= 0.5) & (arr != CLIP_FLOOR))
    peaks = tuple(zip(rows.tolist(), cols.tolist()))
    return PeakSet(peaks, arr.shape)


def _linked(a, b):
    (r1, c1), (r2, c2) = a, b
    return ((r1 == r2 and abs(c1 - c2) <= 2)
            or (c1 == c2 and abs(r1 - r2) <= 2)
            or (abs(r1 - r2) <= 1 and abs(c1 - c2) <= 1))


def _round_half_away(x):
    return math.floor(x + 0.5) if x >= 0 else math.ceil(x - 0.5)


def cluster_peaks(peaks):
    """Merge peaks into connected components under the linkage rule.

    Two peaks link when they share a row or column with a gap of at
    most two cells, or sit diagonally adjacent. Each cluster's centroid
    is the coordinate-wise mean rounded half away from zero.
    """
    pts = sorted(peaks.peaks if isinstance(peaks, PeakSet) else peaks)
    parent = list(range(len(pts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a in range(len(pts)):
        for b in range(a + 1, len(pts)):
            if _linked(pts[a], pts[b]):
                parent[find(a)] = find(b)

    groups = {}
    for i, pt in enumerate(pts):
        groups.setdefault(find(i), []).append(pt)
    clusters = []
    for members in groups.values():
        rr = sum(p[0] for p in members) / len(members)
        cc = sum(p[1] for p in members) / len(members)
        clusters.append(Cluster(tuple(members),
                                (_round_half_away(rr), _round_half_away(cc))))
    clusters.sort(key=lambda c: c.centroid)
    return ClusterSet(tuple(clusters))


def estimate_edof(matrix):
    """Count effective streams in one sweep grid.

    Rows and columns are first put in ascending codebook-angle order, so
    the storage order of a loaded file cannot affect the result; then
    normalize -> clip -> peaks -> clusters, and the cluster count is the
    estimate (None when no peak survives, possible only for degenerate
    hand-built input).
    """
    row_order = np.argsort(matrix.rx_angles_deg, kind="stable")
    col_order = np.argsort(matrix.tx_angles_deg, kind="stable")
    canonical = matrix.values_db[np.ix_(row_order, col_order)]
    clusters = cluster_peaks(extract_peaks(normalize_clip(canonical)))
    count = len(clusters)
    return EdofReport(
        estimated_edof=count if count else None,
        cluster_count=count,
        range_m=matrix.range_m,
        method=matrix.metadata.get("source", "measured"),
    )


def rssi_csv_text(matrix):
    """The documented CSV form as a string; floats use repr so that a
    load -> save round trip is byte identical.

    Line 1: `# rssi_db,<K_rx>,<K_tx>,<range_m>`. Line 2:
    `# codebook_deg,` then the tx angles, then the rx angles. Optional
    `# meta,<key>,<value>` lines. Then K_rx rows of K_tx dB values.
    """
    k_rx = len(matrix.rx_angles_deg)
    k_tx = len(matrix.tx_angles_deg)
    lines = [f"# rssi_db,{k_rx},{k_tx},{float(matrix.range_m)!r}"]
    angles = [repr(float(a)) for a in matrix.tx_angles_deg]
    angles += [repr(float(a)) for a in matrix.rx_angles_deg]
    lines.append("# codebook_deg," + ",".join(angles))
    for key, value in matrix.metadata.items():
        lines.append(f"# meta,{key},{value}")
    for row in matrix.values_db:
        lines.append(",".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"


def save_rssi(matrix, path):
    """Write rssi_csv_text to a file."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(rssi_csv_text(matrix))
    return path


def _parse_float(token, line_no, col_no):
    try:
        return float(token)
    except ValueError:
        raise RssiFormatError(f"not a number: {token!r}", line_no, col_no) from None


def load_rssi(path):
    """Read a sweep grid written by save_rssi.

    Raises RssiFormatError naming the offending line (and column for
    bad numbers or a wrong column count).
    """
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read().splitlines()
    if not raw or not raw[0].startswith("# rssi_db,"):
        raise RssiFormatError("first line must start with '# rssi_db,'", 1)
    head = raw[0].split(",")
    if len(head) != 4:
        raise RssiFormatError("header needs K_rx, K_tx, and range fields", 1)
    try:
        k_rx, k_tx = int(head[1]), int(head[2])
    except ValueError:
        raise RssiFormatError(f"bad dimensions {head[1]!r},{head[2]!r}", 1) from None
    range_m = _parse_float(head[3], 1, 4)
    if k_rx < 1 or k_tx < 1:
        raise RssiFormatError("dimensions must be positive", 1)

    if len(raw) < 2 or not raw[1].startswith("# codebook_deg,"):
        raise RssiFormatError("second line must start with '# codebook_deg,'", 2)
    tokens = raw[1].split(",")[1:]
    if len(tokens) != k_tx + k_rx:
        raise RssiFormatError(
            f"expected {k_tx + k_rx} codebook angles, found {len(tokens)}", 2)
    angles = [_parse_float(t, 2, i + 2) for i, t in enumerate(tokens)]
    tx_deg = np.array(angles[:k_tx])
    rx_deg = np.array(angles[k_tx:])

    meta = {}
    line_no = 3
    while line_no <= len(raw) and raw[line_no - 1].startswith("#"):
        parts = raw[line_no - 1].split(",", 2)
        if parts[0].strip() != "# meta" or len(parts) != 3:
            raise RssiFormatError("unrecognized comment line", line_no)
        meta[parts[1]] = parts[2]
        line_no += 1

    rows = []
    for i in range(k_rx):
        if line_no + i > len(raw):
            raise RssiFormatError(
                f"expected {k_rx} data rows, file ends after {i}", line_no + i - 1)
        tokens = raw[line_no + i - 1].split(",")
        if len(tokens) != k_tx:
            raise RssiFormatError(
                f"row has {len(tokens)} values, expected {k_tx}",
                line_no + i, len(tokens))
        rows.append([_parse_float(t, line_no + i, j + 1)
                     for j, t in enumerate(tokens)])
    trailing = raw[line_no + k_rx - 1:]
    if any(s.strip() for s in trailing):
        raise RssiFormatError("unexpected trailing content", line_no + k_rx)
    return RssiMatrix(np.array(rows), tx_deg, rx_deg, range_m, meta)
