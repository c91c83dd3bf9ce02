"""Command-line front end: beam profiles, stream-count tables, link
metrics, and the desk-scale sweep replica.

Angles on the command line are degrees and distances meters (the
experiment sweep takes centimeters, matching how such setups are
labeled); internal math is radians and meters throughout. Every
command computes its outputs fully in memory before writing anything,
so a failed run leaves no partial files. Outputs contain no timestamps
and format floats with repr, making reruns byte identical.

Exit codes: 0 success, 1 usage or configuration error, 2 data error
(unreadable or malformed input files).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from .arrays import (ArrayConfig, ConfigError, LinkGeometry, Scenario,
                     load_scenario, wavelength_for)
from .beamspace import edof2, gain_profile, profile_csv_text
from .measurement import (RssiFormatError, estimate_edof, load_rssi,
                          rssi_csv_text, synth_rssi)
from .ranges import edof1, edof2_theory, metrics_report


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the documented contract is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _float_list(text):
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _wall_scenario():
    # wide wall-mounted transmitter against a small terminal
    lam = wavelength_for(29e9)
    tx = ArrayConfig(256, lam / 2)
    rx = ArrayConfig(4, lam / 2)
    return Scenario(tx, rx, LinkGeometry(2 * tx.aperture), lam)


def _metrics_scenario():
    # apertures 0.02 m against 0.30 m at a 7.5 mm wavelength, evaluated
    # at the range where the continuous stream estimate crosses one
    tx = ArrayConfig(4, 0.005)
    rx = ArrayConfig(40, 0.0075)
    return Scenario(tx, rx, LinkGeometry(0.8), 0.0075)


def _desk_scenario():
    # desk-scale sweep: 4-element terminal spanning 2.75 cm against
    # three half-wavelength subarrays spanning about 30 cm, at 29 GHz
    lam = wavelength_for(29e9)
    tx = ArrayConfig(4, 0.0275 / 4)
    rx = ArrayConfig(12, lam / 2,
                     subarray_layout=((4, -0.13625), (4, 0.0), (4, 0.13625)))
    return Scenario(tx, rx, LinkGeometry(0.55), lam)


def _scenario(args, default_factory):
    if args.config:
        return load_scenario(args.config)
    return default_factory()


def _write_outputs(out_dir, files):
    os.makedirs(out_dir, exist_ok=True)
    for name, text in files:
        path = os.path.join(out_dir, name)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        print(f"wrote {name}")


def _json_text(payload):
    return json.dumps(payload, indent=2) + "\n"


def cmd_beamspace(args):
    sc = _scenario(args, _wall_scenario)
    if args.theta_deg is None:
        theta = sc.link.focus_angle
    else:
        theta = math.radians(args.theta_deg)
    if args.ranges is None:
        rayleigh = 2 * sc.tx.aperture**2 / sc.wavelength
        ranges = [2 * sc.tx.aperture, rayleigh]
    else:
        ranges = args.ranges

    profiles = [gain_profile(sc.tx, sc.wavelength, theta, r,
                             evaluator=args.evaluator) for r in ranges]
    files = []
    if args.format == "csv":
        for i, (r, prof) in enumerate(zip(ranges, profiles), start=1):
            files.append((f"beamspace_r{i}_{r:g}m.csv", profile_csv_text(prof)))
    else:
        payload = []
        for r, prof in zip(ranges, profiles):
            payload.append({
                "range_m": r,
                "focus_angle_rad": prof.focus[0],
                "peak_gain": float(prof.gains.max()),
                "sin_theta_m": [float(s) for s in np.sin(prof.codebook.angles)],
                "gain": [float(g) for g in prof.normalized()],
            })
        files.append(("beamspace.json", _json_text(payload)))
    _write_outputs(args.out, files)
    for r, prof in zip(ranges, profiles):
        above = int(np.sum(prof.normalized() >= 0.5))
        print(f"r={r!r} m: {above} beams within half power")
    return 0


def cmd_edof_table(args):
    sc = _scenario(args, _wall_scenario)
    if args.ranges is None:
        rayleigh = 2 * sc.tx.aperture**2 / sc.wavelength
        ranges = [float(r) for r in np.geomspace(2 * sc.tx.aperture, rayleigh, 9)]
    else:
        ranges = args.ranges
    thetas_deg = args.theta_grid_deg

    table = [[edof2(sc.tx, sc.wavelength, math.radians(t), r,
                    evaluator=args.evaluator)
              for t in thetas_deg] for r in ranges]
    if args.format == "csv":
        header = "range_m," + ",".join(f"theta_{t:g}deg" for t in thetas_deg)
        lines = [header]
        for r, row in zip(ranges, table):
            lines.append(",".join([repr(float(r))] + [str(v) for v in row]))
        files = [("edof_table.csv", "\n".join(lines) + "\n")]
    else:
        files = [("edof_table.json", _json_text({
            "range_m": ranges, "theta_deg": thetas_deg, "edof2": table}))]
    _write_outputs(args.out, files)
    return 0


def cmd_metrics(args):
    sc = _scenario(args, _metrics_scenario)
    report = metrics_report(sc.tx, sc.rx, sc.link, sc.wavelength,
                            edof2_count=args.edof2_count)
    record = report.as_dict()
    if args.format == "csv":
        lines = ["metric,value"]
        for key, value in record.items():
            text = repr(float(value)) if isinstance(value, float) else str(value)
            lines.append(f"{key},{text}")
        files = [("metrics.csv", "\n".join(lines) + "\n")]
    else:
        files = [("metrics.json", _json_text(record))]
    _write_outputs(args.out, files)
    width = max(len(k) for k in record)
    for key, value in record.items():
        text = repr(float(value)) if isinstance(value, float) else str(value)
        print(f"{key:<{width}}  {text}")
    return 0


def _experiment_rows(sc, reports):
    d_t, d_r = sc.tx.aperture, sc.rx.aperture
    ors = (sc.link.tx_orientation, sc.link.rx_orientation)
    v_max = max(sc.tx.num_elements, sc.rx.num_elements)
    rows = []
    for rep in reports:
        rows.append({
            "range_m": rep.range_m,
            "estimated_edof": rep.estimated_edof,
            "cluster_count": rep.cluster_count,
            "edof1_theory": edof1(d_t, d_r, sc.wavelength, rep.range_m, ors),
            "edof2_theory": edof2_theory(d_t, d_r, sc.wavelength, rep.range_m,
                                         v_max, ors),
        })
    return rows


def cmd_experiment(args):
    sc = _scenario(args, _desk_scenario)
    qbits = args.quantize_bits if args.quantize_bits > 0 else None
    files = []
    failures = 0

    if args.from_files:
        try:
            names = sorted(n for n in os.listdir(args.from_files)
                           if n.endswith(".csv"))
        except OSError as exc:
            print(f"cannot list {args.from_files}: {exc}", file=sys.stderr)
            return 2
        if not names:
            print(f"no input .csv files in {args.from_files}", file=sys.stderr)
            return 2
        reports = []
        for name in names:
            path = os.path.join(args.from_files, name)
            try:
                reports.append(estimate_edof(load_rssi(path)))
            except (RssiFormatError, OSError) as exc:
                print(f"{name}: {exc}", file=sys.stderr)
                failures += 1
    else:
        reports = []
        for r_cm in args.ranges_cm:
            geom = LinkGeometry(r_cm / 100, sc.link.tx_orientation,
                                sc.link.rx_orientation, sc.link.focus_angle)
            matrix = synth_rssi(geom, sc.tx, sc.rx, sc.wavelength,
                                quantize_bits=qbits)
            reports.append(estimate_edof(matrix))
            # grids go into a subdirectory so --from-files can point at it
            # without tripping over the summary files
            files.append((os.path.join("rssi", f"rssi_r{r_cm:g}cm.csv"),
                          rssi_csv_text(matrix)))

    reports.sort(key=lambda rep: rep.range_m)
    rows = _experiment_rows(sc, reports)
    files.append(("reports.json", _json_text([r.as_dict() for r in reports])))
    if args.format == "csv":
        lines = ["range_m,estimated_edof,cluster_count,edof1_theory,edof2_theory"]
        for row in rows:
            est = "" if row["estimated_edof"] is None else str(row["estimated_edof"])
            lines.append(",".join([
                repr(float(row["range_m"])), est, str(row["cluster_count"]),
                repr(float(row["edof1_theory"])), str(row["edof2_theory"])]))
        files.append(("experiment.csv", "\n".join(lines) + "\n"))
    else:
        files.append(("experiment.json", _json_text(rows)))
    _write_outputs(args.out, files)
    for row in rows:
        print(f"r={row['range_m']!r} m: estimated_edof={row['estimated_edof']}"
              f" edof2_theory={row['edof2_theory']}")
    return 2 if failures else 0


def _build_parser():
    parser = _Parser(prog="nfedof",
                     description="Near-field array stream-count toolkit")
    common = _Parser(add_help=False)
    common.add_argument("--config", metavar="FILE",
                        help="INI scenario file ([tx]/[rx]/[link] sections)")
    common.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output file format (default csv)")
    common.add_argument("--out", metavar="DIR", default=".",
                        help="output directory (default current)")

    sub = parser.add_subparsers(dest="command", required=True)

    p_beam = sub.add_parser("beamspace", parents=[common],
                            help="beam-grid gain profile per focus range")
    p_beam.add_argument("--theta-deg", type=float, default=None,
                        help="focus angle in degrees (default: scenario focus)")
    p_beam.add_argument("--ranges", type=_float_list, default=None,
                        help="comma-separated focus ranges in meters "
                             "(default: twice the aperture and the far-field "
                             "boundary)")
    p_beam.add_argument("--evaluator", choices=("direct", "fresnel"),
                        default="direct")
    p_beam.set_defaults(func=cmd_beamspace)

    p_table = sub.add_parser("edof-table", parents=[common],
                             help="beam-count table over ranges and angles")
    p_table.add_argument("--ranges", type=_float_list, default=None,
                         help="comma-separated ranges in meters (default: 9 "
                              "log-spaced points up to the far-field boundary)")
    p_table.add_argument("--theta-grid-deg", type=_float_list,
                         default=[-60.0, -45.0, -30.0, -15.0, 0.0,
                                  15.0, 30.0, 45.0, 60.0],
                         help="comma-separated focus angles in degrees")
    p_table.add_argument("--evaluator", choices=("direct", "fresnel"),
                         default="direct")
    p_table.set_defaults(func=cmd_edof_table)

    p_metrics = sub.add_parser("metrics", parents=[common],
                               help="closed-form distance metrics report")
    p_metrics.add_argument("--edof2-count", type=int, default=1,
                           help="observed stream count for the rescaled "
                                "distance (default 1)")
    p_metrics.set_defaults(func=cmd_metrics)

    p_exp = sub.add_parser("experiment", parents=[common],
                           help="two-sided sweep replica or RSSI file batch")
    p_exp.add_argument("--ranges-cm", type=_float_list,
                       default=[15.0, 25.0, 35.0, 55.0, 100.0, 200.0],
                       help="comma-separated link ranges in centimeters")
    p_exp.add_argument("--from-files", metavar="DIR", default=None,
                       help="process saved RSSI CSV files instead of "
                            "synthesizing")
    p_exp.add_argument("--quantize-bits", type=int, default=2,
                       help="codeword phase-shifter resolution in bits; "
                            "0 disables quantization (default 2)")
    p_exp.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RssiFormatError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except (ConfigError, ValueError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
