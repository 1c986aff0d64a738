"""Command-line frontend: one subcommand per library area.

Structured single results go to stdout as JSON with sorted keys;
grids and trajectories are CSV with a fixed column order. Floats are
emitted at full double precision (17 significant digits in CSV,
shortest round-trip form in JSON), so identical inputs yield
byte-identical outputs.

Exit codes: 0 success, 2 validation/usage error, 3 numeric or IO failure.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import enum
import hashlib
import json
import os
import sys

import numpy as np

from . import __version__, collinear, dynamics, regions, stability, twobody
from .collinear import Interval
from .errors import NumericError, ValidationError
from .params import SystemParams
from .triangular import classify_location, triangular_points


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def _json_default(obj):
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, enum.Enum):
        return obj.value
    raise TypeError(f"not JSON-serializable: {type(obj)!r}")


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2, default=_json_default))


def _pair(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected x,y but got {text!r}")
    return (float(parts[0]), float(parts[1]))


def _quad(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected x,y,px,py but got {text!r}")
    return tuple(float(p) for p in parts)  # type: ignore[return-value]


def _thread_count() -> int:
    raw = os.environ.get("RC3BP_THREADS", "").strip()
    if raw:
        n = int(raw)
        if n >= 1:
            return n
    return min(4, os.cpu_count() or 1)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_validate(args) -> int:
    params = SystemParams(args.mu, args.beta1, args.beta2)
    _emit_json(params.to_dict())
    return 0


def _cmd_two_body(args) -> int:
    cfg = twobody.TwoBodyConfig(args.m1, args.m2, args.q1, args.q2, args.G, args.k)
    payload = {
        "C": cfg.C,
        "mu_red": cfg.mu_red,
        "class": twobody.classify(cfg).value,
    }
    if args.kstar is not None or args.l is not None:
        if args.kstar is None or args.l is None:
            raise ValidationError("--kstar and --l must be given together")
        orbit = twobody.hyperbolic_orbit(cfg, args.kstar, args.l)
        payload["orbit"] = orbit.to_dict()
    _emit_json(payload)
    return 0


def _cmd_equilibria(args) -> int:
    params = SystemParams(args.mu, args.beta1, args.beta2)
    if args.kind == "triangular":
        pair = triangular_points(params)
        _emit_json(
            {
                "kind": "triangular",
                "l4": list(pair.l4),
                "l5": list(pair.l5),
                "rho1": pair.rho1,
                "rho2": pair.rho2,
                "location": classify_location(params).value,
            }
        )
        return 0
    roots = collinear.find_collinear(params)
    predicted = {
        iv.value: collinear.predicted_root_count(params, iv).value for iv in Interval
    }
    _emit_json(
        {
            "kind": "collinear",
            "region": collinear.classify_region(params).value,
            "predicted": predicted,
            "roots": [r.to_dict() for r in roots],
        }
    )
    return 0


def _cmd_stability(args) -> int:
    params = SystemParams(args.mu, args.beta1, args.beta2)
    if args.point is not None:
        x, y = args.point
        a = stability.linearization(params, x, y)
        eig = stability.quartic_eigenvalues(a)
        # the theorems classify only triangular/limit points; a free point
        # gets raw eigenvalues with the classification fields left null
        _emit_json(
            {
                "eigenvalues": [[z.real, z.imag] for z in eig],
                "F": None,
                "gamma": None,
                "classification": None,
            }
        )
        return 0
    report = stability.classify_triangular(params)
    _emit_json(report.to_dict())
    return 0


def _cmd_critical_roots(args) -> int:
    xr1, xr2 = collinear.critical_roots(args.mu)
    payload = {"mu": args.mu, "x_r1": xr1, "x_r2": xr2}
    if args.series:
        s1, s2 = collinear.critical_roots_series(args.mu)
        payload["x_r1_series"] = s1
        payload["x_r2_series"] = s2
    _emit_json(payload)
    return 0


def _raster_csv_lines(raster: regions.RegionRaster):
    yield "x,y,label\n"
    xs = raster.x_centers()
    ys = raster.y_centers()
    legend = raster.legend
    labels = raster.labels
    for j, yv in enumerate(ys):
        ytxt = _fmt(yv)
        row = labels[j]
        for i, xv in enumerate(xs):
            yield f"{_fmt(xv)},{ytxt},{legend[row[i]]}\n"


def _write_figure(dataset: regions.FigureDataset, csv_path: str, json_path: str) -> None:
    with open(csv_path, "w", newline="\n") as fh:
        fh.writelines(_raster_csv_lines(dataset.raster))
    meta = {
        "figure": dataset.figure,
        "parameters": dataset.parameters,
        "legend": list(dataset.raster.legend),
        "curves": dataset.curves,
    }
    with open(json_path, "w", newline="\n") as fh:
        json.dump(meta, fh, sort_keys=True, indent=2, default=_json_default)
        fh.write("\n")


def _cmd_regions(args) -> int:
    dataset = regions.figure_dataset(args.figure, mu=args.mu, resolution=args.resolution)
    base = args.out[:-4] if args.out.endswith(".csv") else args.out
    csv_path, json_path = base + ".csv", base + ".json"
    _write_figure(dataset, csv_path, json_path)
    _emit_json({"figure": args.figure, "csv": csv_path, "json": json_path})
    return 0


def _cmd_integrate(args) -> int:
    params = SystemParams(args.mu, args.beta1, args.beta2)
    state = dynamics.PhaseState(*args.state)
    sample_times = None
    if args.every is not None:
        if args.every <= 0.0:
            raise ValidationError(f"--every must be positive, got {args.every!r}")
        n = int(np.floor(args.t_end / args.every + 1e-9))
        times = [i * args.every for i in range(n + 1)]
        if times[-1] < args.t_end - 1e-12 * max(1.0, args.t_end):
            times.append(args.t_end)
        sample_times = times
    traj = dynamics.integrate(params, state, args.t_end, tol=args.tol, sample_times=sample_times)
    lines = ["t,x,y,px,py,H\n"]
    for i in range(len(traj.t)):
        row = traj.states[i]
        lines.append(
            ",".join(
                [_fmt(traj.t[i]), _fmt(row[0]), _fmt(row[1]), _fmt(row[2]), _fmt(row[3]),
                 _fmt(traj.energy[i])]
            )
            + "\n"
        )
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.writelines(lines)
        _emit_json({"out": args.out, "samples": len(traj.t), "reason": traj.reason})
    else:
        sys.stdout.write("".join(lines))
    return 0


def _sha256(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def reproduce_all(out_dir: str, resolution: int | None = None) -> dict:
    """Regenerate every figure dataset into out_dir and write the manifest."""
    os.makedirs(out_dir, exist_ok=True)

    def build(figure: int) -> list[dict]:
        dataset = regions.figure_dataset(figure, resolution=resolution)
        stem = f"figure-{figure:02d}"
        csv_path = os.path.join(out_dir, stem + ".csv")
        json_path = os.path.join(out_dir, stem + ".json")
        _write_figure(dataset, csv_path, json_path)
        return [
            {
                "file": os.path.basename(p),
                "subject": f"figure-{figure}",
                "parameters": dataset.parameters,
                "sha256": _sha256(p),
            }
            for p in (csv_path, json_path)
        ]

    entries: list[dict] = []
    threads = _thread_count()
    if threads > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
            for result in pool.map(build, regions.FIGURES):
                entries.extend(result)
    else:
        for figure in regions.FIGURES:
            entries.extend(build(figure))
    entries.sort(key=lambda e: e["file"])
    manifest = {
        "artifact": "rc3bp",
        "version": __version__,
        "parameters": {"resolution": resolution or regions._DEFAULT_RESOLUTION},
        "files": entries,
    }
    manifest_path = os.path.join(out_dir, "manifest.json")
    with open(manifest_path, "w", newline="\n") as fh:
        json.dump(manifest, fh, sort_keys=True, indent=2, default=_json_default)
        fh.write("\n")
    return manifest


def _cmd_reproduce_all(args) -> int:
    manifest = reproduce_all(args.out, resolution=args.resolution)
    _emit_json(
        {
            "out": args.out,
            "files": len(manifest["files"]),
            "manifest": os.path.join(args.out, "manifest.json"),
        }
    )
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_params_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mu", type=float, required=True, help="mass ratio in (0, 1)")
    p.add_argument("--beta1", type=float, required=True, help="net strength of primary 1")
    p.add_argument("--beta2", type=float, required=True, help="net strength of primary 2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rc3bp",
        description="Planar circular restricted charged three-body problem toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="reduce and admissibility-check parameters")
    _add_params_args(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("two-body", help="classify the charged two-body problem")
    p.add_argument("--m1", type=float, required=True)
    p.add_argument("--m2", type=float, required=True)
    p.add_argument("--q1", type=float, required=True)
    p.add_argument("--q2", type=float, required=True)
    p.add_argument("--G", type=float, default=1.0)
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("--kstar", type=float, default=None, help="|C| for the repulsive orbit")
    p.add_argument("--l", type=float, default=None, help="angular momentum of the relative orbit")
    p.set_defaults(func=_cmd_two_body)

    p = sub.add_parser("equilibria", help="triangular points or collinear roots")
    _add_params_args(p)
    p.add_argument("--kind", choices=("triangular", "collinear"), required=True)
    p.set_defaults(func=_cmd_equilibria)

    p = sub.add_parser("stability", help="eigenvalues and Theorem-level classification")
    _add_params_args(p)
    p.add_argument(
        "--point",
        type=_pair,
        default=None,
        help="x,y of an arbitrary point; omit to classify the triangular pair",
    )
    p.set_defaults(func=_cmd_stability)

    p = sub.add_parser("critical-roots", help="the band-terminating roots x_r1, x_r2")
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--series", action="store_true", help="include the small-mu series values")
    p.set_defaults(func=_cmd_critical_roots)

    p = sub.add_parser("regions", help="figure dataset: raster CSV plus curves JSON")
    p.add_argument("--figure", type=int, required=True, choices=regions.FIGURES)
    p.add_argument("--mu", type=float, default=None)
    p.add_argument("--resolution", type=int, default=None)
    p.add_argument("--out", required=True, help="output path; .csv and .json are derived")
    p.set_defaults(func=_cmd_regions)

    p = sub.add_parser("integrate", help="integrate the rotating-frame equations")
    _add_params_args(p)
    p.add_argument("--state", type=_quad, required=True, help="initial x,y,px,py")
    p.add_argument("--t-end", dest="t_end", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--every", type=float, default=None, help="output sampling step")
    p.add_argument("--out", default=None, help="CSV path; stdout when omitted")
    p.set_defaults(func=_cmd_integrate)

    p = sub.add_parser("reproduce-all", help="emit every figure dataset plus a manifest")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--resolution", type=int, default=None)
    p.set_defaults(func=_cmd_reproduce_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        target = getattr(exc, "filename", None)
        where = f" ({target})" if target else ""
        print(f"io failure{where}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
