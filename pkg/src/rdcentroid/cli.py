"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 malformed
input (JSON or slope syntax), 4 desk-scale cap exceeded, 5 unknown surface.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .backend import Marking, UnknownSurface
from .config import ConfigError, get_config, use_config, write_config
from .markings import BallTooLarge, ball

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT, EXIT_CAP, EXIT_SURFACE = 0, 1, 2, 3, 4, 5


class InputError(Exception):
    pass


def read_marking(path) -> Marking:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc})") from exc
    try:
        return Marking.from_json(obj)
    except UnknownSurface:
        raise
    except (ValueError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def parse_radii(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if not out or min(out) < 0:
        raise argparse.ArgumentTypeError(f"bad radii {text!r}")
    return sorted(set(out))


def emit(obj, out=None):
    text = json.dumps(obj, indent=2, default=str)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_centroid(args) -> int:
    from .centroid import kappa_result

    a, b, c = (read_marking(p) for p in args.triple)
    res = kappa_result(a, b, c)
    emit({"config_version": get_config().version, **res.to_json()}, args.out)
    return EXIT_OK


def cmd_census(args) -> int:
    from .rdlab import CSV_HEADER, census, growth_fit

    x, y = read_marking(args.x), read_marking(args.y)
    cfg = get_config()
    if max(args.radii) > cfg.ball_max_radius:
        raise BallTooLarge(max(args.radii), cfg.ball_max_radius, 0)
    recs = census(x, y, args.radii, workers=args.workers)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "census.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_HEADER)
        for rec in recs:
            w.writerow(rec.csv_row())
    summary = {"config_version": cfg.version, "x": x.to_json(), "y": y.to_json(),
               "counts": {rec.r: rec.count for rec in recs}}
    if len(recs) >= 4:
        summary["fit"] = growth_fit(recs).to_json()
    (out / "growth_fit.json").write_text(json.dumps(summary, indent=2) + "\n")
    emit(summary)
    return EXIT_OK


def _run_suite(name, seed, samples):
    from .suites import SUITES

    fn = SUITES[name]
    return fn(n=samples, seed=seed) if samples else fn(seed=seed)


def cmd_verify(args) -> int:
    rep = _run_suite(args.suite, args.seed, args.samples)
    emit(rep.to_json(), args.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_calibrate(args) -> int:
    from .suites import propose

    proposals = {}
    reports = []
    for name in args.suite.split(","):
        rep = _run_suite(name, args.seed, args.samples)
        reports.append(rep.to_json())
        for k, v in propose(rep).items():
            proposals[k] = max(proposals.get(k, v), v)
    current = get_config().as_dict()
    changed = {k: v for k, v in proposals.items() if current.get(k) != v}
    result = {"config_version": get_config().version, "proposed": proposals, "changes": changed, "reports": reports}
    if args.write_config and changed:
        result["written_version"] = write_config(changed)
    elif changed:
        result["note"] = "not written; pass --write-config to store the proposed constants"
    emit(result, args.out)
    return EXIT_OK


def cmd_export(args) -> int:
    mu = read_marking(args.ball)
    bl = ball(mu, args.r, max_radius=get_config().ball_max_radius)
    if args.dot:
        Path(args.dot).write_text(bl.to_dot())
    if args.json:
        Path(args.json).write_text(json.dumps(bl.to_json(), indent=1) + "\n")
    emit({"config_version": get_config().version, "center": mu.to_json(), "radius": args.r, "members": len(bl)})
    return EXIT_OK


SUITE_NAMES = ["behrstock", "geodesic-image", "order", "sigma", "cover", "centroid", "ds", "cr",
               "farey", "construct-q", "census", "quasi", "convolution"]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rdcentroid", description="Centroids in the marking graph of S_1_1.")
    p.add_argument("--config", help="constants file (default: the packaged one)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("centroid", help="centroid of three markings")
    c.add_argument("--triple", nargs=3, required=True, metavar="JSON")
    c.add_argument("--out")
    c.set_defaults(func=cmd_centroid)

    c = sub.add_parser("census", help="count centroids kappa(x, y, z) over balls about x")
    c.add_argument("--x", required=True)
    c.add_argument("--y", required=True)
    c.add_argument("--radii", type=parse_radii, default=parse_radii("3..10"))
    c.add_argument("--out", required=True)
    c.add_argument("--workers", type=int, default=1)
    c.set_defaults(func=cmd_census)

    c = sub.add_parser("verify", help="run a sweep against the frozen constants")
    c.add_argument("--suite", required=True, choices=SUITE_NAMES)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--samples", type=int)
    c.add_argument("--out")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("calibrate", help="propose constants from sweeps")
    c.add_argument("--suite", required=True, help="comma-separated suite names")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--samples", type=int)
    c.add_argument("--write-config", action="store_true", help="store the proposals (bumps the version)")
    c.add_argument("--out")
    c.set_defaults(func=cmd_calibrate)

    c = sub.add_parser("export", help="write a marking-graph ball")
    c.add_argument("--ball", required=True, metavar="JSON")
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--dot")
    c.add_argument("--json")
    c.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "calibrate":
        from .suites import SUITES

        unknown = [s for s in args.suite.split(",") if s not in SUITES]
        if unknown:
            parser.error(f"unknown suite(s): {unknown}")
    try:
        if args.config:
            use_config(args.config)
        return args.func(args)
    except UnknownSurface as exc:
        print(f"error: unknown surface {exc}", file=sys.stderr)
        return EXIT_SURFACE
    except BallTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
