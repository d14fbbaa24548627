"""Command-line front end: sampling, densities, kernels, gaps, angles.

Scalar results are emitted as JSON, grids and spectra as CSV.  Every output
embeds the fully resolved configuration: JSON outputs carry a ``config``
field, CSV outputs start with '# ...' metadata lines followed by the column
header.  Floats are serialized with 17 significant digits; files are written
atomically (temp file, then rename).  Exit codes: 0 success, 2 bad usage or
parameters, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile

import numpy as np

from . import __version__
from .cdkernel import (
    KernelSpec,
    finite_profile,
    hard_edge_scale,
    one_point_density,
    rescaled_bulk,
    rescaled_hard,
    rescaled_soft,
    soft_edge,
)
from .empirics import parallel_map
from .ensembles import reduce_ranks, sample_spectrum
from .errors import JrmtError, NumericError, ParameterError, SingularMatrixError
from .fredholm import largest_eval_cdf, tracy_widom_cdf
from .limits import airy_kernel, banach_angle, bessel_kernel, limit_density, sine_kernel
from .matalg import principal_cosines
from .randgen import SeededStream, random_isometry

USAGE_EXIT = 2
NUMERIC_EXIT = 3


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(path: str | None, text: str) -> None:
    if path:
        _atomic_write(path, text)
    else:
        sys.stdout.write(text)


def _csv_text(config: dict, header: list[str], rows: list[list[float]]) -> str:
    lines = ["# " + json.dumps(config, sort_keys=True)]
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _json_text(config: dict, result: dict) -> str:
    return json.dumps({"config": config, **result}, sort_keys=True) + "\n"


def _parse_grid(text: str, what: str) -> np.ndarray:
    try:
        lo_s, hi_s, n_s = text.split(":")
        lo, hi, count = float(lo_s), float(hi_s), int(n_s)
    except ValueError:
        raise ParameterError(f"malformed {what} {text!r}; expected lo:hi:count")
    if count < 1 or not lo <= hi:
        raise ParameterError(f"bad {what} {text!r}")
    return np.linspace(lo, hi, count)


# ---------------------------------------------------------------------------
# subcommands


def cmd_sample(args) -> None:
    plan = reduce_ranks(args.n, args.q, args.qtilde)
    config = {
        "command": "sample",
        "n": args.n,
        "q": args.q,
        "qtilde": args.qtilde,
        "route": args.route,
        "trials": args.trials,
        "seed": args.seed,
        "plan": {
            "canonical": None
            if plan.canonical is None
            else [plan.canonical.q, plan.canonical.q_tilde],
            "eigen_map": plan.eigen_map,
            "kept": plan.kept_count,
            "ones": plan.ones,
            "zeros": plan.zeros,
        },
        "note": "eigenvalues of the compressed q x q block, ascending, support [0, 1]",
    }

    def one_trial(t: int) -> np.ndarray:
        stream = SeededStream(args.seed, t)
        if plan.canonical is None:
            vals = np.empty(0)
        else:
            vals = sample_spectrum(
                stream, args.n, plan.canonical.q, plan.canonical.q_tilde, route=args.route
            )
        return plan.apply(vals)

    rows = parallel_map(one_trial, list(range(args.trials)))
    header = [f"lambda_{i+1}" for i in range(args.q)]
    _emit(args.out, _csv_text(config, header, [list(r) for r in rows]))


def cmd_density(args) -> None:
    xs = _parse_grid(args.grid, "--grid")
    if xs[0] <= -1.0 or xs[-1] >= 1.0:
        raise ParameterError("--grid must lie strictly inside (-1, 1)")
    spec = KernelSpec(args.n, args.a, args.b)
    prof = finite_profile(spec)
    config = {
        "command": "density",
        "n": args.n,
        "a": args.a,
        "b": args.b,
        "grid": args.grid,
        "support": [prof.r, prof.s],
    }
    rows = [
        [float(x), one_point_density(spec, float(x)), float(limit_density(prof, float(x)))]
        for x in xs
    ]
    _emit(args.out, _csv_text(config, ["x", "finite_n_density", "limit_f"], rows))


def cmd_kernel(args) -> None:
    us = _parse_grid(args.ugrid, "--ugrid")
    vs = _parse_grid(args.vgrid, "--vgrid") if args.vgrid else us
    spec = KernelSpec(args.n, args.a, args.b)
    config = {
        "command": "kernel",
        "regime": args.regime,
        "n": args.n,
        "a": args.a,
        "b": args.b,
        "ugrid": args.ugrid,
        "vgrid": args.vgrid or args.ugrid,
    }
    if args.regime == "bulk":
        prof = finite_profile(spec)
        x0 = 0.5 * (prof.r + prof.s) if args.x is None else args.x
        config["x"] = x0
        rows = [
            [u, v, rescaled_bulk(spec, x0, float(u), float(v)), float(sine_kernel(u, v))]
            for u in us
            for v in vs
        ]
    elif args.regime == "soft":
        s, h = soft_edge(spec)
        config["edge"] = s
        config["scale"] = h
        rows = [
            [u, v, rescaled_soft(spec, float(u), float(v)), float(airy_kernel(u, v))]
            for u in us
            for v in vs
        ]
    elif args.regime == "hard":
        if args.b != int(args.b):
            raise ParameterError(f"hard regime needs integer b, got {args.b}")
        config["scale"] = hard_edge_scale(spec)
        bo = int(args.b)
        rows = [
            [u, v, rescaled_hard(spec, float(u), float(v)), float(bessel_kernel(bo, u, v))]
            for u in us
            for v in vs
        ]
    else:
        raise ParameterError(f"unknown regime {args.regime!r}")
    _emit(args.out, _csv_text(config, ["u", "v", "rescaled_kernel", "limit_kernel"], rows))


def cmd_gap(args) -> None:
    spec = KernelSpec(args.n, args.a, args.b)
    value = largest_eval_cdf(spec, args.x, m=args.quad)
    config = {
        "command": "gap",
        "n": args.n,
        "a": args.a,
        "b": args.b,
        "x": args.x,
        "quad": args.quad,
    }
    _emit(args.out, _json_text(config, {"gap": value}))


def cmd_tw(args) -> None:
    value = tracy_widom_cdf(args.t, m=args.quad, tail=args.tail)
    config = {"command": "tw", "t": args.t, "quad": args.quad, "tail": args.tail}
    _emit(args.out, _json_text(config, {"tw_cdf": value}))


def cmd_angles(args) -> None:
    if not (1 <= args.q <= args.n and 1 <= args.qprime <= args.n):
        raise ParameterError("need 1 <= q, qprime <= n")
    alpha = args.q / args.n
    beta = args.qprime / args.n
    theta = banach_angle(alpha, beta)
    predicted = math.cos(theta) ** 2

    def one_trial(t: int) -> float:
        b1 = random_isometry(SeededStream(args.seed, 2 * t), args.n, args.q)
        b2 = random_isometry(SeededStream(args.seed, 2 * t + 1), args.n, args.qprime)
        return float(principal_cosines(b1, b2)[0] ** 2)

    cos2 = np.array(parallel_map(one_trial, list(range(args.trials))))
    config = {
        "command": "angles",
        "n": args.n,
        "q": args.q,
        "qprime": args.qprime,
        "trials": args.trials,
        "seed": args.seed,
    }
    result = {
        "predicted_cos2": predicted,
        "predicted_angle": theta,
        "max_cos2": {
            "mean": float(cos2.mean()),
            "min": float(cos2.min()),
            "max": float(cos2.max()),
            "std": float(cos2.std()),
        },
    }
    _emit(args.out, _json_text(config, result))


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jrmt", description=__doc__)
    p.add_argument("--version", action="version", version=f"jrmt {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("sample", help="draw ensemble spectra (CSV, one row per trial)")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--q", type=int, required=True)
    ps.add_argument("--qtilde", type=int, required=True)
    ps.add_argument("--route", choices=["projector", "wishart"], default="projector")
    ps.add_argument("--trials", type=int, default=1)
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--out", default=None)
    ps.set_defaults(func=cmd_sample)

    pd = sub.add_parser("density", help="finite-n and limiting spectral density on a grid")
    pd.add_argument("--n", type=int, required=True)
    pd.add_argument("--a", type=float, required=True)
    pd.add_argument("--b", type=float, required=True)
    pd.add_argument("--grid", required=True, help="lo:hi:count inside (-1,1)")
    pd.add_argument("--out", default=None)
    pd.set_defaults(func=cmd_density)

    pk = sub.add_parser("kernel", help="rescaled kernel vs its limit on a (u,v) grid")
    pk.add_argument("--regime", choices=["bulk", "soft", "hard"], required=True)
    pk.add_argument("--n", type=int, required=True)
    pk.add_argument("--a", type=float, required=True)
    pk.add_argument("--b", type=float, required=True)
    pk.add_argument("--x", type=float, default=None, help="bulk center (default: band midpoint)")
    pk.add_argument("--ugrid", required=True, help="lo:hi:count")
    pk.add_argument("--vgrid", default=None, help="lo:hi:count (default: same as --ugrid)")
    pk.add_argument("--out", default=None)
    pk.set_defaults(func=cmd_kernel)

    pg = sub.add_parser("gap", help="P(largest point <= x) via a Fredholm determinant")
    pg.add_argument("--n", type=int, required=True)
    pg.add_argument("--a", type=float, required=True)
    pg.add_argument("--b", type=float, required=True)
    pg.add_argument("--x", type=float, required=True)
    pg.add_argument("--quad", type=int, default=64)
    pg.add_argument("--out", default=None)
    pg.set_defaults(func=cmd_gap)

    pt = sub.add_parser("tw", help="limiting edge distribution at t")
    pt.add_argument("--t", type=float, required=True)
    pt.add_argument("--quad", type=int, default=64)
    pt.add_argument("--tail", type=float, default=12.0)
    pt.add_argument("--out", default=None)
    pt.set_defaults(func=cmd_tw)

    pa = sub.add_parser("angles", help="principal angles between random subspaces")
    pa.add_argument("--n", type=int, required=True)
    pa.add_argument("--q", type=int, required=True)
    pa.add_argument("--qprime", type=int, required=True)
    pa.add_argument("--trials", type=int, default=100)
    pa.add_argument("--seed", type=int, default=0)
    pa.add_argument("--out", default=None)
    pa.set_defaults(func=cmd_angles)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    try:
        args.func(args)
    except (NumericError, SingularMatrixError) as e:
        print(f"jrmt: numeric failure: {e}", file=sys.stderr)
        return NUMERIC_EXIT
    except JrmtError as e:
        print(f"jrmt: {e}", file=sys.stderr)
        return USAGE_EXIT
    return 0


if __name__ == "__main__":
    sys.exit(main())
