"""Command-line interface: construct, invariants, link, critical, scan,
reconstruct and chain."""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import curves, files, frames, invariants, isopara, plotting, sphere, variational
from .errors import (
    CRSphereError,
    CurvesIntersect,
    DomainError,
    InflectionPresent,
    NoConvergence,
    NonTransversal,
    Unstable,
)

_VALUE_FLAGS = {
    "--r", "--r-list", "--normal", "--through", "--dir", "--kappa", "--tau",
}


def _join_dash_values(argv):
    """Glue flag values that begin with a dash (e.g. ``--r -5/7``)."""
    out = []
    skip = False
    for i, arg in enumerate(argv):
        if skip:
            skip = False
            continue
        if arg in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append("%s=%s" % (arg, argv[i + 1]))
            skip = True
        else:
            out.append(arg)
    return out


def _parse_complex(text):
    return complex(text.strip().replace("i", "j"))


def _parse_floats(text, n):
    parts = [float(p) for p in text.split(",")]
    if len(parts) != n:
        raise DomainError("expected %d comma-separated numbers" % n)
    return parts


def _parse_rho_grid(text):
    try:
        lo, hi, count = text.split(":")
        lo, hi, count = float(lo), float(hi), int(count)
    except ValueError as exc:
        raise DomainError("rho grid must be lo:hi:n") from exc
    if count < 1:
        raise DomainError("rho grid needs at least one point")
    return np.linspace(lo, hi, count)


def _parse_profile(text):
    """Constant, expression in s, or sampled file for kappa/tau."""
    try:
        return float(text)
    except ValueError:
        pass
    if os.path.exists(text):
        data = np.loadtxt(text, delimiter=",")
        grid, vals = data[:, 0], data[:, 1]
        return lambda s: np.interp(s, grid, vals)
    namespace = {
        "sin": np.sin, "cos": np.cos, "tan": np.tan, "exp": np.exp,
        "sqrt": np.sqrt, "pi": np.pi, "abs": np.abs, "tanh": np.tanh,
    }

    def profile(s, _expr=text, _ns=namespace):
        return float(eval(_expr, {"__builtins__": {}}, {**_ns, "s": s}))

    profile(0.0)
    return profile


def _figure_paths(report_path):
    stem, _ = os.path.splitext(report_path)
    return stem + "_curve.png", stem + "_profile.png"


def cmd_construct(args):
    spec = isopara.IsoparametricSpec(args.kind, args.r, args.rho)
    curve, forms = isopara.build_configuration(spec, samples=args.samples)
    if args.model == "heisenberg":
        curve = curves.project_curve(curve)
    meta = dict(curve.meta)
    meta["knot"] = "(%d,%d)" % forms.knot
    curve = curve.with_values(curve.values, meta=meta)
    files.write_curve(curve, args.out)
    print("wrote %s: %s kind, r = %s, knot %s, spin %s" % (
        args.out, forms.kind, meta["r"], meta["knot"], meta["spin"]))
    return 0


def cmd_invariants(args):
    curve = files.read_curve(args.infile)
    data = curves.compute_wilczynski(curve)
    meta = curve.meta
    report = {
        "kappa_mean": float(np.mean(data.kappa)),
        "kappa_spread": float(np.ptp(data.kappa)),
        "tau_mean": float(np.mean(data.tau)),
        "tau_spread": float(np.ptp(data.tau)),
        "total_strain": curves.total_strain(data.curve),
        "eps_gamma": data.eps_gamma,
        "inflection_count": int(len(curves.inflection_scan(data.curve))),
        "transversal": True,
    }
    spin = "1/3" if abs(data.eps_gamma - 1.0) > 0.5 else "1"
    report["spin"] = spin
    report["anomaly"] = float(np.angle(data.eps_gamma) % (2 * np.pi))
    if {"kind", "r", "rho"} <= set(meta):
        r = isopara.spectral_ratio(meta["r"])
        kind = meta["kind"]
        lift_span, forms = isopara.build_configuration(
            isopara.IsoparametricSpec(kind, r, float(meta["rho"])),
            samples=max(curve.n, 1024), span="lift",
        )
        report["maslov_numeric"] = invariants.maslov_numeric(lift_span)
        report["maslov_closed"] = isopara.maslov_closed(kind, r)
        mono_spin, mono_anomaly = invariants.monodromy(
            lift_span, isopara.curve_minimal_period(forms)
        )
        report["spin"] = mono_spin
        report["anomaly"] = mono_anomaly
        report["knot"] = "(%d,%d)" % forms.knot
    elif abs(data.eps_gamma - 1.0) <= 1e-9 and curve.periodic:
        report["maslov_numeric"] = invariants.maslov_numeric(data.curve)
    if args.report:
        files.write_report(report, args.report)
        curve_png, profile_png = _figure_paths(args.report)
        plotting.curve_figure(data.curve, curve_png)
        plotting.profile_figure(data.curve.s, data.kappa, data.tau, profile_png)
        print("wrote %s (+ figures)" % args.report)
    for key in ("kappa_mean", "tau_mean", "total_strain", "spin", "anomaly",
                "maslov_numeric", "maslov_closed"):
        if key in report:
            print("%s: %s" % (key, report[key]))
    return 0


def cmd_link(args):
    curve = files.read_curve(args.infile)
    if args.pushoff == "contact":
        result = invariants.bennequin_estimate(
            curve, epsilon=args.epsilon, quadrature=args.quadrature
        )
        label = "bennequin"
    else:
        data = curves.compute_wilczynski(curve)
        result = invariants.self_linking_estimate(
            data, epsilon=args.epsilon, quadrature=args.quadrature
        )
        label = "self_linking"
    report = {
        "pushoff": args.pushoff,
        label + "_raw": result.raw_integral,
        label: result.rounded,
        "residual": result.residual,
        "quadrature": result.quadrature_points,
        "epsilon": result.epsilon,
        "stability": "stable under epsilon halving",
        "orientation": "right-handed frame, increasing parameter; Hopf pair convention -1",
    }
    if args.report:
        files.write_report(report, args.report)
        print("wrote %s" % args.report)
    print("%s: %d (raw %.6f, residual %.3g)" % (
        label, result.rounded, result.raw_integral, result.residual))
    return 0


def cmd_critical(args):
    solution, curve, forms = variational.critical_config(args.p, args.q)
    report = {
        "p": solution.p,
        "q": solution.q,
        "r": "%d/%d" % (solution.r.numerator, solution.r.denominator),
        "rho_star": solution.rho_star,
        "kappa": solution.kappa,
        "tau": solution.tau,
        "residual": solution.residual,
        "omega_lift": forms.omega_lift,
        "spin": str(forms.spin),
    }
    if args.out:
        files.write_curve(curve, args.out)
        report["curve_file"] = args.out
    if args.report:
        files.write_report(report, args.report)
        curve_png, _ = _figure_paths(args.report)
        plotting.curve_figure(curve, curve_png)
        print("wrote %s (+ figure)" % args.report)
    print("r = %s, rho* = %.12g, |tau + 9 kappa^2| = %.3g" % (
        report["r"], solution.rho_star, abs(solution.residual)))
    return 0


def _scan_row(kind, r, rho, quadrature):
    row = {"kind": kind, "r": "%d/%d" % (r.numerator, r.denominator), "rho": float(rho)}
    try:
        spec = isopara.IsoparametricSpec(kind, r, float(rho))
    except DomainError:
        return row
    curve, forms = isopara.build_configuration(spec, samples=max(quadrature, 512))
    row.update({
        "kappa": forms.kappa, "tau": forms.tau,
        "p": forms.knot[0], "q": forms.knot[1],
        "spin": str(forms.spin), "maslov": forms.maslov,
        "omega": forms.omega_lift, "strain": curves.total_strain(curve),
    })
    try:
        beta = invariants.bennequin_estimate(curve, quadrature=quadrature)
        row["beta_raw"], row["beta"] = beta.raw_integral, beta.rounded
    except CRSphereError:
        pass
    try:
        data = curves.compute_wilczynski(curve)
        sl = invariants.self_linking_estimate(data, quadrature=quadrature)
        row["sl_raw"], row["sl"] = sl.raw_integral, sl.rounded
    except CRSphereError:
        pass
    return row


def cmd_scan(args):
    ratios = [isopara.spectral_ratio(part) for part in args.r_list.split(",")]
    grid = _parse_rho_grid(args.rho_grid)
    rows = [
        _scan_row(args.kind, r, rho, args.quadrature)
        for r in ratios
        for rho in grid
    ]
    files.write_sweep(rows, args.out)
    stem, _ = os.path.splitext(args.out)
    plotting.sweep_figure(rows, stem + ".png")
    print("wrote %s (%d rows) and %s.png" % (args.out, len(rows), stem))
    return 0


def cmd_reconstruct(args):
    profile = frames.InvariantProfile(_parse_profile(args.kappa), _parse_profile(args.tau))
    result = frames.reconstruct(profile, (0.0, args.length), args.step)
    files.write_curve(result.curve, args.out)
    print("wrote %s; frame defect %.3g, local error %.3g" % (
        args.out, result.max_defect, result.max_local_error))
    return 0


def cmd_chain(args):
    if args.normal:
        normal = np.array([_parse_complex(p) for p in args.normal.split(",")])
        if normal.size != 3:
            raise DomainError("chain normal needs three components")
        curve = sphere.chain_from_normal(normal, samples=args.samples)
    elif args.through and args.direction:
        point = _parse_floats(args.through, 3)
        velocity = _parse_floats(args.direction, 3)
        curve = sphere.chain_through(point, velocity, samples=args.samples)
    else:
        raise DomainError("need --normal or both --through and --dir")
    files.write_curve(curve, args.out)
    print("wrote %s (%d samples, period %.6g)" % (args.out, curve.n, curve.period))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cr3",
        description="CR invariants of transversal curves in the 3-sphere",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a symmetrical configuration")
    p.add_argument("--kind", choices=[isopara.FIRST, isopara.SECOND], required=True)
    p.add_argument("--r", required=True, help="spectral parameter M/N")
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--samples", type=int, default=512)
    p.add_argument("--model", choices=["heisenberg", "lift"], default="heisenberg")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("invariants", help="local and global invariants of a curve file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--report", default=None)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("link", help="linking number with a push-off")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--pushoff", choices=["contact", "crnormal"], required=True)
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--quadrature", type=int, default=1024)
    p.add_argument("--report", default=None)
    p.set_defaults(func=cmd_link)

    p = sub.add_parser("critical", help="critical configuration of the strain functional")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--report", default=None)
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("scan", help="parameter sweep to CSV with a figure")
    p.add_argument("--kind", choices=[isopara.FIRST, isopara.SECOND], required=True)
    p.add_argument("--r-list", dest="r_list", required=True)
    p.add_argument("--rho-grid", dest="rho_grid", required=True)
    p.add_argument("--quadrature", type=int, default=512)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("reconstruct", help="curve from prescribed bending and twist")
    p.add_argument("--kappa", required=True)
    p.add_argument("--tau", required=True)
    p.add_argument("--length", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("chain", help="sample a chain")
    p.add_argument("--normal", default=None)
    p.add_argument("--through", default=None)
    p.add_argument("--dir", dest="direction", default=None)
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_chain)

    return parser


_EXIT_CODES = (
    (NoConvergence, 3),
    (NonTransversal, 4),
    (InflectionPresent, 5),
    (Unstable, 6),
    (CurvesIntersect, 7),
)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(_join_dash_values(argv))
    try:
        return args.func(args)
    except CRSphereError as exc:
        for kind, code in _EXIT_CODES:
            if isinstance(exc, kind):
                print("error: %s" % exc, file=sys.stderr)
                return code
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
