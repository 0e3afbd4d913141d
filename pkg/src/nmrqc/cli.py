"""Command-line front end.

Subcommands:
    run <config.json>     execute an experiment spec from a JSON file
    tables <name>         run a canned benchmark suite (table5 .. table10)
    design ...            print pulse parameters in the parameter-sheet layout
    sweep ...             run a program family over a list of k values
    verify                run the verification suite

Exit status is 0 on success, 1 on verification failure, 2 on bad input.
"""
from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

import numpy as np

from .errors import ConfigurationError, MachineValidationError
from .harness import (ExperimentSpec, canned_names, canned_spec, emit_table,
                      run_experiment, verify_suite)
from .pulses import DEFAULT_GAMMA, ROTATING, STATIC_AXIS, RationalGamma, design_pulse
from .programs import ROTATING_SF, STATIC_SF, STYLES


def parse_angle(text: str) -> float:
    """Angle in radians; accepts plain floats and 'pi' forms like 2pi/3."""
    t = text.strip().lower().replace("*", "")
    m = re.match(r"^(-?)([0-9.]*)pi(?:/([0-9.]+))?$", t)
    if m:
        sign = -1.0 if m.group(1) else 1.0
        num = float(m.group(2)) if m.group(2) else 1.0
        den = float(m.group(3)) if m.group(3) else 1.0
        return sign * num * np.pi / den
    try:
        return float(t)
    except ValueError as exc:
        raise ConfigurationError(f"cannot parse angle {text!r}") from exc


def _write_out(text: str, out: str | None):
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _spec_overrides(spec: ExperimentSpec, args) -> ExperimentSpec:
    d = spec.to_dict()
    if args.delta is not None:
        d["delta"] = args.delta
    if getattr(args, "final_rotation_style", None):
        d["final_rotation_style"] = args.final_rotation_style
    if getattr(args, "tau_offset", None):
        d["tau_offsets"] = [float(x) for x in args.tau_offset]
    return ExperimentSpec.from_dict(d)


def _cmd_run(args) -> int:
    spec = ExperimentSpec.from_json(Path(args.config).read_text(encoding="utf-8"))
    spec = _spec_overrides(spec, args)
    table = run_experiment(spec)
    _write_out(emit_table(table, args.format), args.out)
    return 0


def _cmd_tables(args) -> int:
    spec = _spec_overrides(canned_spec(args.name), args)
    table = run_experiment(spec)
    _write_out(emit_table(table, args.format), args.out)
    return 0


def _design_row(name, design, eo) -> str:
    def turns(phi):
        return f"{phi / np.pi:+.2f}*pi" if phi else "0"
    return " | ".join([
        name, f"{design.t_over_2pi:g}", f"{design.omega:.2f}",
        f"{eo.sf1x:.7f}", f"{eo.sf2x:.7f}", turns(eo.phi_x),
        f"{eo.sf1y:.7f}", f"{eo.sf2y:.7f}", turns(eo.phi_y)])


def _cmd_design(args) -> int:
    gamma = RationalGamma(args.n, args.m)
    mode = {"rotating": ROTATING, "static": STATIC_AXIS,
            "static_axis": STATIC_AXIS}[args.mode]
    angle = parse_angle(args.angle)
    design, eo = design_pulse(args.spin, angle, args.axis, gamma=gamma,
                              k=args.k, mode=mode)
    header = " | ".join(["pulse", "tau/2pi", "omega", "sf1x", "sf2x", "phi_x",
                         "sf1y", "sf2y", "phi_y"])
    label = f"spin{args.spin} {args.axis} {angle:g}rad {mode} k={args.k}"
    lines = [header, _design_row(label, design, eo),
             f"margin 2kNM(M-N) = {design.margin}"]
    _write_out("\n".join(lines), args.out)
    return 0


def _cmd_sweep(args) -> int:
    style = {"rotating": ROTATING_SF, "static": STATIC_SF}.get(args.style, args.style)
    spec = ExperimentSpec(
        kind=args.kind, style=style, cnot_variant=args.variant,
        k_list=tuple(int(k) for k in args.k_list.split(",")),
        delta=args.delta if args.delta is not None else 0.01,
        final_rotation_style=args.final_rotation_style or "program")
    table = run_experiment(spec)
    _write_out(emit_table(table, args.format), args.out)
    return 0


def _cmd_verify(args) -> int:
    report = verify_suite(include_tables=not args.quick)
    _write_out(str(report), args.out)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nmrqc", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", default="markdown",
                        choices=["markdown", "csv", "json"])
        sp.add_argument("--out", default=None, help="write output to a file")
        sp.add_argument("--delta", type=float, default=None,
                        help="integrator step over 2*pi")

    sp = sub.add_parser("run", help="run an experiment from a JSON spec")
    sp.add_argument("config")
    common(sp)
    sp.add_argument("--final-rotation-style", dest="final_rotation_style",
                    choices=["program", "exact"], default=None)
    sp.add_argument("--tau-offset", dest="tau_offset", action="append",
                    help="duration offset for the phase evolution (repeatable)")
    sp.set_defaults(func=_cmd_run)

    sp = sub.add_parser("tables", help="run a canned benchmark suite")
    sp.add_argument("name", choices=list(canned_names()))
    common(sp)
    sp.add_argument("--final-rotation-style", dest="final_rotation_style",
                    choices=["program", "exact"], default=None)
    sp.add_argument("--tau-offset", dest="tau_offset", action="append")
    sp.set_defaults(func=_cmd_tables)

    sp = sub.add_parser("design", help="design a single-spin pulse")
    sp.add_argument("spin", type=int, choices=[1, 2])
    sp.add_argument("angle", help="rotation angle in radians (e.g. pi/2)")
    sp.add_argument("axis", help="x, y, -x, -y")
    sp.add_argument("mode", choices=["rotating", "static", "static_axis"])
    sp.add_argument("k", type=int)
    sp.add_argument("--n", type=int, default=DEFAULT_GAMMA.n)
    sp.add_argument("--m", type=int, default=DEFAULT_GAMMA.m)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=_cmd_design)

    sp = sub.add_parser("sweep", help="sweep a program family over k values")
    sp.add_argument("--kind", choices=["qa", "grover"], default="qa")
    sp.add_argument("--style", default="rotating",
                    help="rotating, static, or any of " + ", ".join(STYLES))
    sp.add_argument("--variant", type=int, default=1, choices=[1, 2, 3])
    sp.add_argument("--k-list", dest="k_list", default="1,2,4,8,32")
    common(sp)
    sp.add_argument("--final-rotation-style", dest="final_rotation_style",
                    choices=["program", "exact"], default=None)
    sp.set_defaults(func=_cmd_sweep)

    sp = sub.add_parser("verify", help="run the verification suite")
    sp.add_argument("--quick", action="store_true",
                    help="skip the benchmark-table comparisons")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=_cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigurationError, MachineValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
