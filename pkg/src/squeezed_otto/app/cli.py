"""Command line interface.

Engine flags resolve with precedence: command-line flag, then ``--config``
file (flat ``key = value`` lines, ``#`` comments), then the NMR defaults.
"""
import argparse
import math
import sys

from .. import optimize, thermo
from ..drive import DriveSchedule, adiabaticity_xi
from ..errors import NonConvergenceError, NotFoundError, OttoError, RangeError, ValidationError
from ..oracle import run_cycle, synthetic_unitary
from ..params import (NMR_BETA_RATIO, NMR_ENERGY_SCALE_PEV, NMR_FREQ_C_KHZ, NMR_OMEGA_RATIO,
                      derive, from_lab_units)
from . import sweeps
from .tables import Table, parse_grid, write
from .verify import verify

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NONCONVERGENCE = 3
EXIT_VERIFY_FAILED = 4

DEFAULTS = {
    "freq_c_khz": NMR_FREQ_C_KHZ,
    "omega_ratio": NMR_OMEGA_RATIO,
    "energy_scale_pev": NMR_ENERGY_SCALE_PEV,
    "beta_ratio": NMR_BETA_RATIO,
    "r": 1.0,
    "format": "csv",
}
ENGINE_KEYS = ("freq_c_khz", "omega_ratio", "energy_scale_pev", "beta_ratio", "r")


def read_config(path):
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValidationError(f"{path}:{lineno}: expected key=value", field="config")
            key, value = (x.strip() for x in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in DEFAULTS:
                raise ValidationError(f"{path}:{lineno}: unknown key {key!r}", field=key)
            values[key] = value if key == "format" else float(value)
    return values


def resolve(args):
    """Merge flags over config over defaults into ``args`` in place."""
    config = read_config(args.config) if args.config else {}
    for key, default in DEFAULTS.items():
        if getattr(args, key, None) is None:
            setattr(args, key, config.get(key, default))
    return args


def engine(args, r=None):
    return from_lab_units(args.freq_c_khz, args.omega_ratio, args.energy_scale_pev,
                          args.beta_ratio, args.r if r is None else r)


def grids(args):
    out = {}
    for item in args.grid or []:
        if "=" not in item:
            raise ValidationError(f"--grid expects AXIS=min:max:step, got {item!r}", field="grid")
        axis, spec = item.split("=", 1)
        out[axis.strip()] = parse_grid(spec)
    return out


def emit(table, args):
    text = write(table, args.out, args.format)
    if args.out is None:
        sys.stdout.write(text)


def cmd_params(args):
    p = engine(args)
    d = derive(p)
    table = Table(
        ("omega_c", "omega_h", "beta_c", "beta_h", "r", "theta_c", "theta_h", "zeta", "mu", "nu",
         "xi_max", "eta_carnot"),
        [(p.omega_c, p.omega_h, p.beta_c, p.beta_h, p.r, d.theta_c, d.theta_h, d.zeta, d.mu, d.nu,
          thermo.xi_max(p), thermo.carnot(p))],
        {"notes": list(d.notes)},
    )
    for note in d.notes:
        print(f"warning: {note}", file=sys.stderr)
    emit(table, args)


def cmd_xi(args):
    p = engine(args)
    taus = [t * 1e-3 for t in parse_grid(args.tau_ms or "0:1:0.1")]
    table = sweeps.adiabaticity_sweep(DriveSchedule.from_params(p), taus, workers=args.workers)
    table = Table(("tau_ms",) + table.columns, [(row[0] * 1e3,) + row for row in table.rows], table.meta)
    emit(table, args)


def cmd_cycle(args):
    p = engine(args)
    if (args.xi is None) == (args.tau_ms is None):
        raise ValidationError("cycle needs exactly one of --xi or --tau-ms", field="xi")
    if args.xi is not None:
        xi = float(args.xi)
        prop = synthetic_unitary(xi, args.phase)
        tau = None
    else:
        tau = float(args.tau_ms) * 1e-3
        prop = adiabaticity_xi(DriveSchedule.from_params(p, tau)).propagator
    ledger = run_cycle(p, prop)
    closed = thermo.cycle_thermo(p, ledger.xi_effective)
    columns = ("r", "xi", "tau", "e1c", "e2h", "e3h", "e4c", "q_hot", "q_cold", "w_expansion",
               "w_compression", "w_net", "eta", "q_hot_closed", "q_cold_closed", "w_net_closed",
               "eta_closed", "xi_max", "eta_carnot")
    row = (p.r, ledger.xi_effective, tau, ledger.e1c, ledger.e2h, ledger.e3h, ledger.e4c,
           ledger.q_hot, ledger.q_cold, ledger.w_expansion, ledger.w_compression, ledger.w_net,
           ledger.eta, closed.q_hot, closed.q_cold, closed.w_net, closed.eta, closed.xi_max,
           thermo.carnot(p))
    emit(Table(columns, [row]), args)


def cmd_efficiency_sweep(args):
    g = grids(args)
    r_grid = g.get("r", parse_grid("0:3:0.01"))
    if args.mode == sweeps.OPTIMIZED_HIGHT:
        xi_list = g.get("xi", parse_grid(args.xi or "0,0.15,0.3,0.4"))
        table = sweeps.efficiency_sweep(args.beta_ratio, r_grid, xi_list, mode=args.mode)
    else:
        xi_list = g.get("xi", parse_grid(args.xi or "0,0.1,0.2,0.3"))
        table = sweeps.efficiency_sweep(engine(args), r_grid, xi_list, mode=args.mode,
                                        work_rate=args.work_rate, t_thermal=args.t_thermal)
    emit(table, args)


def cmd_region_map(args):
    g = grids(args)
    r_grid = g.get("r", parse_grid("0:3:0.02"))
    xi_grid = g.get("xi", parse_grid("0:0.49:0.01"))
    cells = sweeps.region_map(args.beta_ratio, r_grid, xi_grid)
    emit(sweeps.region_table(cells, args.beta_ratio), args)


def cmd_compare_ho(args):
    r_grid = grids(args).get("r", parse_grid("0:3:0.01"))
    emit(sweeps.ho_comparison(args.beta_ratio, r_grid), args)


def cmd_optimize(args):
    p = engine(args)
    xi = float(args.xi or 0.0)
    res = optimize.numeric_max_work(p, xi, ratio_cap=args.ratio_cap)
    try:
        ratio_ht = optimize.opt_ratio_highT(p.beta_ratio, p.r, xi)
        eta_ht = optimize.opt_eff_tls(p.beta_ratio, p.r, xi)
    except RangeError:
        ratio_ht = eta_ht = None
    table = Table(
        ("r", "xi", "ratio_numeric", "omega_h_star", "w_net_star", "eta_star", "ratio_highT",
         "eta_opt_highT"),
        [(p.r, xi, res.ratio, res.omega_h_star, res.w_net_star, res.eta_star, ratio_ht, eta_ht)],
        {"ratio_cap": args.ratio_cap},
    )
    emit(table, args)


def cmd_figure_data(args):
    """Write every plot-ready table into ``--out-dir``."""
    import os

    os.makedirs(args.out_dir, exist_ok=True)
    ext = args.format
    r_grid = parse_grid("0:3:0.01")
    p = engine(args)
    tables = {
        "region_map": sweeps.region_table(
            sweeps.region_map(args.beta_ratio, parse_grid("0:3:0.02"), parse_grid("0:0.49:0.01")),
            args.beta_ratio),
        "efficiency_optimized": sweeps.efficiency_sweep(args.beta_ratio, r_grid, [0.0, 0.15, 0.3, 0.4]),
        "ho_comparison": sweeps.ho_comparison(args.beta_ratio, r_grid),
        "adiabaticity": sweeps.adiabaticity_sweep(DriveSchedule.from_params(p),
                                                  [t * 1e-3 for t in parse_grid("0:2:0.005")],
                                                  workers=args.workers),
        "efficiency_fixed": sweeps.efficiency_sweep(p, r_grid, [0.0, 0.1, 0.2, 0.3], mode=sweeps.FIXED_EXACT),
    }
    for name, table in tables.items():
        write(table, os.path.join(args.out_dir, f"{name}.{ext}"), ext)
        print(os.path.join(args.out_dir, f"{name}.{ext}"))


def cmd_verify(args):
    ok, report = verify(args.draws, args.seed)
    text = report + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _common(sub):
    sub.add_argument("--config", help="flat key=value file")
    sub.add_argument("--freq-c-khz", dest="freq_c_khz", type=float)
    sub.add_argument("--omega-ratio", dest="omega_ratio", type=float)
    sub.add_argument("--energy-scale-pev", dest="energy_scale_pev", type=float)
    sub.add_argument("--beta-ratio", dest="beta_ratio", type=float)
    sub.add_argument("--r", type=float)
    sub.add_argument("--out", help="output path (default: stdout)")
    sub.add_argument("--format", choices=("csv", "json"))
    sub.add_argument("--grid", action="append", metavar="AXIS=MIN:MAX:STEP",
                     help="sweep axis grid, repeatable (axes: r, xi)")


def build_parser():
    parser = argparse.ArgumentParser(prog="squeezed-otto", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("params", help="derived theta, zeta and regime bounds")
    _common(sp)
    sp.set_defaults(func=cmd_params)

    sp = subs.add_parser("xi", help="adiabaticity parameter versus stroke duration")
    _common(sp)
    sp.add_argument("--tau-ms", dest="tau_ms", help="min:max:step or list, in ms")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_xi)

    sp = subs.add_parser("cycle", help="one density-matrix cycle next to the closed forms")
    _common(sp)
    sp.add_argument("--xi", help="prescribed adiabaticity (synthetic unitary)")
    sp.add_argument("--tau-ms", dest="tau_ms", help="stroke duration for the real drive")
    sp.add_argument("--phase", type=float, default=0.0, help="synthetic unitary phase")
    sp.set_defaults(func=cmd_cycle)

    sp = subs.add_parser("efficiency-sweep", help="efficiency versus r for several xi")
    _common(sp)
    sp.add_argument("--mode", choices=(sweeps.OPTIMIZED_HIGHT, sweeps.FIXED_EXACT),
                    default=sweeps.OPTIMIZED_HIGHT)
    sp.add_argument("--xi", help="comma list of xi values")
    sp.add_argument("--work-rate", action="store_true",
                    help="add -w_net/(2 tau + t_thermal) column (fixed mode only)")
    sp.add_argument("--t-thermal", dest="t_thermal", type=float, default=0.0)
    sp.set_defaults(func=cmd_efficiency_sweep)

    sp = subs.add_parser("region-map", help="classify (r, xi) cells against Carnot")
    _common(sp)
    sp.set_defaults(func=cmd_region_map)

    sp = subs.add_parser("compare-ho", help="two-level versus oscillator quasi-static efficiency")
    _common(sp)
    sp.set_defaults(func=cmd_compare_ho)

    sp = subs.add_parser("optimize", help="maximum-work operating point")
    _common(sp)
    sp.add_argument("--xi")
    sp.add_argument("--ratio-cap", dest="ratio_cap", type=float, default=100.0)
    sp.set_defaults(func=cmd_optimize)

    sp = subs.add_parser("figure-data", help="write all plot-ready tables into a directory")
    _common(sp)
    sp.add_argument("--out-dir", dest="out_dir", required=True)
    sp.add_argument("--workers", type=int, default=4)
    sp.set_defaults(func=cmd_figure_data)

    sp = subs.add_parser("verify", help="oracle equivalence over random engines")
    _common(sp)
    sp.add_argument("--draws", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        resolve(args)
        code = args.func(args)
    except (ValidationError, RangeError, NotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except OttoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
