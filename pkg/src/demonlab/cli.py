"""Command-line front end.

Every computation is a subcommand with deterministic, machine-readable
output (JSON records or CSV rows).  Exit codes: 0 success, 1 usage or
validation error, 2 physics invariant violated (a numerics regression, not
a bad invocation).
"""

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

from . import acceptance, demon, numerics, szilard
from .entropy import EUR_BOUND_LEIPNIK, eur_report
from .units import Units

LN2 = math.log(2.0)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PHYSICS = 2

FORMAT_ENV = "DEMONLAB_FORMAT"

DEFAULT_N = 4096
DEFAULT_X_MIN = -8.0
DEFAULT_X_MAX = 8.0
DEFAULT_SEED = 12345


@dataclass(frozen=True)
class RunConfig:
    """Resolved run-wide settings; defaults reproduce the selfcheck numbers."""

    units: Units
    grid: numerics.Grid
    eur_bound: float
    output_format: str
    seed: int


class _Parser(argparse.ArgumentParser):
    """argparse parser that exits 1 (not 2) on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("csv", "json"),
        default=None,
        help=f"output format (default: ${FORMAT_ENV} or the subcommand's natural format)",
    )
    common.add_argument("--units-k", type=float, default=1.0, help="Boltzmann constant (default 1)")
    common.add_argument("--units-hbar", type=float, default=1.0, help="hbar (default 1)")
    common.add_argument("--units-t", type=float, default=1.0, help="temperature (default 1)")
    common.add_argument("--grid-n", type=int, default=DEFAULT_N, help="grid points, power of two")
    common.add_argument("--grid-min", type=float, default=DEFAULT_X_MIN, help="grid lower edge")
    common.add_argument("--grid-max", type=float, default=DEFAULT_X_MAX, help="grid upper edge")
    common.add_argument(
        "--eur-bound",
        type=float,
        default=EUR_BOUND_LEIPNIK,
        help="entropy-sum bound in nats (default ln(e/2); ln(pi e) is the sharp value)",
    )
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled runs")
    return common


def _config(args, natural_format: str) -> RunConfig:
    fmt = args.format or os.environ.get(FORMAT_ENV, "").strip().lower() or natural_format
    if fmt not in ("csv", "json"):
        raise ValueError(f"unsupported output format {fmt!r} (use csv or json)")
    return RunConfig(
        units=Units(k=args.units_k, hbar=args.units_hbar, temperature=args.units_t),
        grid=numerics.Grid(args.grid_n, args.grid_min, args.grid_max),
        eur_bound=args.eur_bound,
        output_format=fmt,
        seed=args.seed,
    )


def _csv_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _emit_record(record: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(record, sort_keys=True, indent=2))
    else:
        print(",".join(record))
        print(",".join(_csv_value(v) for v in record.values()))


def _build_state(args, config: RunConfig) -> numerics.WaveFunction:
    grid = config.grid
    if args.state == "gaussian":
        if args.sigma is None:
            raise ValueError("gaussian needs --sigma")
        return numerics.make_gaussian(grid, args.center, args.sigma, momentum=args.momentum)
    if args.state == "eigenstate":
        if args.length is None:
            raise ValueError("eigenstate needs --length")
        box = numerics.centered_box(args.length)
        return numerics.make_box_eigenstate(grid, box, args.n)
    # truncated-gaussian: centered Gaussian confined to a 6-sigma box, then
    # projected onto one half.
    if args.sigma is None:
        raise ValueError("truncated-gaussian needs --sigma")
    box = numerics.centered_box(6.0 * args.sigma)
    wf = numerics.make_gaussian(grid, 0.0, args.sigma)
    return numerics.project_half(wf, box, args.side)


def cmd_eur(args) -> int:
    config = _config(args, "json")
    wf = _build_state(args, config)
    report = eur_report(wf, bound=config.eur_bound, k=config.units.k)
    record = report.to_dict()
    if args.bits:
        for key in ("h_x", "h_p", "eur_sum", "eur_bound", "thermo_s"):
            record[key] = record[key] / LN2
    _emit_record(record, config.output_format)
    return EXIT_OK if report.satisfies_eur else EXIT_PHYSICS


def cmd_szilard(args) -> int:
    config = _config(args, "json")
    k = config.units.k
    if args.model == "analytic":
        event = szilard.analytic_partition_event(args.length, k=k, hbar=config.units.hbar)
    else:
        box = numerics.centered_box(args.length)
        if args.state == "eigenstate":
            wf = numerics.make_box_eigenstate(config.grid, box, args.n)
        else:
            sigma = args.sigma if args.sigma is not None else args.length / 6.0
            wf = numerics.make_gaussian(config.grid, box.midpoint, sigma)
        event = szilard.numeric_partition_event(wf, box, args.side, k=k)
    _emit_record(event.to_dict(), config.output_format)
    return EXIT_OK


def cmd_cycle(args) -> int:
    config = _config(args, "json" if args.cycles == 1 else "csv")
    k, T = config.units.k, config.units.temperature
    base_cost = args.cost if args.cost is not None else k * LN2
    if args.cycles == 1:
        ledger = demon.szilard_cycle(T, k, base_cost, efficiency=args.efficiency)
        _emit_record(ledger.to_dict(), config.output_format)
        return EXIT_OK if ledger.delta_s_net >= -1e-9 else EXIT_PHYSICS

    def sampler(rng):
        return base_cost + abs(rng.normal(0.0, args.jitter)) if args.jitter > 0 else base_cost

    result = demon.monte_carlo_cycles(
        args.cycles, T, k, sampler, seed=config.seed, efficiency=args.efficiency
    )
    if config.output_format == "csv":
        sys.stdout.write(demon.monte_carlo_csv_text(result))
    else:
        _emit_record(
            {
                "n_cycles": result.n_cycles,
                "mean_delta_s_net": result.mean_delta_s_net,
                "min_delta_s_net": result.min_delta_s_net,
                "total_work": result.total_work,
                "work_per_cycle": result.work_per_cycle,
            },
            "json",
        )
    return EXIT_OK if result.min_delta_s_net >= -1e-9 else EXIT_PHYSICS


def cmd_expansion(args) -> int:
    config = _config(args, "json")
    res = demon.free_expansion_entropy(
        args.molecules, args.ratio, T=config.units.temperature, k=config.units.k
    )
    _emit_record(res.to_dict(), config.output_format)
    return EXIT_OK


def cmd_reset(args) -> int:
    config = _config(args, "json")
    res = demon.norton_reset(args.initial)
    if config.output_format == "json":
        print(res.to_json())
    else:
        print("step,memory,occupied_cells,volume")
        for i, state in enumerate(res.trace):
            cells = "|".join(sorted(state.occupied_cells))
            print(f"{i},{state.memory},{cells},{state.volume}")
    return EXIT_OK


def cmd_aim(args) -> int:
    config = _config(args, "json")
    report = demon.speed_demon_feasibility(args.delta_p, args.door, hbar=config.units.hbar)
    _emit_record(report.to_dict(), config.output_format)
    return EXIT_OK


def _parse_lengths(text: str):
    try:
        lengths = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"could not parse --lengths {text!r} as comma-separated reals") from None
    if not lengths:
        raise ValueError("--lengths must name at least one box length")
    return lengths


def cmd_sweep(args) -> int:
    config = _config(args, "csv")
    k = config.units.k
    rows = []
    for L in _parse_lengths(args.lengths):
        if args.model == "analytic":
            rows.append((L, szilard.analytic_partition_event(L, k=k, hbar=config.units.hbar)))
        else:
            # Scale the grid with the box so every length keeps the same
            # padding factor and resolution.
            grid = numerics.Grid(config.grid.n, -4.0 * L, 4.0 * L)
            box = numerics.centered_box(L)
            if args.state == "eigenstate":
                wf = numerics.make_box_eigenstate(grid, box, args.n)
            else:
                wf = numerics.make_gaussian(grid, 0.0, L / 6.0)
            rows.append((L, szilard.numeric_partition_event(wf, box, args.side, k=k)))
    if config.output_format == "csv":
        sys.stdout.write(szilard.sweep_csv_text(rows))
    else:
        print(
            json.dumps(
                [{"L": L, **ev.to_dict()} for L, ev in rows], sort_keys=True, indent=2
            )
        )
    return EXIT_OK


def cmd_selfcheck(args) -> int:
    _config(args, "json")
    results = acceptance.run_all()
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.number:>2d}  {r.name}  [{r.detail}]")
    return EXIT_OK if all(r.passed for r in results) else EXIT_PHYSICS


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _Parser(
        prog="demonlab",
        description=(
            "Entropy bookkeeping for a single molecule in a box: uncertainty "
            "sums, partition-insertion costs, engine cycle ledgers, free "
            "expansion, memory reset, and the momentum-measurement aiming bound."
        ),
    )
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND")

    p_eur = sub.add_parser(
        "eur", parents=[common], help="position/momentum entropy report for one state"
    )
    p_eur.add_argument(
        "state",
        choices=("gaussian", "eigenstate", "truncated-gaussian"),
        help="state family",
    )
    p_eur.add_argument("--sigma", type=float, default=None, help="Gaussian position spread")
    p_eur.add_argument("--center", type=float, default=0.0, help="Gaussian center")
    p_eur.add_argument("--momentum", type=float, default=0.0, help="plane-wave modulation p0")
    p_eur.add_argument("--length", type=float, default=None, help="box length L")
    p_eur.add_argument("--n", type=int, default=1, help="eigenstate quantum number")
    p_eur.add_argument("--side", choices=("left", "right"), default="left", help="truncation side")
    p_eur.add_argument("--bits", action="store_true", help="report entropies in bits")
    p_eur.set_defaults(func=cmd_eur)

    p_sz = sub.add_parser(
        "szilard", parents=[common], help="partition-insertion event (analytic or numeric)"
    )
    p_sz.add_argument("model", choices=("analytic", "numeric"), help="partition model")
    p_sz.add_argument("--length", type=float, required=True, help="box length L")
    p_sz.add_argument("--state", choices=("eigenstate", "gaussian"), default="eigenstate")
    p_sz.add_argument("--side", choices=("left", "right"), default="left")
    p_sz.add_argument("--n", type=int, default=1, help="eigenstate quantum number")
    p_sz.add_argument("--sigma", type=float, default=None, help="Gaussian spread (default L/6)")
    p_sz.set_defaults(func=cmd_szilard)

    p_cycle = sub.add_parser(
        "cycle", parents=[common], help="engine cycle ledger (one cycle or a seeded batch)"
    )
    p_cycle.add_argument("--temperature", type=float, default=None, help="alias for --units-t")
    p_cycle.add_argument("--cost", type=float, default=None, help="measurement cost (default k ln 2)")
    p_cycle.add_argument("--efficiency", type=float, default=1.0, help="work-extraction efficiency")
    p_cycle.add_argument("--cycles", type=int, default=1, help="number of seeded cycles")
    p_cycle.add_argument(
        "--jitter", type=float, default=0.1, help="half-normal cost spread for batches"
    )
    p_cycle.set_defaults(func=cmd_cycle)

    p_exp = sub.add_parser("expansion", parents=[common], help="free-expansion entropy")
    p_exp.add_argument("--molecules", type=int, default=1, help="molecule count N")
    p_exp.add_argument("--ratio", type=float, required=True, help="volume ratio > 1")
    p_exp.set_defaults(func=cmd_expansion)

    p_reset = sub.add_parser("reset", parents=[common], help="no-erase piston reset of the memory")
    p_reset.add_argument("--initial", choices=("L", "R"), required=True, help="initial memory")
    p_reset.set_defaults(func=cmd_reset)

    p_aim = sub.add_parser(
        "aim", parents=[common], help="feasibility of aiming after a momentum measurement"
    )
    p_aim.add_argument("--delta-p", type=float, required=True, help="momentum accuracy")
    p_aim.add_argument("--door", type=float, required=True, help="door width")
    p_aim.set_defaults(func=cmd_aim)

    p_sweep = sub.add_parser(
        "sweep", parents=[common], help="partition events over a list of box lengths"
    )
    p_sweep.add_argument("--model", choices=("analytic", "numeric"), default="analytic")
    p_sweep.add_argument("--lengths", required=True, help="comma-separated box lengths")
    p_sweep.add_argument("--state", choices=("eigenstate", "gaussian"), default="eigenstate")
    p_sweep.add_argument("--side", choices=("left", "right"), default="left")
    p_sweep.add_argument("--n", type=int, default=1, help="eigenstate quantum number")
    p_sweep.set_defaults(func=cmd_sweep)

    p_check = sub.add_parser(
        "selfcheck", parents=[common], help="run the acceptance battery and report per criterion"
    )
    p_check.set_defaults(func=cmd_selfcheck)

    parser.set_defaults(func=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.func is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    if getattr(args, "temperature", None) is not None:
        args.units_t = args.temperature
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"demonlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
